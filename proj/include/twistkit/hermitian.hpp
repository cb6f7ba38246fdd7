#pragma once

#include <map>
#include <string>
#include <vector>

#include "twistkit/linalg.hpp"
#include "twistkit/model.hpp"

namespace twistkit {

/// Almost complex structure as an N x N Scalar matrix acting on the frame:
/// J X_a = sum_b matrix[b][a] X_b. Construction verifies J^2 = -Id exactly.
class AlmostComplexStructure {
public:
    explicit AlmostComplexStructure(Matrix m);

    const Matrix& matrix() const { return mat_; }
    int dimension() const { return static_cast<int>(mat_.rows()); }

    VectorField apply(const VectorField& X) const;

    /// The 1-form e^a composed with J: (e^a o J)(X_c) = matrix[a][c].
    Form coframe_composed(int a) const;

private:
    Matrix mat_;
};

/// Sparse covariant p-tensor (not necessarily alternating); used for the
/// slot-wise index operators, which leave the alternating subspace.
class CovTensor {
public:
    explicit CovTensor(int degree) : degree_(degree) {}
    static CovTensor from_form(const Form& f);

    int degree() const { return degree_; }
    bool is_zero() const { return entries_.empty(); }
    const std::map<std::vector<int>, Scalar>& entries() const { return entries_; }

    void add(const std::vector<int>& idx, const Scalar& c);

    friend CovTensor operator+(const CovTensor& a, const CovTensor& b);
    friend CovTensor operator-(const CovTensor& a, const CovTensor& b);
    CovTensor scaled(const Scalar& c) const;

    friend bool operator==(const CovTensor& a, const CovTensor& b) {
        return a.degree_ == b.degree_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const CovTensor& a, const CovTensor& b) { return !(a == b); }

    /// Converts back to a Form; throws if the tensor is not alternating.
    Form to_form() const;

private:
    int degree_;
    std::map<std::vector<int>, Scalar> entries_;
};

/// I_{(k)} T = -T(..., J . in slot k, ...); 1-based slot index.
CovTensor apply_index(const AlmostComplexStructure& J, const CovTensor& T, int k);
CovTensor apply_index(const AlmostComplexStructure& J, const Form& alpha, int k);

/// I_{(1...p)} = I_{(1)} ... I_{(p)}; equals (-1)^p alpha(J., ..., J.) and
/// preserves forms.
Form apply_all(const AlmostComplexStructure& J, const Form& alpha);

/// Slot sum I_{(1)} + ... + I_{(p)}: the derivation extending I_{(1)};
/// preserves forms, with eigenvalue i(q - p) on type (p, q).
Form slot_sum(const AlmostComplexStructure& J, const Form& alpha);

/// Projection onto type (p, q); requires p + q = degree.
Form type_component(const AlmostComplexStructure& J, const Form& alpha, int p, int q);

/// Riemannian metric g(X_a, X_b) as a symmetric nondegenerate Scalar matrix.
class HermitianMetric {
public:
    explicit HermitianMetric(Matrix g);

    const Matrix& matrix() const { return g_; }
    int dimension() const { return static_cast<int>(g_.rows()); }

    bool compatible_with(const AlmostComplexStructure& J) const;

    Scalar inner(const VectorField& X, const VectorField& Y) const;
    /// Musical flat: X^b = g(X, .) as a 1-form.
    Form flat(const VectorField& X) const;

private:
    Matrix g_;
};

/// Nijenhuis tensor as a vector-valued 2-form; zero exactly when the
/// structure is integrable. Sign convention fixed so that the twist
/// transfer identity N_W = N + (1 - L_I)F holds in this calculus.
VectorValuedTwoForm nijenhuis(const CoframeModel& M, const AlmostComplexStructure& J);

/// Kaehler form omega(X, Y) = g(JX, Y); requires compatibility.
Form kaehler_form(const HermitianMetric& g, const AlmostComplexStructure& J);

/// Bismut torsion 3-form c = -J d omega; requires integrability and
/// compatibility.
Form bismut_torsion(const CoframeModel& M, const HermitianMetric& g,
                    const AlmostComplexStructure& J);

struct SktReport {
    bool integrable = false;
    Form torsion{3};
    Form d_torsion{4};
    bool skt = false;  // integrable and d(torsion) == 0
};

/// Computes c and dc; the torsion is evaluated formally even when the
/// structure fails integrability (the verdict records the failure).
SktReport is_skt(const CoframeModel& M, const HermitianMetric& g, const AlmostComplexStructure& J);

/// L_X applied to J as a (1,1)-tensor: (L_X J)(Y) = [X, JY] - J[X, Y];
/// zero iff the flow of X preserves J.
bool preserves_structure(const CoframeModel& M, const VectorField& X,
                         const AlmostComplexStructure& J);

/// L_X g = 0 test via (L_X g)(Y,Z) = X(g(Y,Z)) - g([X,Y],Z) - g(Y,[X,Z]).
bool preserves_metric(const CoframeModel& M, const VectorField& X, const HermitianMetric& g);

}  // namespace twistkit
