#include "twistkit/hermitian.hpp"

#include <algorithm>

#include "twistkit/errors.hpp"

namespace twistkit {

// ---------------------------------------------------------------------------
// AlmostComplexStructure
// ---------------------------------------------------------------------------

AlmostComplexStructure::AlmostComplexStructure(Matrix m) : mat_(std::move(m)) {
    if (!mat_.is_square()) throw DimensionError("complex structure matrix must be square");
    Matrix sq = mat_ * mat_;
    if (sq != Matrix::identity(mat_.rows()).scaled(Scalar(-1)))
        throw ValidationError("matrix does not square to -identity");
}

VectorField AlmostComplexStructure::apply(const VectorField& X) const {
    VectorField out;
    for (const auto& [a, c] : X.components) {
        for (size_t b = 0; b < mat_.rows(); ++b) {
            Scalar v = mat_.at(b, static_cast<size_t>(a));
            if (v.is_zero()) continue;
            out.add(static_cast<int>(b), c * v);
        }
    }
    return out;
}

Form AlmostComplexStructure::coframe_composed(int a) const {
    Form out(1);
    for (size_t c = 0; c < mat_.cols(); ++c) {
        Scalar v = mat_.at(static_cast<size_t>(a), c);
        if (!v.is_zero()) out.add_term({static_cast<int>(c)}, v);
    }
    return out;
}

// ---------------------------------------------------------------------------
// CovTensor and index operators
// ---------------------------------------------------------------------------

CovTensor CovTensor::from_form(const Form& f) {
    CovTensor t(f.degree());
    for (const auto& [idx, c] : f.terms()) {
        std::vector<int> perm = idx;
        std::sort(perm.begin(), perm.end());
        // Expand the alternating term over all slot orderings.
        do {
            std::vector<int> p = perm;
            IndexTuple sorted = p;
            int sign = sort_sign(sorted);
            t.add(p, sign < 0 ? -c : c);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return t;
}

void CovTensor::add(const std::vector<int>& idx, const Scalar& c) {
    if (c.is_zero()) return;
    if (static_cast<int>(idx.size()) != degree_) throw DegreeError("tensor arity mismatch");
    auto it = entries_.find(idx);
    if (it == entries_.end()) {
        entries_[idx] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) entries_.erase(it);
    }
}

CovTensor operator+(const CovTensor& a, const CovTensor& b) {
    if (a.degree_ != b.degree_) throw DegreeError("tensor degree mismatch");
    CovTensor r = a;
    for (const auto& [idx, c] : b.entries_) r.add(idx, c);
    return r;
}

CovTensor operator-(const CovTensor& a, const CovTensor& b) { return a + b.scaled(Scalar(-1)); }

CovTensor CovTensor::scaled(const Scalar& c) const {
    CovTensor r(degree_);
    if (c.is_zero()) return r;
    for (const auto& [idx, v] : entries_) r.entries_[idx] = v * c;
    return r;
}

Form CovTensor::to_form() const {
    Form out(degree_);
    for (const auto& [idx, c] : entries_) {
        IndexTuple sorted = idx;
        int sign = sort_sign(sorted);
        if (sign == 0) {
            if (!c.is_zero()) throw ValidationError("tensor is not alternating (repeated index)");
            continue;
        }
        // Record only via the sorted representative; consistency checked below.
        if (sorted == idx) out.add_term(sorted, c);
    }
    // Verify all permuted entries agree with the alternating extension.
    CovTensor expanded = CovTensor::from_form(out);
    if (!(expanded == *this)) throw ValidationError("tensor is not alternating");
    return out;
}

CovTensor apply_index(const AlmostComplexStructure& J, const CovTensor& T, int k) {
    if (k < 1 || k > T.degree()) throw DegreeError("slot index out of range");
    const Matrix& m = J.matrix();
    CovTensor out(T.degree());
    for (const auto& [idx, c] : T.entries()) {
        // (I_(k) T)(..., X_a, ...) = -T(..., J X_a, ...)
        //                          = -sum_b m[b][a] T(..., X_b, ...).
        // Reindexed: out[idx with slot k = a] += -m[b][a] T[idx with slot k = b].
        int b = idx[static_cast<size_t>(k - 1)];
        for (size_t a = 0; a < m.cols(); ++a) {
            Scalar v = m.at(static_cast<size_t>(b), a);
            if (v.is_zero()) continue;
            std::vector<int> target = idx;
            target[static_cast<size_t>(k - 1)] = static_cast<int>(a);
            out.add(target, -(c * v));
        }
    }
    return out;
}

CovTensor apply_index(const AlmostComplexStructure& J, const Form& alpha, int k) {
    return apply_index(J, CovTensor::from_form(alpha), k);
}

Form apply_all(const AlmostComplexStructure& J, const Form& alpha) {
    const int p = alpha.degree();
    if (p == 0) return alpha;
    Form out(p);
    for (const auto& [idx, c] : alpha.terms()) {
        Form piece(Scalar(1));
        for (int k : idx) piece = wedge(piece, J.coframe_composed(k));
        Scalar coeff = (p % 2 == 1) ? -c : c;  // (-1)^p
        out += piece.scaled(coeff);
    }
    return out;
}

Form slot_sum(const AlmostComplexStructure& J, const Form& alpha) {
    const int p = alpha.degree();
    Form out(p);
    if (p == 0) return out;
    for (const auto& [idx, c] : alpha.terms()) {
        for (size_t k = 0; k < idx.size(); ++k) {
            Form piece(Scalar(1));
            for (size_t j = 0; j < idx.size(); ++j) {
                if (j == k) piece = wedge(piece, -J.coframe_composed(idx[j]));
                else piece = wedge(piece, Form::basis({idx[j]}));
            }
            out += piece.scaled(c);
        }
    }
    return out;
}

Form type_component(const AlmostComplexStructure& J, const Form& alpha, int p, int q) {
    const int n = alpha.degree();
    if (p < 0 || q < 0 || p + q != n) throw DegreeError("type (p, q) must satisfy p + q = degree");
    if (n == 0) return alpha;
    // slot_sum acts on type (r, s) with eigenvalue i(s - r); Lagrange
    // interpolation over the spectrum isolates the (p, q) part exactly.
    Form out = alpha;
    const Scalar i = Scalar::i();
    const long target = q - p;
    for (int r = 0; r <= n; ++r) {
        long ev = (n - r) - r;  // eigenvalue/i for type (r, n - r)
        if (ev == target) continue;
        Form num = slot_sum(J, out) - out.scaled(i * Scalar(ev));
        Scalar denom = i * Scalar(target - ev);
        out = num.scaled(denom.inverse());
    }
    return out;
}

// ---------------------------------------------------------------------------
// HermitianMetric
// ---------------------------------------------------------------------------

HermitianMetric::HermitianMetric(Matrix g) : g_(std::move(g)) {
    if (!g_.is_square() || !g_.is_symmetric())
        throw ValidationError("metric matrix must be symmetric");
    if (g_.determinant().is_zero()) throw ValidationError("metric matrix is degenerate");
}

bool HermitianMetric::compatible_with(const AlmostComplexStructure& J) const {
    // g(JX, JY) = g(X, Y)  <=>  J^T g J = g.
    return J.matrix().transpose() * g_ * J.matrix() == g_;
}

Scalar HermitianMetric::inner(const VectorField& X, const VectorField& Y) const {
    Scalar out;
    for (const auto& [a, xa] : X.components) {
        for (const auto& [b, yb] : Y.components) {
            Scalar v = g_.at(static_cast<size_t>(a), static_cast<size_t>(b));
            if (v.is_zero()) continue;
            out += xa * yb * v;
        }
    }
    return out;
}

Form HermitianMetric::flat(const VectorField& X) const {
    Form out(1);
    for (size_t a = 0; a < g_.rows(); ++a) {
        Scalar v;
        for (const auto& [b, xb] : X.components) {
            v += g_.at(a, static_cast<size_t>(b)) * xb;
        }
        if (!v.is_zero()) out.add_term({static_cast<int>(a)}, v);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Nijenhuis, Kaehler form, Bismut torsion
// ---------------------------------------------------------------------------

VectorValuedTwoForm nijenhuis(const CoframeModel& M, const AlmostComplexStructure& J) {
    const int n = M.dimension();
    if (J.dimension() != n) throw DimensionError("structure dimension does not match model");
    VectorValuedTwoForm out(n);
    for (int a = 0; a < n; ++a) {
        VectorField Xa = VectorField::frame(a);
        VectorField JXa = J.apply(Xa);
        for (int b = a + 1; b < n; ++b) {
            VectorField Xb = VectorField::frame(b);
            VectorField JXb = J.apply(Xb);
            VectorField N = lie_bracket(M, Xa, Xb) + J.apply(lie_bracket(M, JXa, Xb)) +
                            J.apply(lie_bracket(M, Xa, JXb)) - lie_bracket(M, JXa, JXb);
            for (const auto& [k, c] : N.components) {
                if (!c.is_zero()) out.comp[static_cast<size_t>(k)].add_term({a, b}, c);
            }
        }
    }
    return out;
}

Form kaehler_form(const HermitianMetric& g, const AlmostComplexStructure& J) {
    if (!g.compatible_with(J)) throw IncompatibleMetric("metric is not compatible with the structure");
    const int n = g.dimension();
    Form omega(2);
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            // omega(X_a, X_b) = g(J X_a, X_b).
            Scalar v;
            for (size_t c = 0; c < static_cast<size_t>(n); ++c) {
                v += J.matrix().at(c, static_cast<size_t>(a)) *
                     g.matrix().at(c, static_cast<size_t>(b));
            }
            if (!v.is_zero()) omega.add_term({a, b}, v);
        }
    }
    return omega;
}

Form bismut_torsion(const CoframeModel& M, const HermitianMetric& g,
                    const AlmostComplexStructure& J) {
    if (!nijenhuis(M, J).is_zero())
        throw NotIntegrable("Bismut torsion requires an integrable complex structure");
    Form omega = kaehler_form(g, J);
    return -apply_all(J, exterior_derivative(M, omega));
}

SktReport is_skt(const CoframeModel& M, const HermitianMetric& g,
                 const AlmostComplexStructure& J) {
    SktReport report;
    report.integrable = nijenhuis(M, J).is_zero();
    Form omega = kaehler_form(g, J);
    report.torsion = -apply_all(J, exterior_derivative(M, omega));
    report.d_torsion = exterior_derivative(M, report.torsion);
    report.skt = report.integrable && report.d_torsion.is_zero();
    return report;
}

bool preserves_structure(const CoframeModel& M, const VectorField& X,
                         const AlmostComplexStructure& J) {
    for (int b = 0; b < M.dimension(); ++b) {
        VectorField Y = VectorField::frame(b);
        VectorField lie = lie_bracket(M, X, J.apply(Y)) - J.apply(lie_bracket(M, X, Y));
        if (!lie.is_zero()) return false;
    }
    return true;
}

bool preserves_metric(const CoframeModel& M, const VectorField& X, const HermitianMetric& g) {
    for (int a = 0; a < M.dimension(); ++a) {
        for (int b = a; b < M.dimension(); ++b) {
            VectorField Ya = VectorField::frame(a);
            VectorField Yb = VectorField::frame(b);
            Scalar v = apply_vector(M, X, g.matrix().at(static_cast<size_t>(a), static_cast<size_t>(b)));
            v -= g.inner(lie_bracket(M, X, Ya), Yb);
            v -= g.inner(Ya, lie_bracket(M, X, Yb));
            if (!v.is_zero()) return false;
        }
    }
    return true;
}

}  // namespace twistkit
