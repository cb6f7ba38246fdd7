#pragma once

#include <map>
#include <string>
#include <vector>

#include "twistkit/form.hpp"
#include "twistkit/report.hpp"

namespace twistkit {

/// Vector field expanded in the dual frame X_0..X_{N-1}.
struct VectorField {
    std::map<int, Scalar> components;

    static VectorField frame(int index) {
        VectorField v;
        v.components[index] = Scalar(1);
        return v;
    }

    Scalar component(int index) const {
        auto it = components.find(index);
        return it == components.end() ? Scalar() : it->second;
    }

    bool is_zero() const;
    void add(int index, const Scalar& c);
    VectorField scaled(const Scalar& c) const;
    friend VectorField operator+(const VectorField& a, const VectorField& b);
    friend VectorField operator-(const VectorField& a, const VectorField& b);
    VectorField operator-() const { return scaled(Scalar(-1)); }
    friend bool operator==(const VectorField& a, const VectorField& b);
    friend bool operator!=(const VectorField& a, const VectorField& b) { return !(a == b); }

    std::string str(const std::vector<std::string>& coframe_names) const;
};

/// Finite invariant coframe model: coframe e^0..e^{N-1} with structure
/// 2-forms de^i, plus global coordinates whose differentials lie in the
/// coframe span.
struct CoframeModel {
    std::vector<std::string> coframe_names;
    std::vector<std::string> coordinates;
    std::vector<Form> structure;                 // de^i, degree 2
    std::vector<Form> coordinate_differentials;  // dx^j in the coframe, degree 1

    int dimension() const { return static_cast<int>(coframe_names.size()); }
    int coframe_index(const std::string& name) const;  // throws UnknownName
    int coordinate_index(const std::string& name) const;

    /// dx^j paired with X: the coefficient of X in the coordinate direction.
    Scalar coordinate_pairing(int coord, const VectorField& X) const;
};

/// Flat model: all structure forms zero, no coordinates.
CoframeModel flat_model(const std::vector<std::string>& names);

// --- Exterior calculus -----------------------------------------------------

Form wedge_product(const Form& a, const Form& b);  // alias of wedge

/// Interior product (first slot); antiderivation of degree -1.
Form interior(const VectorField& X, const Form& alpha);

/// Value alpha(X_1, ..., X_p) of a p-form on vector fields.
Scalar evaluate_form(const Form& alpha, const std::vector<VectorField>& args);

/// Exterior derivative using the model's structure equations and coordinate
/// differentials. Coefficients must only involve declared coordinates.
Form exterior_derivative(const CoframeModel& M, const Form& alpha);

/// Derivative of a function along a vector field: X(f) = sum_j df/dx^j dx^j(X).
Scalar apply_vector(const CoframeModel& M, const VectorField& X, const Scalar& f);

/// Lie bracket: frame bracket from the structure equations plus the Leibniz
/// rule over Scalar coefficients.
VectorField lie_bracket(const CoframeModel& M, const VectorField& X, const VectorField& Y);

/// Cartan formula L_X = d i_X + i_X d.
Form lie_derivative(const CoframeModel& M, const VectorField& X, const Form& alpha);

/// Checks d^2 e^i = 0 for every coframe element and d(dx^j) = 0 for every
/// coordinate. Violations are report entries, not exceptions.
ValidationReport validate_model(const CoframeModel& M);

// --- Vector-valued 2-forms ---------------------------------------------------

/// Sum_k X_k (x) F_k, stored canonically: comp[a] is the 2-form tensored with
/// the frame vector X_a.
struct VectorValuedTwoForm {
    std::vector<Form> comp;

    explicit VectorValuedTwoForm(int dimension = 0) : comp(dimension, Form(2)) {}

    static VectorValuedTwoForm from_entries(
        int dimension, const std::vector<std::pair<VectorField, Form>>& entries);

    bool is_zero() const;
    friend VectorValuedTwoForm operator+(const VectorValuedTwoForm& a, const VectorValuedTwoForm& b);
    friend VectorValuedTwoForm operator-(const VectorValuedTwoForm& a, const VectorValuedTwoForm& b);
    VectorValuedTwoForm scaled(const Scalar& c) const;
    friend bool operator==(const VectorValuedTwoForm& a, const VectorValuedTwoForm& b);
    friend bool operator!=(const VectorValuedTwoForm& a, const VectorValuedTwoForm& b) {
        return !(a == b);
    }

    /// Value as a vector field.
    VectorField value(const VectorField& X, const VectorField& Y) const;

    std::string str(const std::vector<std::string>& coframe_names) const;
};

}  // namespace twistkit
