#include "twistkit/model.hpp"

#include <algorithm>
#include <sstream>

#include "twistkit/errors.hpp"

namespace twistkit {

// ---------------------------------------------------------------------------
// VectorField
// ---------------------------------------------------------------------------

bool VectorField::is_zero() const {
    for (const auto& [k, c] : components) {
        if (!c.is_zero()) return false;
    }
    return true;
}

void VectorField::add(int index, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = components.find(index);
    if (it == components.end()) {
        components[index] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) components.erase(it);
    }
}

VectorField VectorField::scaled(const Scalar& c) const {
    VectorField r;
    if (c.is_zero()) return r;
    for (const auto& [k, v] : components) r.components[k] = v * c;
    return r;
}

VectorField operator+(const VectorField& a, const VectorField& b) {
    VectorField r = a;
    for (const auto& [k, c] : b.components) r.add(k, c);
    return r;
}

VectorField operator-(const VectorField& a, const VectorField& b) { return a + (-b); }

bool operator==(const VectorField& a, const VectorField& b) {
    return (a - b).is_zero();
}

std::string VectorField::str(const std::vector<std::string>& coframe_names) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : components) {
        std::string base = "~" + coframe_names.at(static_cast<size_t>(k));
        std::string raw = c.str();
        bool negative = !raw.empty() && raw[0] == '-';
        Scalar mag = negative ? -c : c;
        std::string piece = mag.is_one() ? base : mag.str_factor() + "*" + base;
        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        os << piece;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// CoframeModel
// ---------------------------------------------------------------------------

int CoframeModel::coframe_index(const std::string& name) const {
    auto it = std::find(coframe_names.begin(), coframe_names.end(), name);
    if (it == coframe_names.end()) throw UnknownName("unknown coframe element '" + name + "'");
    return static_cast<int>(it - coframe_names.begin());
}

int CoframeModel::coordinate_index(const std::string& name) const {
    auto it = std::find(coordinates.begin(), coordinates.end(), name);
    if (it == coordinates.end()) throw UnknownName("unknown coordinate '" + name + "'");
    return static_cast<int>(it - coordinates.begin());
}

Scalar CoframeModel::coordinate_pairing(int coord, const VectorField& X) const {
    const Form& dx = coordinate_differentials.at(static_cast<size_t>(coord));
    Scalar out;
    for (const auto& [idx, c] : dx.terms()) {
        out += c * X.component(idx[0]);
    }
    return out;
}

CoframeModel flat_model(const std::vector<std::string>& names) {
    CoframeModel m;
    m.coframe_names = names;
    m.structure.assign(names.size(), Form(2));
    return m;
}

// ---------------------------------------------------------------------------
// Exterior calculus
// ---------------------------------------------------------------------------

Form wedge_product(const Form& a, const Form& b) { return wedge(a, b); }

Form interior(const VectorField& X, const Form& alpha) {
    if (alpha.degree() == 0) throw DegreeError("interior product of a degree-0 form");
    Form r(alpha.degree() - 1);
    for (const auto& [idx, c] : alpha.terms()) {
        for (size_t k = 0; k < idx.size(); ++k) {
            Scalar comp = X.component(idx[k]);
            if (comp.is_zero()) continue;
            IndexTuple rest;
            rest.reserve(idx.size() - 1);
            for (size_t j = 0; j < idx.size(); ++j) {
                if (j != k) rest.push_back(idx[j]);
            }
            Scalar v = c * comp;
            if (k % 2 == 1) v = -v;
            r.add_term(rest, v);
        }
    }
    return r;
}

Scalar evaluate_form(const Form& alpha, const std::vector<VectorField>& args) {
    if (static_cast<int>(args.size()) != alpha.degree())
        throw DegreeError("evaluate_form arity mismatch");
    if (alpha.degree() == 0) return alpha.scalar_value();
    // alpha(X1,...,Xp) = (i_Xp ... i_X1 alpha) since interior fills the first slot.
    Form f = alpha;
    for (const auto& X : args) {
        f = interior(X, f);
        if (f.is_zero()) return Scalar();
        if (f.degree() == 0) break;
    }
    return f.scalar_value();
}

namespace {

void check_declared(const CoframeModel& M, const Scalar& c) {
    for (const auto& var : c.variables()) {
        if (std::find(M.coordinates.begin(), M.coordinates.end(), var) == M.coordinates.end())
            throw UndeclaredCoordinate(var);
    }
}

Form scalar_differential(const CoframeModel& M, const Scalar& f) {
    check_declared(M, f);
    Form df(1);
    for (size_t j = 0; j < M.coordinates.size(); ++j) {
        Scalar pd = f.partial_derivative(M.coordinates[j]);
        if (pd.is_zero()) continue;
        df += M.coordinate_differentials[j].scaled(pd);
    }
    return df;
}

// d(e^{i1..ip}) = sum_k (-1)^{k-1} de^{ik} ^ e^{i1..\hat{ik}..ip}
Form basis_differential(const CoframeModel& M, const IndexTuple& idx) {
    Form out(static_cast<int>(idx.size()) + 1);
    for (size_t k = 0; k < idx.size(); ++k) {
        IndexTuple rest;
        for (size_t j = 0; j < idx.size(); ++j) {
            if (j != k) rest.push_back(idx[j]);
        }
        Form piece = wedge(M.structure.at(static_cast<size_t>(idx[k])), Form::basis(rest));
        if (k % 2 == 1) piece = -piece;
        out += piece;
    }
    return out;
}

}  // namespace

Form exterior_derivative(const CoframeModel& M, const Form& alpha) {
    Form out(alpha.degree() + 1);
    for (const auto& [idx, c] : alpha.terms()) {
        out += wedge(scalar_differential(M, c), Form::basis(idx));
        out += basis_differential(M, idx).scaled(c);
    }
    return out;
}

Scalar apply_vector(const CoframeModel& M, const VectorField& X, const Scalar& f) {
    check_declared(M, f);
    Scalar out;
    for (size_t j = 0; j < M.coordinates.size(); ++j) {
        Scalar pd = f.partial_derivative(M.coordinates[j]);
        if (pd.is_zero()) continue;
        out += pd * M.coordinate_pairing(static_cast<int>(j), X);
    }
    return out;
}

VectorField lie_bracket(const CoframeModel& M, const VectorField& X, const VectorField& Y) {
    VectorField out;
    const int n = M.dimension();
    // Frame part: e^k([X_a, X_b]) = -de^k(X_a, X_b).
    for (const auto& [a, xa] : X.components) {
        for (const auto& [b, yb] : Y.components) {
            if (a == b) continue;
            Scalar coeff = xa * yb;
            if (coeff.is_zero()) continue;
            for (int k = 0; k < n; ++k) {
                const Form& dek = M.structure[static_cast<size_t>(k)];
                if (dek.is_zero()) continue;
                Scalar v = a < b ? dek.coefficient({a, b}) : -dek.coefficient({b, a});
                if (v.is_zero()) continue;
                out.add(k, -(coeff * v));
            }
        }
    }
    // Leibniz part: X(Y^k) X_k - Y(X^k) X_k.
    for (const auto& [k, yk] : Y.components) out.add(k, apply_vector(M, X, yk));
    for (const auto& [k, xk] : X.components) out.add(k, -apply_vector(M, Y, xk));
    return out;
}

Form lie_derivative(const CoframeModel& M, const VectorField& X, const Form& alpha) {
    if (alpha.degree() == 0) {
        return Form(apply_vector(M, X, alpha.scalar_value()));
    }
    Form a = exterior_derivative(M, interior(X, alpha));
    Form b = interior(X, exterior_derivative(M, alpha));
    return a + b;
}

ValidationReport validate_model(const CoframeModel& M) {
    ValidationReport report;
    for (size_t i = 0; i < M.coframe_names.size(); ++i) {
        Form dd = exterior_derivative(M, M.structure[i]);
        report.add("d2(" + M.coframe_names[i] + ") = 0", dd.is_zero(),
                   dd.is_zero() ? "" : dd.str(M.coframe_names));
    }
    for (size_t j = 0; j < M.coordinates.size(); ++j) {
        Form dd = exterior_derivative(M, M.coordinate_differentials[j]);
        report.add("d(d" + M.coordinates[j] + ") = 0", dd.is_zero(),
                   dd.is_zero() ? "" : dd.str(M.coframe_names));
    }
    return report;
}

// ---------------------------------------------------------------------------
// VectorValuedTwoForm
// ---------------------------------------------------------------------------

VectorValuedTwoForm VectorValuedTwoForm::from_entries(
    int dimension, const std::vector<std::pair<VectorField, Form>>& entries) {
    VectorValuedTwoForm out(dimension);
    for (const auto& [X, F] : entries) {
        if (F.degree() != 2) throw DegreeError("vector-valued 2-form entry of wrong degree");
        for (const auto& [a, c] : X.components) {
            out.comp.at(static_cast<size_t>(a)) += F.scaled(c);
        }
    }
    return out;
}

bool VectorValuedTwoForm::is_zero() const {
    for (const auto& f : comp) {
        if (!f.is_zero()) return false;
    }
    return true;
}

VectorValuedTwoForm operator+(const VectorValuedTwoForm& a, const VectorValuedTwoForm& b) {
    if (a.comp.size() != b.comp.size()) throw DimensionError("vector-valued form size mismatch");
    VectorValuedTwoForm r(static_cast<int>(a.comp.size()));
    for (size_t k = 0; k < a.comp.size(); ++k) r.comp[k] = a.comp[k] + b.comp[k];
    return r;
}

VectorValuedTwoForm operator-(const VectorValuedTwoForm& a, const VectorValuedTwoForm& b) {
    return a + b.scaled(Scalar(-1));
}

VectorValuedTwoForm VectorValuedTwoForm::scaled(const Scalar& c) const {
    VectorValuedTwoForm r(static_cast<int>(comp.size()));
    for (size_t k = 0; k < comp.size(); ++k) r.comp[k] = comp[k].scaled(c);
    return r;
}

bool operator==(const VectorValuedTwoForm& a, const VectorValuedTwoForm& b) {
    return a.comp == b.comp;
}

VectorField VectorValuedTwoForm::value(const VectorField& X, const VectorField& Y) const {
    VectorField out;
    for (size_t a = 0; a < comp.size(); ++a) {
        out.add(static_cast<int>(a), evaluate_form(comp[a], {X, Y}));
    }
    return out;
}

std::string VectorValuedTwoForm::str(const std::vector<std::string>& coframe_names) const {
    std::ostringstream os;
    bool first = true;
    for (size_t a = 0; a < comp.size(); ++a) {
        if (comp[a].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "~" << coframe_names.at(a) << " (x) (" << comp[a].str(coframe_names) << ")";
    }
    if (first) return "0";
    return os.str();
}

}  // namespace twistkit
