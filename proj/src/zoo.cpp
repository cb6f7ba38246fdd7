#include "twistkit/zoo.hpp"

#include <algorithm>
#include <sstream>

#include "twistkit/errors.hpp"
#include "twistkit/quaternionic.hpp"

namespace twistkit {

CoframeModel flat_torus_model(int n, const std::string& prefix, int start_index) {
    std::vector<std::string> names;
    for (int k = 0; k < n; ++k) names.push_back(prefix + std::to_string(start_index + k));
    return flat_model(names);
}

HyperkaehlerBlock quaternion_block() {
    auto mat = [](std::initializer_list<std::pair<std::pair<int, int>, int>> entries) {
        Matrix m(4, 4);
        for (const auto& [pos, v] : entries) {
            m.at(static_cast<size_t>(pos.first), static_cast<size_t>(pos.second)) = Scalar(v);
        }
        return m;
    };
    HyperkaehlerBlock block{
        // left multiplication by i: X0->X1, X1->-X0, X2->X3, X3->-X2
        mat({{{1, 0}, 1}, {{0, 1}, -1}, {{3, 2}, 1}, {{2, 3}, -1}}),
        // left multiplication by j: X0->X2, X1->-X3, X2->-X0, X3->X1
        mat({{{2, 0}, 1}, {{3, 1}, -1}, {{0, 2}, -1}, {{1, 3}, 1}}),
        // left multiplication by k: X0->X3, X1->X2, X2->-X1, X3->-X0
        mat({{{3, 0}, 1}, {{2, 1}, 1}, {{1, 2}, -1}, {{0, 3}, -1}}),
    };
    return block;
}

Matrix block_diagonal(const std::vector<Matrix>& blocks) {
    size_t n = 0;
    for (const auto& b : blocks) n += b.rows();
    Matrix m(n, n);
    size_t off = 0;
    for (const auto& b : blocks) {
        for (size_t r = 0; r < b.rows(); ++r) {
            for (size_t c = 0; c < b.cols(); ++c) m.at(off + r, off + c) = b.at(r, c);
        }
        off += b.rows();
    }
    return m;
}

Matrix pair_rotation(int n, const std::vector<std::pair<int, int>>& pairs) {
    Matrix m(static_cast<size_t>(n), static_cast<size_t>(n));
    for (const auto& [a, b] : pairs) {
        m.at(static_cast<size_t>(b), static_cast<size_t>(a)) = Scalar(1);
        m.at(static_cast<size_t>(a), static_cast<size_t>(b)) = Scalar(-1);
    }
    return m;
}

namespace {

Form b2(int i, int j) { return Form::basis({i, j}); }

void add_check(NamedExample& ex, bool expect_pass, const std::string& name,
               std::vector<std::string> args = {}) {
    ex.file.checks.push_back({name, std::move(args)});
    ex.expected.push_back(expect_pass);
}

Matrix identity_times(size_t n, const Scalar& s) {
    Matrix m = Matrix::identity(n);
    return m.scaled(s);
}

// Hyperkaehler two-forms of the standard flat block starting at offset:
// omega_I = b01 + b23, omega_J = b02 - b13, omega_K = b03 + b12.
Form omega_block(int offset, int which) {
    switch (which) {
        case 0: return b2(offset, offset + 1) + b2(offset + 2, offset + 3);
        case 1: return b2(offset, offset + 2) - b2(offset + 1, offset + 3);
        case 2: return b2(offset, offset + 3) + b2(offset + 1, offset + 2);
        default: throw Error("bad block index");
    }
}

NamedExample flat_torus_example(int n) {
    NamedExample ex;
    ex.name = "flat_torus(" + std::to_string(n) + ")";
    ex.file.model = flat_torus_model(n);
    add_check(ex, true, "validate_model");
    return ex;
}

NamedExample kodaira_thurston_example() {
    NamedExample ex;
    ex.name = "kodaira_thurston";
    ex.file.model = flat_torus_model(4);
    ex.file.complexes.emplace_back(
        "I", AlmostComplexStructure(pair_rotation(4, {{0, 1}, {2, 3}})));
    TwistData T;
    T.xi = {VectorField::frame(3)};
    T.F = {-b2(0, 1)};
    T.a = Matrix::identity(1);
    ex.file.twist = T;
    add_check(ex, true, "validate_model");
    add_check(ex, true, "validate_twist_data");
    // Orbit of xi = X4 has IX4 outside the span: s = 0, r = 1.
    add_check(ex, true, "twist_integrability", {"I", "0", "1"});
    add_check(ex, true, "build_twisted_model");
    add_check(ex, true, "dual_twist_data");
    return ex;
}

NamedExample skt_t2xt2_example() {
    NamedExample ex;
    ex.name = "skt_t2xt2_bundle";
    ex.file.model = flat_torus_model(6, "b", 0);
    ex.file.complexes.emplace_back(
        "I", AlmostComplexStructure(pair_rotation(6, {{0, 1}, {2, 3}, {4, 5}})));
    ex.file.metrics.emplace_back("g", HermitianMetric(Matrix::identity(6)));
    TwistData T;
    T.xi = {VectorField::frame(4), VectorField::frame(5)};
    T.F = {b2(0, 1), b2(2, 3)};
    T.a = Matrix::identity(2);
    ex.file.twist = T;
    add_check(ex, true, "validate_model");
    add_check(ex, true, "validate_twist_data");
    add_check(ex, true, "is_skt", {"g", "I"});
    // xi spans a complex direction: s = 1, r = 2.
    add_check(ex, true, "twist_integrability", {"I", "1", "2"});
    add_check(ex, true, "build_twisted_model");
    add_check(ex, true, "dual_twist_data");
    return ex;
}

NamedExample skt_non_instanton_example(int e1, int e2) {
    NamedExample ex;
    ex.name = "skt_non_instanton";
    if (!(e1 == 1 && e2 == 1)) {
        ex.name += "(" + std::to_string(e1) + "," + std::to_string(e2) + ")";
    }
    ex.file.model = flat_torus_model(6, "b", 0);
    ex.file.complexes.emplace_back(
        "I", AlmostComplexStructure(pair_rotation(6, {{0, 1}, {2, 3}, {4, 5}})));
    ex.file.metrics.emplace_back("g", HermitianMetric(Matrix::identity(6)));
    TwistData T;
    T.xi = {VectorField::frame(4), VectorField::frame(5)};
    T.F = {omega_block(0, 0).scaled(Scalar(e1)) + omega_block(0, 1),
           omega_block(0, 0).scaled(Scalar(e2)) + omega_block(0, 2)};
    T.a = Matrix::identity(2);
    ex.file.twist = T;
    add_check(ex, true, "validate_model");
    add_check(ex, true, "validate_twist_data");
    add_check(ex, true, "twist_integrability", {"I", "1", "2"});
    add_check(ex, true, "build_twisted_model");
    add_check(ex, true, "dual_twist_data");
    return ex;
}

NamedExample halfline_t3_example() {
    NamedExample ex;
    ex.name = "halfline_t3";
    ex.domain_note = "coordinate domain x0 != 0 (model of R_{>0} x T^3)";
    CoframeModel M = flat_torus_model(4, "b", 0);
    M.coordinates = {"x0"};
    M.coordinate_differentials = {Form::basis({0})};
    ex.file.model = M;
    HyperkaehlerBlock q = quaternion_block();
    ex.file.complexes.emplace_back("I", AlmostComplexStructure(q.I));
    ex.file.complexes.emplace_back("J", AlmostComplexStructure(q.J));
    ex.file.complexes.emplace_back("K", AlmostComplexStructure(q.K));
    ex.file.triples.emplace_back("H", std::array<std::string, 3>{"I", "J", "K"});
    ex.file.metrics.emplace_back("g", HermitianMetric(Matrix::identity(4)));
    TwistData T;
    T.xi = {VectorField::frame(1), VectorField::frame(2), VectorField::frame(3)};
    T.F = {b2(0, 1), b2(0, 2), b2(0, 3)};
    T.a = identity_times(3, -Scalar::variable("x0"));
    ex.file.twist = T;
    add_check(ex, true, "validate_model");
    add_check(ex, true, "validate_twist_data");
    add_check(ex, true, "is_hkt", {"g", "H"});
    add_check(ex, true, "hkt_twist_condition", {"g", "H"});
    add_check(ex, false, "is_instanton", {"H"});
    add_check(ex, true, "hypercomplex_twist_condition", {"H"});
    add_check(ex, true, "build_twisted_model");
    add_check(ex, true, "dual_twist_data");
    return ex;
}

NamedExample hc_not_hkt_example() {
    NamedExample ex;
    ex.name = "hc_not_hkt_surrogate";
    std::vector<std::string> names;
    for (int k = 0; k < 4; ++k) names.push_back("c" + std::to_string(k));
    for (int k = 0; k < 4; ++k) names.push_back("b" + std::to_string(k));
    ex.file.model = flat_model(names);
    HyperkaehlerBlock q = quaternion_block();
    ex.file.complexes.emplace_back("I", AlmostComplexStructure(block_diagonal({q.I, q.I})));
    ex.file.complexes.emplace_back("J", AlmostComplexStructure(block_diagonal({q.J, q.J})));
    ex.file.complexes.emplace_back("K", AlmostComplexStructure(block_diagonal({q.K, q.K})));
    ex.file.triples.emplace_back("H", std::array<std::string, 3>{"I", "J", "K"});
    ex.file.metrics.emplace_back("g", HermitianMetric(Matrix::identity(8)));
    // F0 anti-self-dual (an instanton), then the three base Kaehler forms.
    TwistData T;
    T.xi = {VectorField::frame(4), VectorField::frame(5), VectorField::frame(6),
            VectorField::frame(7)};
    T.F = {b2(0, 1) - b2(2, 3), omega_block(0, 0), omega_block(0, 1), omega_block(0, 2)};
    T.a = Matrix::identity(4);
    ex.file.twist = T;

    HermitianMetric g(Matrix::identity(8));
    HypercomplexTriple H(AlmostComplexStructure(block_diagonal({q.I, q.I})),
                         AlmostComplexStructure(block_diagonal({q.J, q.J})),
                         AlmostComplexStructure(block_diagonal({q.K, q.K})));
    ex.file.forms.emplace_back("Theta", quaternionic_volume(g, H, 2));

    add_check(ex, true, "validate_model");
    add_check(ex, true, "validate_twist_data");
    add_check(ex, true, "is_hypercomplex", {"H"});
    add_check(ex, true, "is_hkt", {"g", "H"});
    add_check(ex, false, "is_instanton", {"H"});
    add_check(ex, true, "hypercomplex_twist_condition", {"H"});
    add_check(ex, false, "hkt_twist_condition", {"g", "H"});
    add_check(ex, true, "volume_twist_condition", {"I", "Theta"});
    add_check(ex, true, "sl_volume_check", {"H", "Theta"});
    add_check(ex, true, "build_twisted_model");
    add_check(ex, true, "dual_twist_data");
    return ex;
}

NamedExample su2_su2_example() {
    NamedExample ex;
    ex.name = "su2_su2";
    CoframeModel M = flat_model({"e1", "e2", "e3", "f1", "f2", "f3"});
    // de^i = -e^j ^ e^k cyclically on each factor.
    M.structure[0] = -b2(1, 2);
    M.structure[1] = b2(0, 2);
    M.structure[2] = -b2(0, 1);
    M.structure[3] = -b2(4, 5);
    M.structure[4] = b2(3, 5);
    M.structure[5] = -b2(3, 4);
    ex.file.model = M;
    // Samelson-type structure rotating within each factor and pairing the
    // two remaining directions; sign chosen so the torsion is the sum of
    // the two positively oriented volume forms.
    ex.file.complexes.emplace_back(
        "I", AlmostComplexStructure(pair_rotation(6, {{0, 1}, {2, 5}, {3, 4}})));
    ex.file.metrics.emplace_back("g", HermitianMetric(Matrix::identity(6)));
    add_check(ex, true, "validate_model");
    add_check(ex, true, "nijenhuis", {"I"});
    add_check(ex, true, "is_skt", {"g", "I"});
    add_check(ex, true, "bismut_torsion", {"g", "I"});
    return ex;
}

NamedExample hkt_instanton_example() {
    NamedExample ex;
    ex.name = "hkt_instanton_t4xt4";
    std::vector<std::string> names;
    for (int k = 0; k < 4; ++k) names.push_back("c" + std::to_string(k));
    for (int k = 0; k < 4; ++k) names.push_back("b" + std::to_string(k));
    ex.file.model = flat_model(names);
    HyperkaehlerBlock q = quaternion_block();
    ex.file.complexes.emplace_back("I", AlmostComplexStructure(block_diagonal({q.I, q.I})));
    ex.file.complexes.emplace_back("J", AlmostComplexStructure(block_diagonal({q.J, q.J})));
    ex.file.complexes.emplace_back("K", AlmostComplexStructure(block_diagonal({q.K, q.K})));
    ex.file.triples.emplace_back("H", std::array<std::string, 3>{"I", "J", "K"});
    ex.file.metrics.emplace_back("g", HermitianMetric(Matrix::identity(8)));
    // Anti-self-dual basis of the base block: all of type (1,1) for I, J, K.
    Form A1 = b2(0, 1) - b2(2, 3);
    Form A2 = b2(0, 2) + b2(1, 3);
    Form A3 = b2(0, 3) - b2(1, 2);
    TwistData T;
    T.xi = {VectorField::frame(4), VectorField::frame(5), VectorField::frame(6),
            VectorField::frame(7)};
    T.F = {A1, A2, A3, A1 + A2};
    T.a = Matrix::identity(4);
    ex.file.twist = T;

    HermitianMetric g(Matrix::identity(8));
    HypercomplexTriple H(AlmostComplexStructure(block_diagonal({q.I, q.I})),
                         AlmostComplexStructure(block_diagonal({q.J, q.J})),
                         AlmostComplexStructure(block_diagonal({q.K, q.K})));
    ex.file.forms.emplace_back("Theta", quaternionic_volume(g, H, 2));

    add_check(ex, true, "validate_model");
    add_check(ex, true, "validate_twist_data");
    add_check(ex, true, "is_instanton", {"H"});
    add_check(ex, true, "is_hkt", {"g", "H"});
    add_check(ex, true, "hkt_twist_condition", {"g", "H"});
    add_check(ex, true, "hypercomplex_twist_condition", {"H"});
    add_check(ex, true, "volume_twist_condition", {"I", "Theta"});
    add_check(ex, true, "sl_volume_check", {"H", "Theta"});
    add_check(ex, true, "build_twisted_model");
    add_check(ex, true, "dual_twist_data");
    return ex;
}

bool parse_int_args(const std::string& name, const std::string& prefix,
                    std::vector<int>* out) {
    if (name.size() <= prefix.size() + 1 || name.compare(0, prefix.size(), prefix) != 0)
        return false;
    if (name[prefix.size()] != '(' || name.back() != ')') return false;
    std::string inner = name.substr(prefix.size() + 1, name.size() - prefix.size() - 2);
    std::istringstream is(inner);
    std::string piece;
    while (std::getline(is, piece, ',')) {
        try {
            out->push_back(std::stoi(piece));
        } catch (...) {
            return false;
        }
    }
    return !out->empty();
}

}  // namespace

std::vector<std::string> example_registry() {
    return {"flat_torus(n)",    "kodaira_thurston",      "skt_t2xt2_bundle",
            "skt_non_instanton", "skt_non_instanton(e1,e2)", "halfline_t3",
            "hc_not_hkt_surrogate", "su2_su2",            "hkt_instanton_t4xt4"};
}

NamedExample make_example(const std::string& name) {
    std::vector<int> args;
    if (parse_int_args(name, "flat_torus", &args)) {
        if (args.size() != 1 || args[0] < 1) throw UnknownName("flat_torus needs one positive n");
        return flat_torus_example(args[0]);
    }
    if (parse_int_args(name, "skt_non_instanton", &args)) {
        if (args.size() != 2 || (args[0] != 1 && args[0] != -1) || (args[1] != 1 && args[1] != -1))
            throw UnknownName("skt_non_instanton takes signs (+-1, +-1)");
        return skt_non_instanton_example(args[0], args[1]);
    }
    if (name == "kodaira_thurston") return kodaira_thurston_example();
    if (name == "skt_t2xt2_bundle") return skt_t2xt2_example();
    if (name == "skt_non_instanton") return skt_non_instanton_example(1, 1);
    if (name == "halfline_t3") return halfline_t3_example();
    if (name == "hc_not_hkt_surrogate") return hc_not_hkt_example();
    if (name == "su2_su2") return su2_su2_example();
    if (name == "hkt_instanton_t4xt4") return hkt_instanton_example();
    std::string registry;
    for (const auto& n : example_registry()) registry += (registry.empty() ? "" : ", ") + n;
    throw UnknownName("unknown example '" + name + "'; registry: " + registry);
}

// ---------------------------------------------------------------------------
// Lifting-function solver
// ---------------------------------------------------------------------------

namespace {

// Exact solve of rows * c = rhs over Q(i); returns false when inconsistent.
// Free variables are set to zero.
bool gauss_solve(std::vector<std::vector<GaussianRational>> rows,
                 std::vector<GaussianRational> rhs, size_t unknowns,
                 std::vector<GaussianRational>* solution) {
    size_t m = rows.size();
    std::vector<size_t> pivot_of_col(unknowns, SIZE_MAX);
    size_t rank = 0;
    for (size_t col = 0; col < unknowns && rank < m; ++col) {
        size_t pivot = SIZE_MAX;
        for (size_t r = rank; r < m; ++r) {
            if (!rows[r][col].is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot == SIZE_MAX) continue;
        std::swap(rows[rank], rows[pivot]);
        std::swap(rhs[rank], rhs[pivot]);
        GaussianRational inv = rows[rank][col].inverse();
        for (size_t c = col; c < unknowns; ++c) rows[rank][c] *= inv;
        rhs[rank] = rhs[rank] * inv;
        for (size_t r = 0; r < m; ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            GaussianRational f = rows[r][col];
            for (size_t c = col; c < unknowns; ++c) rows[r][c] -= f * rows[rank][c];
            rhs[r] -= f * rhs[rank];
        }
        pivot_of_col[col] = rank;
        ++rank;
    }
    for (size_t r = rank; r < m; ++r) {
        if (!rhs[r].is_zero()) return false;
    }
    solution->assign(unknowns, GaussianRational(0));
    for (size_t col = 0; col < unknowns; ++col) {
        if (pivot_of_col[col] != SIZE_MAX) (*solution)[col] = rhs[pivot_of_col[col]];
    }
    return true;
}

}  // namespace

std::optional<Matrix> solve_lifting_function(const CoframeModel& M,
                                             const std::vector<VectorField>& xi,
                                             const std::vector<Form>& F,
                                             const std::vector<Scalar>& ansatz) {
    if (xi.size() != F.size()) throw DimensionError("xi and F must have equal rank");
    for (const auto& x : xi) {
        for (const auto& f : F) {
            if (!lie_derivative(M, x, f).is_zero())
                throw ValidationError("solve_lifting_function requires L_xi F = 0");
        }
    }
    const size_t n = xi.size();
    const size_t nb = ansatz.size();
    std::vector<Form> dphi;
    for (const auto& phi : ansatz) dphi.push_back(exterior_derivative(M, Form(phi)));

    Matrix a(n, n);
    for (size_t j = 0; j < n; ++j) {
        for (size_t i = 0; i < n; ++i) {
            Form target = -twist_contraction(F[j], xi[i]);  // required d a[j][i]
            // One Scalar equation per coframe component; clear denominators
            // and match monomials to get exact linear rows.
            std::vector<std::vector<GaussianRational>> rows;
            std::vector<GaussianRational> rhs;
            for (int m = 0; m < M.dimension(); ++m) {
                Scalar t = target.coefficient({m});
                std::vector<Scalar> coeffs(nb);
                Polynomial common(GaussianRational(1));
                for (size_t b = 0; b < nb; ++b) {
                    coeffs[b] = dphi[b].coefficient({m});
                    common *= coeffs[b].denominator();
                }
                common *= t.denominator();
                Scalar clear{common};
                std::vector<Polynomial> polys(nb);
                std::set<Monomial, GradedLexLess> support;
                for (size_t b = 0; b < nb; ++b) {
                    Scalar v = coeffs[b] * clear;
                    if (!v.denominator().is_one())
                        throw Error("internal: denominator did not clear");
                    polys[b] = v.numerator();
                    for (const auto& [mono, cc] : polys[b].terms()) support.insert(mono);
                }
                Scalar tv = t * clear;
                if (!tv.denominator().is_one()) throw Error("internal: denominator did not clear");
                for (const auto& [mono, cc] : tv.numerator().terms()) support.insert(mono);
                for (const auto& mono : support) {
                    std::vector<GaussianRational> row(nb);
                    for (size_t b = 0; b < nb; ++b) {
                        auto it = polys[b].terms().find(mono);
                        if (it != polys[b].terms().end()) row[b] = it->second;
                    }
                    auto it = tv.numerator().terms().find(mono);
                    rhs.push_back(it != tv.numerator().terms().end() ? it->second
                                                                     : GaussianRational(0));
                    rows.push_back(std::move(row));
                }
            }
            std::vector<GaussianRational> solution;
            if (!gauss_solve(std::move(rows), std::move(rhs), nb, &solution)) return std::nullopt;
            Scalar entry;
            for (size_t b = 0; b < nb; ++b) {
                if (!solution[b].is_zero()) entry += ansatz[b] * Scalar(solution[b]);
            }
            a.at(j, i) = entry;
        }
    }

    // Constant shifts keep the lifting equation; use one to reach an
    // invertible representative.
    for (long lambda : {0L, 1L, -1L, 2L, -2L, 3L, -3L, 4L, -4L, 5L, -5L, 6L, -6L, 7L, -7L, 8L}) {
        Matrix candidate = a + identity_times(n, Scalar(lambda));
        if (!candidate.determinant().is_zero()) return candidate;
    }
    return std::nullopt;
}

}  // namespace twistkit
