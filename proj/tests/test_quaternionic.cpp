#include <doctest.h>

#include "testutil.hpp"
#include "twistkit/errors.hpp"
#include "twistkit/quaternionic.hpp"
#include "twistkit/zoo.hpp"

using namespace twistkit;

namespace {

Form b2f(int i, int j) { return Form::basis({i, j}); }

HypercomplexTriple flat_triple(int blocks) {
    HyperkaehlerBlock q = quaternion_block();
    std::vector<Matrix> is(blocks, q.I), js(blocks, q.J), ks(blocks, q.K);
    return HypercomplexTriple(AlmostComplexStructure(block_diagonal(is)),
                              AlmostComplexStructure(block_diagonal(js)),
                              AlmostComplexStructure(block_diagonal(ks)));
}

HypercomplexTriple triple_of(const NamedExample& ex, const std::string& name = "H") {
    const auto& names = ex.file.triple(name);
    return HypercomplexTriple(ex.file.complex_structure(names[0]),
                              ex.file.complex_structure(names[1]),
                              ex.file.complex_structure(names[2]));
}

}  // namespace

TEST_CASE("quaternion relations are enforced") {
    HyperkaehlerBlock q = quaternion_block();
    CHECK_NOTHROW(HypercomplexTriple(AlmostComplexStructure(q.I), AlmostComplexStructure(q.J),
                                     AlmostComplexStructure(q.K)));
    // Swapping J and K breaks IJ = K.
    CHECK_THROWS_AS(HypercomplexTriple(AlmostComplexStructure(q.I), AlmostComplexStructure(q.K),
                                       AlmostComplexStructure(q.J)),
                    ValidationError);
}

TEST_CASE("is_hypercomplex") {
    CHECK(is_hypercomplex(flat_torus_model(4, "b", 0), flat_triple(1)).hypercomplex);

    // The twisted model of the non-HKT surrogate stays hypercomplex.
    NamedExample hc = make_example("hc_not_hkt_surrogate");
    CoframeModel W = build_twisted_model(hc.file.model, *hc.file.twist);
    CHECK(is_hypercomplex(W, triple_of(hc)).hypercomplex);

    // A single bad direction destroys it: F = omega_J of the base on one
    // fibre circle.
    TwistData bad;
    bad.xi = {VectorField::frame(4)};
    bad.F = {b2f(0, 2) - b2f(1, 3)};
    bad.a = Matrix::identity(1);
    CoframeModel Wbad = build_twisted_model(hc.file.model, bad);
    HypercomplexReport rep = is_hypercomplex(Wbad, triple_of(hc));
    CHECK(!rep.hypercomplex);
}

TEST_CASE("is_hkt") {
    // Flat hyperkaehler torus: all three forms vanish.
    HermitianMetric g4(Matrix::identity(4));
    HktReport flat = is_hkt(flat_torus_model(4, "b", 0), g4, flat_triple(1));
    CHECK(flat.equal);
    CHECK(flat.torsion_candidate[0].is_zero());

    // Halfline twist with the transferred metric is HKT.
    NamedExample hl = make_example("halfline_t3");
    CoframeModel W = build_twisted_model(hl.file.model, *hl.file.twist);
    HktReport rep = is_hkt(W, hl.file.metric("g"), triple_of(hl));
    CHECK(rep.equal);
    CHECK(rep.hypercomplex);
    Scalar two_over_x0 = Scalar(2) / Scalar::variable("x0");
    CHECK(rep.torsion_candidate[0] == Form::basis({1, 2, 3}, two_over_x0));

    // The non-instanton surrogate twist is hypercomplex but not HKT.
    NamedExample hc = make_example("hc_not_hkt_surrogate");
    CoframeModel Whc = build_twisted_model(hc.file.model, *hc.file.twist);
    HktReport rep2 = is_hkt(Whc, hc.file.metric("g"), triple_of(hc));
    CHECK(!rep2.equal);
    CHECK(rep2.hypercomplex);
}

TEST_CASE("hkt_twist_condition on the halfline reproduces the closed form") {
    NamedExample hl = make_example("halfline_t3");
    HktTwistReport rep = hkt_twist_condition(hl.file.model, *hl.file.twist, hl.file.metric("g"),
                                             triple_of(hl));
    CHECK(rep.equal);
    CHECK(rep.twisted_is_hkt);
    Form expected = Form::basis({1, 2, 3}, Scalar(2) / Scalar::variable("x0"));
    for (int k = 0; k < 3; ++k) CHECK(rep.term[k] == expected);
}

TEST_CASE("hkt_twist_condition fails on the surrogate with the published terms") {
    NamedExample hc = make_example("hc_not_hkt_surrogate");
    HktTwistReport rep = hkt_twist_condition(hc.file.model, *hc.file.twist, hc.file.metric("g"),
                                             triple_of(hc));
    CHECK(!rep.equal);
    CHECK(!rep.twisted_is_hkt);
    Form F0 = b2f(0, 1) - b2f(2, 3);
    Form FI = b2f(0, 1) + b2f(2, 3);
    Form FJ = b2f(0, 2) - b2f(1, 3);
    Form FK = b2f(0, 3) + b2f(1, 2);
    auto eb = [](int k) { return Form::basis({4 + k}); };
    Form i_term = wedge(F0, eb(0)) + wedge(FI, eb(1)) - wedge(FJ, eb(2)) - wedge(FK, eb(3));
    Form j_term = wedge(F0, eb(0)) - wedge(FI, eb(1)) + wedge(FJ, eb(2)) - wedge(FK, eb(3));
    CHECK(rep.term[0] == i_term);
    CHECK(rep.term[1] == j_term);
    CHECK(rep.term[0] != rep.term[1]);
}

TEST_CASE("hypercomplex_twist_condition") {
    NamedExample hc = make_example("hc_not_hkt_surrogate");
    HypercomplexTwistReport rep =
        hypercomplex_twist_condition(hc.file.model, *hc.file.twist, triple_of(hc));
    CHECK(rep.holds);
    CHECK(rep.twisted_is_hypercomplex);

    // Instanton data holds too.
    NamedExample inst = make_example("hkt_instanton_t4xt4");
    CHECK(hypercomplex_twist_condition(inst.file.model, *inst.file.twist, triple_of(inst)).holds);

    // A lone omega_J term is J-type (1,1), hence fixed by L_J, but fails
    // for I and K, so the full condition breaks.
    TwistData bad;
    bad.xi = {VectorField::frame(4)};
    bad.F = {b2f(0, 2) - b2f(1, 3)};
    bad.a = Matrix::identity(1);
    HypercomplexTwistReport rep2 =
        hypercomplex_twist_condition(hc.file.model, bad, triple_of(hc));
    CHECK(!rep2.holds);
    CHECK(rep2.fixed_by[1]);
    CHECK(!rep2.fixed_by[0]);
    CHECK(!rep2.fixed_by[2]);
    CHECK(!rep2.twisted_is_hypercomplex);
}

TEST_CASE("is_instanton") {
    HypercomplexTriple H = flat_triple(1);
    // omega_I is (1,1) for I but not for J.
    CHECK(!is_instanton({b2f(0, 1) + b2f(2, 3)}, H));
    // The anti-self-dual form b01 - b23 is (1,1) for all three.
    CHECK(is_instanton({b2f(0, 1) - b2f(2, 3)}, H));
    CHECK(is_instanton({b2f(0, 2) + b2f(1, 3), b2f(0, 3) - b2f(1, 2)}, H));
    // The halfline curvature F_I = b01 fails: J F_I != F_I.
    NamedExample hl = make_example("halfline_t3");
    CHECK(!is_instanton(hl.file.twist->F, triple_of(hl)));
    const auto& J = hl.file.complex_structure("J");
    CHECK(apply_all(J, b2f(0, 1)) != b2f(0, 1));
}

TEST_CASE("structure action eigenvalue identity") {
    // L_A solves x^2 + 2x - 3 = 0 on vector-valued 2-forms.
    testutil::Rng rng(777);
    CoframeModel M = flat_torus_model(4, "b", 0);
    HypercomplexTriple H = flat_triple(1);
    for (int rep = 0; rep < 10; ++rep) {
        VectorValuedTwoForm T(4);
        for (int a = 0; a < 4; ++a) T.comp[static_cast<size_t>(a)] = rng.constant_form(4, 2, 2);
        for (int k = 0; k < 3; ++k) {
            const AlmostComplexStructure& A = H.structure(k);
            VectorValuedTwoForm L1 = structure_action(M, A, T);
            VectorValuedTwoForm L2 = structure_action(M, A, L1);
            VectorValuedTwoForm zero = L2 + L1.scaled(Scalar(2)) - T.scaled(Scalar(3));
            CHECK(zero.is_zero());
        }
    }
}

TEST_CASE("random instantons keep both twist conditions") {
    testutil::Rng rng(778);
    NamedExample inst = make_example("hkt_instanton_t4xt4");
    const CoframeModel& M = inst.file.model;
    HypercomplexTriple H = triple_of(inst);
    HermitianMetric g(Matrix::identity(8));
    Form A1 = b2f(0, 1) - b2f(2, 3);
    Form A2 = b2f(0, 2) + b2f(1, 3);
    Form A3 = b2f(0, 3) - b2f(1, 2);
    for (int rep = 0; rep < 5; ++rep) {
        TwistData T;
        for (int k = 0; k < 4; ++k) {
            T.xi.push_back(VectorField::frame(4 + k));
            Form f = A1.scaled(Scalar(rng.integer(-2, 2))) +
                     A2.scaled(Scalar(rng.integer(-2, 2))) +
                     A3.scaled(Scalar(rng.integer(-2, 2)));
            T.F.push_back(f);
        }
        T.a = Matrix::identity(4);
        CHECK(is_instanton(T.F, H));
        CHECK(hkt_twist_condition(M, T, g, H).equal);
        CHECK(hypercomplex_twist_condition(M, T, H).holds);
    }
}

TEST_CASE("volume twist condition") {
    // Instanton twist with the action living off the base: the contraction
    // vanishes and d_W Theta = 0.
    NamedExample inst = make_example("hkt_instanton_t4xt4");
    VolumeTwistReport rep =
        volume_twist_condition(inst.file.model, *inst.file.twist,
                               inst.file.complex_structure("I"), inst.file.named_form("Theta"));
    CHECK(rep.holds);
    CHECK(rep.d_theta_twisted_zero);

    // Purely (2,0)+(0,2) curvature holds vacuously even with xi . F != 0.
    CoframeModel M4 = flat_torus_model(4);
    AlmostComplexStructure I4(pair_rotation(4, {{0, 1}, {2, 3}}));
    Form theta = wedge(Form::basis({0}) + Form::basis({1}).scaled(Scalar::i()),
                       Form::basis({2}) + Form::basis({3}).scaled(Scalar::i()));
    TwistData T;
    T.xi = {VectorField::frame(3)};
    T.F = {b2f(0, 2) - b2f(1, 3)};  // type (2,0)+(0,2) for I4
    T.a = Matrix::identity(1);
    CHECK(type_component(I4, T.F[0], 1, 1).is_zero());
    VolumeTwistReport rep2 = volume_twist_condition(M4, T, I4, theta);
    CHECK(rep2.holds);
    // The d_W Theta equivalence is a statement about complex twists; this
    // data does not make I_W integrable, so only the contraction is pinned.

    // A (1,1) curvature with xi . F^{1,1} != 0 breaks d_W Theta = 0.
    TwistData bad;
    bad.xi = {VectorField::frame(3)};
    bad.F = {b2f(2, 3)};
    bad.a = Matrix::identity(1);
    VolumeTwistReport rep3 = volume_twist_condition(M4, bad, I4, theta);
    CHECK(!rep3.holds);
    CHECK(!rep3.d_theta_twisted_zero);

    // On the hypercomplex surrogate (a complex twist) the equivalence holds
    // with both sides true.
    NamedExample hc = make_example("hc_not_hkt_surrogate");
    VolumeTwistReport rep4 =
        volume_twist_condition(hc.file.model, *hc.file.twist, hc.file.complex_structure("I"),
                               hc.file.named_form("Theta"));
    CHECK(rep4.holds);
    CHECK(rep4.d_theta_twisted_zero);

    // Closedness of Theta is a precondition.
    NamedExample hl = make_example("halfline_t3");
    Form open_form = Form::basis({1}, Scalar::variable("x0"));
    CHECK_THROWS_AS(
        volume_twist_condition(hl.file.model, *hl.file.twist, hl.file.complex_structure("I"),
                               open_form),
        ValidationError);
}

TEST_CASE("sl volume check") {
    // Flat hyperkaehler T^8 with Theta = (omega_J + i omega_K)^2.
    NamedExample inst = make_example("hkt_instanton_t4xt4");
    const CoframeModel& M = inst.file.model;
    HypercomplexTriple H = triple_of(inst);
    const Form& theta = inst.file.named_form("Theta");
    SlVolumeReport rep = sl_volume_check(M, H, theta);
    CHECK(rep.closed);
    CHECK(rep.j_real);

    // On the twisted model both properties survive.
    CoframeModel W = build_twisted_model(M, *inst.file.twist);
    SlVolumeReport repw = sl_volume_check(W, H, theta);
    CHECK(repw.closed);
    CHECK(repw.j_real);

    // Perturbing by i omega_I^2 breaks J Theta = conj Theta.
    HermitianMetric g(Matrix::identity(8));
    Form omega_i = kaehler_form(g, H.I());
    Form perturbed = theta + wedge(omega_i, omega_i).scaled(Scalar::i());
    SlVolumeReport rep2 = sl_volume_check(M, H, perturbed);
    CHECK(!rep2.j_real);
}
