#include <doctest.h>

#include "testutil.hpp"
#include "twistkit/errors.hpp"
#include "twistkit/hermitian.hpp"
#include "twistkit/zoo.hpp"

using namespace twistkit;

namespace {

AlmostComplexStructure quaternion_i() { return AlmostComplexStructure(quaternion_block().I); }
AlmostComplexStructure quaternion_j() { return AlmostComplexStructure(quaternion_block().J); }

Form b2f(int i, int j) { return Form::basis({i, j}); }

}  // namespace

TEST_CASE("complex structure construction") {
    CHECK_THROWS_AS(AlmostComplexStructure(Matrix::identity(4)), ValidationError);
    AlmostComplexStructure I = quaternion_i();
    CHECK(I.apply(VectorField::frame(0)) == VectorField::frame(1));
    CHECK(I.apply(VectorField::frame(1)) == -VectorField::frame(0));
}

TEST_CASE("apply_index on the quaternionic frame") {
    AlmostComplexStructure I = quaternion_i();
    // b0 o I = -b1, so I_(1) b0 = b1; likewise I_(1) b2 = b3.
    CovTensor t = apply_index(I, Form::basis({0}), 1);
    CHECK(t.to_form() == Form::basis({1}));
    CHECK(apply_index(I, Form::basis({2}), 1).to_form() == Form::basis({3}));
    // Same slot twice is minus the identity.
    testutil::Rng rng(52);
    for (int rep = 0; rep < 10; ++rep) {
        Form a = rng.constant_form(4, 2, 3);
        CovTensor twice = apply_index(I, apply_index(I, a, 1), 1);
        CHECK(twice == CovTensor::from_form(a).scaled(Scalar(-1)));
    }
}

TEST_CASE("apply_index distinct slots commute") {
    AlmostComplexStructure I = quaternion_i();
    AlmostComplexStructure J = quaternion_j();
    testutil::Rng rng(53);
    for (int rep = 0; rep < 10; ++rep) {
        Form a = rng.constant_form(4, 3, 3);
        CHECK(apply_index(I, apply_index(J, a, 3), 1) == apply_index(J, apply_index(I, a, 1), 3));
        CHECK(apply_index(I, apply_index(I, a, 2), 1) == apply_index(I, apply_index(I, a, 1), 2));
    }
}

TEST_CASE("apply_all reproduces the quaternionic products") {
    AlmostComplexStructure I = quaternion_i();
    CHECK(apply_all(I, b2f(0, 2)) == b2f(1, 3));    // I F_J = b13
    CHECK(apply_all(I, b2f(0, 3)) == -b2f(1, 2));   // I F_K = -b12
    CHECK(apply_all(I, b2f(0, 1)) == b2f(0, 1));    // I F_I = F_I
    // apply_all agrees with composing the slot operators.
    testutil::Rng rng(54);
    for (int rep = 0; rep < 10; ++rep) {
        Form a = rng.constant_form(4, 2, 3);
        CovTensor composed = apply_index(I, apply_index(I, a, 2), 1);
        CHECK(CovTensor::from_form(apply_all(I, a)) == composed);
    }
}

TEST_CASE("holomorphic one-forms sit in the (-i)-eigenspace of the first slot") {
    AlmostComplexStructure I = quaternion_i();
    for (auto [a, b] : {std::pair{0, 1}, std::pair{2, 3}}) {
        Form phi = Form::basis({a}) + Form::basis({b}).scaled(Scalar::i());
        CHECK(slot_sum(I, phi) == phi.scaled(-Scalar::i()));
        CHECK(type_component(I, phi, 1, 0) == phi);
        CHECK(type_component(I, phi, 0, 1).is_zero());
    }
}

TEST_CASE("type components") {
    AlmostComplexStructure I = quaternion_i();
    Form omega_i = b2f(0, 1) + b2f(2, 3);
    Form omega_j = b2f(0, 2) - b2f(1, 3);
    Form omega_k = b2f(0, 3) + b2f(1, 2);
    CHECK(type_component(I, omega_i, 1, 1) == omega_i);
    // omega_J + i omega_K has type (2,0) on the flat block.
    Form psi = omega_j + omega_k.scaled(Scalar::i());
    CHECK(type_component(I, psi, 2, 0) == psi);
    CHECK(type_component(I, psi, 1, 1).is_zero());
    CHECK(type_component(I, psi, 0, 2).is_zero());

    // The (1,1) projector is (F + I F)/2 on 2-forms.
    testutil::Rng rng(55);
    for (int rep = 0; rep < 10; ++rep) {
        Form f = rng.constant_form(4, 2, 3);
        Form p11 = type_component(I, f, 1, 1);
        CHECK(p11 == (f + apply_all(I, f)).scaled(Scalar(1) / Scalar(2)));
        // Components sum back to the form and projectors are idempotent
        // and mutually annihilating.
        Form p20 = type_component(I, f, 2, 0);
        Form p02 = type_component(I, f, 0, 2);
        CHECK(p20 + p11 + p02 == f);
        CHECK(type_component(I, p20, 2, 0) == p20);
        CHECK(type_component(I, p20, 1, 1).is_zero());
        CHECK(type_component(I, p11, 0, 2).is_zero());
    }
    CHECK_THROWS_AS(type_component(I, omega_i, 2, 1), DegreeError);
}

TEST_CASE("kaehler form") {
    HermitianMetric g(Matrix::identity(4));
    AlmostComplexStructure I = quaternion_i();
    Form omega = kaehler_form(g, I);
    CHECK(omega == b2f(0, 1) + b2f(2, 3));
    CHECK(type_component(I, omega, 1, 1) == omega);

    // Incompatible pair: a metric distinguishing the paired directions.
    Matrix m = Matrix::identity(4);
    m.at(0, 0) = Scalar(2);
    CHECK_THROWS_AS(kaehler_form(HermitianMetric(m), I), IncompatibleMetric);
}

TEST_CASE("nijenhuis tensor") {
    CHECK(nijenhuis(flat_torus_model(4), AlmostComplexStructure(
                                             pair_rotation(4, {{0, 1}, {2, 3}})))
              .is_zero());

    // A rotation pairing across the two su(2) factors is not integrable.
    NamedExample su2 = make_example("su2_su2");
    AlmostComplexStructure bad(pair_rotation(6, {{0, 3}, {1, 4}, {2, 5}}));
    VectorValuedTwoForm N = nijenhuis(su2.file.model, bad);
    CHECK(!N.is_zero());

    // Tensoriality: the defining bracket expression evaluated on scaled
    // fields matches the tensor contraction exactly.
    CoframeModel M = flat_torus_model(4, "b", 0);
    M.coordinates = {"x0"};
    M.coordinate_differentials = {Form::basis({0})};
    CoframeModel twisted = M;
    twisted.structure[3] = Form::basis({0, 1});  // some curvature to see
    AlmostComplexStructure I = quaternion_i();
    VectorValuedTwoForm N2 = nijenhuis(twisted, I);
    Scalar f = Scalar::variable("x0");
    auto bracket_formula = [&](const VectorField& X, const VectorField& Y) {
        return lie_bracket(twisted, X, Y) + I.apply(lie_bracket(twisted, I.apply(X), Y)) +
               I.apply(lie_bracket(twisted, X, I.apply(Y))) -
               lie_bracket(twisted, I.apply(X), I.apply(Y));
    };
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            if (a == b) continue;
            VectorField lhs = bracket_formula(VectorField::frame(a).scaled(f),
                                              VectorField::frame(b));
            VectorField rhs =
                N2.value(VectorField::frame(a), VectorField::frame(b)).scaled(f);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("bismut torsion and the SKT report") {
    // Kaehler case: flat torus has d omega = 0, so c = 0 and it is SKT.
    HermitianMetric g4(Matrix::identity(4));
    AlmostComplexStructure I4(pair_rotation(4, {{0, 1}, {2, 3}}));
    CoframeModel flat = flat_torus_model(4);
    CHECK(bismut_torsion(flat, g4, I4).is_zero());
    SktReport flat_rep = is_skt(flat, g4, I4);
    CHECK(flat_rep.skt);
    CHECK(flat_rep.torsion.is_zero());

    // su(2) x su(2): torsion is the sum of the two factor volume forms
    // (opposite orientation to the coframe order), closed, nonzero.
    NamedExample su2 = make_example("su2_su2");
    const CoframeModel& M = su2.file.model;
    Form c = bismut_torsion(M, su2.file.metric("g"), su2.file.complex_structure("I"));
    Form expected = -Form::basis({0, 1, 2}) - Form::basis({3, 4, 5});
    CHECK(c == expected);
    SktReport rep = is_skt(M, su2.file.metric("g"), su2.file.complex_structure("I"));
    CHECK(rep.skt);
    CHECK(!rep.torsion.is_zero());

    // Non-integrable structures are rejected by bismut_torsion but reported
    // by is_skt.
    AlmostComplexStructure bad(pair_rotation(6, {{0, 3}, {1, 4}, {2, 5}}));
    HermitianMetric g6(Matrix::identity(6));
    CHECK_THROWS_AS(bismut_torsion(M, g6, bad), NotIntegrable);
    SktReport bad_rep = is_skt(M, g6, bad);
    CHECK(!bad_rep.integrable);
    CHECK(!bad_rep.skt);
}

TEST_CASE("structure and metric invariance checks") {
    CoframeModel M = flat_torus_model(4, "b", 0);
    M.coordinates = {"x0"};
    M.coordinate_differentials = {Form::basis({0})};
    AlmostComplexStructure I = quaternion_i();
    HermitianMetric g(Matrix::identity(4));
    CHECK(preserves_structure(M, VectorField::frame(1), I));
    CHECK(preserves_metric(M, VectorField::frame(1), g));
    // x0 X1 does not commute with X0.
    VectorField bad = VectorField::frame(1).scaled(Scalar::variable("x0"));
    CHECK(!preserves_structure(M, bad, I));
}
