#include "twistkit/quaternionic.hpp"

#include "twistkit/errors.hpp"

namespace twistkit {

HypercomplexTriple::HypercomplexTriple(AlmostComplexStructure I, AlmostComplexStructure J,
                                       AlmostComplexStructure K)
    : I_(std::move(I)), J_(std::move(J)), K_(std::move(K)) {
    if (I_.dimension() != J_.dimension() || J_.dimension() != K_.dimension())
        throw DimensionError("triple dimensions disagree");
    if (I_.matrix() * J_.matrix() != K_.matrix())
        throw ValidationError("quaternion relation IJ = K fails");
    if (J_.matrix() * I_.matrix() != -K_.matrix())
        throw ValidationError("quaternion relation JI = -K fails");
}

const AlmostComplexStructure& HypercomplexTriple::structure(int k) const {
    switch (k) {
        case 0: return I_;
        case 1: return J_;
        case 2: return K_;
        default: throw Error("structure index out of range");
    }
}

HypercomplexReport is_hypercomplex(const CoframeModel& M, const HypercomplexTriple& H) {
    HypercomplexReport report;
    for (int k = 0; k < 3; ++k) {
        report.nijenhuis_zero[k] = nijenhuis(M, H.structure(k)).is_zero();
    }
    report.hypercomplex =
        report.nijenhuis_zero[0] && report.nijenhuis_zero[1] && report.nijenhuis_zero[2];
    return report;
}

HktReport is_hkt(const CoframeModel& M, const HermitianMetric& g, const HypercomplexTriple& H) {
    HktReport report;
    for (int k = 0; k < 3; ++k) {
        const AlmostComplexStructure& A = H.structure(k);
        if (!g.compatible_with(A))
            throw IncompatibleMetric("metric is not compatible with the triple");
        Form omega = kaehler_form(g, A);
        report.torsion_candidate[k] = apply_all(A, exterior_derivative(M, omega));
    }
    report.equal = report.torsion_candidate[0] == report.torsion_candidate[1] &&
                   report.torsion_candidate[1] == report.torsion_candidate[2];
    report.hypercomplex = is_hypercomplex(M, H).hypercomplex;
    return report;
}

HktTwistReport hkt_twist_condition(const CoframeModel& M, const TwistData& T,
                                   const HermitianMetric& g, const HypercomplexTriple& H) {
    HktReport base = is_hkt(M, g, H);
    if (!base.equal) throw ValidationError("base structure is not HKT");
    for (const auto& xi : T.xi) {
        for (int k = 0; k < 3; ++k) {
            if (!preserves_structure(M, xi, H.structure(k)))
                throw NotInvariant("xi does not preserve the hypercomplex structure");
        }
        if (!preserves_metric(M, xi, g)) throw NotInvariant("xi does not preserve the metric");
    }

    HktTwistReport report;
    Matrix A = T.a.inverse();
    for (int k = 0; k < 3; ++k) {
        Form term(3);
        for (size_t i = 0; i < T.xi.size(); ++i) {
            Form flat = g.flat(T.xi[i]);
            for (size_t j = 0; j < T.F.size(); ++j) {
                const Scalar& w = A.at(i, j);
                if (w.is_zero()) continue;
                term += wedge(apply_all(H.structure(k), T.F[j]), flat).scaled(w);
            }
        }
        report.term[k] = term;
    }
    report.equal = report.term[0] == report.term[1] && report.term[1] == report.term[2];

    CoframeModel W = build_twisted_model(M, T);
    report.twisted_is_hkt = is_hkt(W, g, H).equal;
    if (report.twisted_is_hkt != report.equal)
        throw Error("twist condition disagrees with is_hkt on the twisted model");
    return report;
}

HypercomplexTwistReport hypercomplex_twist_condition(const CoframeModel& M, const TwistData& T,
                                                     const HypercomplexTriple& H) {
    HypercomplexTwistReport report;
    VectorValuedTwoForm F = twist_tensor(M, T);
    for (int k = 0; k < 3; ++k) {
        report.fixed_by[k] = structure_action(M, H.structure(k), F) == F;
    }
    report.holds = report.fixed_by[0] && report.fixed_by[1] && report.fixed_by[2];

    CoframeModel W = build_twisted_model(M, T);
    report.twisted_is_hypercomplex = is_hypercomplex(W, H).hypercomplex;
    if (report.twisted_is_hypercomplex != report.holds)
        throw Error("twist condition disagrees with is_hypercomplex on the twisted model");
    return report;
}

bool is_instanton(const std::vector<Form>& F, const HypercomplexTriple& H) {
    for (const auto& f : F) {
        for (int k = 0; k < 3; ++k) {
            if (type_component(H.structure(k), f, 1, 1) != f) return false;
        }
    }
    return true;
}

VolumeTwistReport volume_twist_condition(const CoframeModel& M, const TwistData& T,
                                         const AlmostComplexStructure& J, const Form& theta) {
    if (!exterior_derivative(M, theta).is_zero())
        throw ValidationError("volume form is not closed");
    VolumeTwistReport report;
    Matrix A = T.a.inverse();
    Form condition(1);
    for (size_t j = 0; j < T.F.size(); ++j) {
        Form f11 = type_component(J, T.F[j], 1, 1);
        if (f11.is_zero()) continue;
        for (size_t i = 0; i < T.xi.size(); ++i) {
            const Scalar& w = A.at(i, j);
            if (w.is_zero()) continue;
            condition += interior(T.xi[i], f11).scaled(w);
        }
    }
    report.condition = condition;
    report.holds = condition.is_zero();
    // twisted_differential also enforces xi-invariance of theta.
    report.d_theta_twisted_zero = twisted_differential(M, T, theta).is_zero();
    return report;
}

SlVolumeReport sl_volume_check(const CoframeModel& M, const HypercomplexTriple& H,
                               const Form& theta) {
    SlVolumeReport report;
    report.closed = exterior_derivative(M, theta).is_zero();
    report.j_real = apply_all(H.J(), theta) == theta.conjugate();
    return report;
}

Form quaternionic_volume(const HermitianMetric& g, const HypercomplexTriple& H, int m) {
    Form omega_j = kaehler_form(g, H.J());
    Form omega_k = kaehler_form(g, H.K());
    Form base = omega_j + omega_k.scaled(Scalar::i());
    return wedge_pow(base, static_cast<unsigned>(m));
}

}  // namespace twistkit
