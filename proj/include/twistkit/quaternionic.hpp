#pragma once

#include <vector>

#include "twistkit/twist.hpp"

namespace twistkit {

/// Triple I, J, K with I^2 = J^2 = K^2 = -Id and IJ = K = -JI, verified
/// exactly on construction.
class HypercomplexTriple {
public:
    HypercomplexTriple(AlmostComplexStructure I, AlmostComplexStructure J,
                       AlmostComplexStructure K);

    const AlmostComplexStructure& I() const { return I_; }
    const AlmostComplexStructure& J() const { return J_; }
    const AlmostComplexStructure& K() const { return K_; }
    const AlmostComplexStructure& structure(int k) const;  // 0, 1, 2

private:
    AlmostComplexStructure I_, J_, K_;
};

struct HypercomplexReport {
    bool nijenhuis_zero[3] = {false, false, false};
    bool hypercomplex = false;
};

HypercomplexReport is_hypercomplex(const CoframeModel& M, const HypercomplexTriple& H);

struct HktReport {
    Form torsion_candidate[3] = {Form(3), Form(3), Form(3)};  // A d omega_A
    bool equal = false;      // the three agree
    bool hypercomplex = false;  // Nijenhuis corroboration
};

/// A d omega_A for A in {I, J, K}; HKT when the three 3-forms coincide.
HktReport is_hkt(const CoframeModel& M, const HermitianMetric& g, const HypercomplexTriple& H);

struct HktTwistReport {
    Form term[3] = {Form(3), Form(3), Form(3)};  // sum (a^-1) (A F) ^ xi^flat
    bool equal = false;
    bool twisted_is_hkt = false;  // cross-check on the twisted model
};

/// The three 3-forms sum_{i,j} (a^-1)[i][j] (A F^j) ^ xi_i^flat; their
/// equality decides whether the twist stays HKT, cross-checked against
/// is_hkt on the twisted model.
HktTwistReport hkt_twist_condition(const CoframeModel& M, const TwistData& T,
                                   const HermitianMetric& g, const HypercomplexTriple& H);

struct HypercomplexTwistReport {
    bool fixed_by[3] = {false, false, false};  // L_A F_twist == F_twist
    bool holds = false;
    bool twisted_is_hypercomplex = false;  // cross-check
};

HypercomplexTwistReport hypercomplex_twist_condition(const CoframeModel& M, const TwistData& T,
                                                     const HypercomplexTriple& H);

/// True iff every F^j is of type (1,1) for all of I, J, K.
bool is_instanton(const std::vector<Form>& F, const HypercomplexTriple& H);

struct VolumeTwistReport {
    Form condition{1};  // sum (a^-1)[i][j] i_{xi_i} (F^j)^{1,1}
    bool holds = false;
    bool d_theta_twisted_zero = false;  // d_W Theta = 0, the equivalent statement
};

/// Volume transfer condition a^-1 xi . F^{1,1} = 0 with F^{1,1} = (F + JF)/2;
/// equivalent to d_W Theta = 0 for a closed (m,0)-volume form Theta.
VolumeTwistReport volume_twist_condition(const CoframeModel& M, const TwistData& T,
                                         const AlmostComplexStructure& J, const Form& theta);

struct SlVolumeReport {
    bool closed = false;        // d Theta = 0 in the given model
    bool j_real = false;        // J Theta = conj(Theta)
};

/// Hypotheses of the special-holonomy criterion: Theta closed and
/// J Theta = conj(Theta).
SlVolumeReport sl_volume_check(const CoframeModel& M, const HypercomplexTriple& H,
                               const Form& theta);

/// (omega_J + i omega_K)^m for a hyperHermitian metric; the canonical
/// volume form candidate.
Form quaternionic_volume(const HermitianMetric& g, const HypercomplexTriple& H, int m);

}  // namespace twistkit
