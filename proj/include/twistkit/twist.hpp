#pragma once

#include <optional>
#include <vector>

#include "twistkit/hermitian.hpp"
#include "twistkit/linalg.hpp"
#include "twistkit/model.hpp"

namespace twistkit {

/// Twist data (xi, F, a): commuting frame fields xi_i, closed 2-forms F^j,
/// and the invertible lifting matrix a[j][i] (bundle index j, action index i).
struct TwistData {
    std::vector<VectorField> xi;
    std::vector<Form> F;
    Matrix a;

    size_t rank() const { return xi.size(); }
};

/// Matrix-valued contraction (xi . F)[j][i] = F^j(., xi_i): the pairing used
/// in the lifting equation da = -(xi . F) and its duality counterpart. Note
/// the contraction slot: F(., xi), i.e. minus the first-slot interior product.
Form twist_contraction(const Form& F, const VectorField& xi);

/// Checks every TwistData invariant and reports each with a witness:
/// invertibility of a, the lifting equation, L_xi F = 0, F(xi, xi) = 0,
/// commuting fields, coordinate invariance, and dF = 0.
ValidationReport validate_twist_data(const CoframeModel& M, const TwistData& T);

/// The tensor sum_{i,j} (a^-1)[i][j] xi_i (x) F^j.
VectorValuedTwoForm twist_tensor(const CoframeModel& M, const TwistData& T);

/// d_W alpha = d alpha - sum_{i,j} (a^-1)[i][j] F^j ^ interior(xi_i, alpha);
/// requires alpha invariant under every xi_i.
Form twisted_differential(const CoframeModel& M, const TwistData& T, const Form& alpha);

/// The bare formula without the invariance gate. Used for the duality
/// round-trip, which holds identically as an algebraic statement even on
/// forms outside the invariant algebra of the dual action.
Form twisted_differential_raw(const CoframeModel& M, const TwistData& T, const Form& alpha);

/// [X, Y] - sum_{i,j} (a^-1)[i][j] F^j(X, Y) xi_i on invariant fields.
VectorField twisted_bracket(const CoframeModel& M, const TwistData& T, const VectorField& X,
                            const VectorField& Y);

/// Same coframe and coordinates with structure[i] = d_W e^i; validates the
/// input data and the output model.
CoframeModel build_twisted_model(const CoframeModel& M, const TwistData& T);

/// Dual data (zeta, F_W, a_W) on the twisted model with zeta = -a^-1 xi,
/// F_W = a^-1 F and a_W = a^-1; untwisting with it recovers d on invariant
/// forms, and zeta . F_W = -d(a^-1) entrywise.
TwistData dual_twist_data(const CoframeModel& M, const TwistData& T);

/// Adapted xi-orbit data for the pointwise integrability test: the first 2s
/// components pair complex directions (J xi_{2j-1} = xi_{2j}), components
/// s.. r-1 span the rest of the orbit, the remainder vanish.
struct OrbitData {
    int s = 0;
    int r = 0;
};

struct IntegrabilityReport {
    VectorValuedTwoForm obstruction;  // (1 - L_J) F_twist
    bool integrable = false;
    std::optional<bool> adapted_basis_verdict;  // from the orbit-data criterion
};

/// Integrability transfer: computes (1 - L_J) of the twist tensor, with
/// L_J = J_{(12)} + J_{(13)} + J_{(23)} on vector-valued 2-forms. When orbit
/// data is given the adapted-basis criterion is evaluated as well and must
/// agree.
IntegrabilityReport twist_integrability(const CoframeModel& M, const TwistData& T,
                                        const AlmostComplexStructure& J,
                                        const std::optional<OrbitData>& orbit = std::nullopt);

/// L_J on vector-valued 2-forms (slot 1 is the vector slot, acted on by J
/// through the frame; slots 2, 3 through the index operators).
VectorValuedTwoForm structure_action(const CoframeModel& M, const AlmostComplexStructure& J,
                                     const VectorValuedTwoForm& T);

/// Torsion transfer: c - sum (a^-1)[i][j] (J F^j) ^ xi_i^flat.
Form kt_torsion_transfer(const CoframeModel& M, const TwistData& T, const HermitianMetric& g,
                         const AlmostComplexStructure& J);

/// Exterior derivative of the transferred torsion, written out in base data.
Form dc_transfer(const CoframeModel& M, const TwistData& T, const HermitianMetric& g,
                 const AlmostComplexStructure& J);

/// Simplified transfer valid when every F^j has type (1,1):
/// dc - a^-1 F ^ ((xi . c) + d xi^flat - g(xi, xi) a^-1 F).
Form dc_transfer_instanton(const CoframeModel& M, const TwistData& T, const HermitianMetric& g,
                           const AlmostComplexStructure& J);

}  // namespace twistkit
