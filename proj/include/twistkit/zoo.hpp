#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twistkit/modelfile.hpp"

namespace twistkit {

/// Registry example: a model file plus the expected verdict of each of its
/// checks.
struct NamedExample {
    std::string name;
    ModelFile file;
    std::vector<bool> expected;  // aligned with file.checks
    std::string domain_note;     // e.g. coordinate domain restrictions
};

/// Names: flat_torus(n), kodaira_thurston, skt_t2xt2_bundle,
/// skt_non_instanton[(e1,e2)], halfline_t3, hc_not_hkt_surrogate, su2_su2,
/// hkt_instanton_t4xt4. Unknown names raise UnknownName listing the registry.
NamedExample make_example(const std::string& name);

std::vector<std::string> example_registry();

/// Least-squares-free exact linear solve for the lifting function: finds a
/// matrix a in the span of the ansatz with d a = -(xi . F), adjusted by a
/// constant multiple of the identity to make it invertible. Returns nullopt
/// when no solution lies in the span (inconclusive).
std::optional<Matrix> solve_lifting_function(const CoframeModel& M,
                                             const std::vector<VectorField>& xi,
                                             const std::vector<Form>& F,
                                             const std::vector<Scalar>& ansatz);

// Building blocks shared with tests.
CoframeModel flat_torus_model(int n, const std::string& prefix = "e", int start_index = 1);

struct HyperkaehlerBlock {
    Matrix I, J, K;  // quaternion left-multiplication on one R^4 block
};

/// Left multiplication by i, j, k on a 4-dim block starting at `offset`
/// inside an n-dim frame (identity elsewhere is NOT added; see
/// block_diagonal).
HyperkaehlerBlock quaternion_block();

/// Assembles a square matrix from 4x4 blocks placed along the diagonal.
Matrix block_diagonal(const std::vector<Matrix>& blocks);

/// Complex-structure matrix mapping X_a -> X_b, X_b -> -X_a for each pair.
Matrix pair_rotation(int n, const std::vector<std::pair<int, int>>& pairs);

}  // namespace twistkit
