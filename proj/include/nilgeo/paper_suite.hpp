#pragma once

#include <string>
#include <vector>

#include "nilgeo/algebra.hpp"

namespace nilgeo {

struct ClaimResult {
  std::string name;
  bool pass = false;
  /// What differed, empty on pass.
  std::string detail;
};

/// Re-derives every published value for the 9-dimensional pair and
/// compares: structure matrices and bracket tables, j_Z^2 displays, the
/// invariants J and B, the classification answers, the homogeneous
/// structure on the first algebra and the obstruction on the second, the
/// three isospectrality criteria with their certificates, and the abelian
/// censuses. The algebras are parameters so tests can confirm the suite
/// rejects perturbed input.
std::vector<ClaimResult> run_paper_claims(const MetricTwoStepAlgebra& nj,
                                          const MetricTwoStepAlgebra& njp);

bool all_claims_pass(const std::vector<ClaimResult>& claims);

}  // namespace nilgeo
