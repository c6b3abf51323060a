#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nilgeo/algebra.hpp"

namespace nilgeo {

/// True iff the v-vectors commute pairwise; bilinearity of the bracket
/// extends this to their whole span, which then gives the abelian
/// subalgebra span + z (the center never contributes to brackets).
bool is_abelian_subspace(const MetricTwoStepAlgebra& A, const std::vector<QVec>& generators);

/// Census over all d-element subsets of the v-basis: which coordinate
/// subspaces span{v_i : i in S} are abelian. Every non-abelian subset is
/// recorded with one witnessing pair whose bracket is nonzero, so the
/// omissions can be re-checked independently.
struct AbelianReport {
  std::size_t subset_size = 0;
  /// 0-based index sets, lexicographic.
  std::vector<std::vector<std::size_t>> abelian_subsets;
  struct Witness {
    std::vector<std::size_t> subset;
    std::size_t a = 0, b = 0;  // indices into the v-basis, not into subset
    QVec bracket;
    bool operator==(const Witness&) const = default;
  };
  std::vector<Witness> witnesses;
  bool operator==(const AbelianReport&) const = default;
};

AbelianReport coordinate_abelian_census(const MetricTwoStepAlgebra& A, std::size_t d);

/// Census counts for all subset sizes d = 1..n on both algebras, and the
/// first d where they disagree. A disagreement rules out any isomorphism
/// carrying one coordinate v-basis to the other; it is evidence, not a
/// proof, that the algebras are non-isomorphic.
struct CensusComparison {
  std::vector<std::size_t> counts_first, counts_second;
  std::optional<std::size_t> first_difference;
  bool operator==(const CensusComparison&) const = default;
};

CensusComparison nonisomorphism_evidence(const MetricTwoStepAlgebra& A1,
                                         const MetricTwoStepAlgebra& A2);

}  // namespace nilgeo
