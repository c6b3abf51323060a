#include "nilgeo/abelian.hpp"

#include <stdexcept>

namespace nilgeo {

namespace {

/// Advances a strictly increasing index combination below limit; false
/// when exhausted. Position i can hold at most limit - r + i.
bool next_subset(std::vector<std::size_t>& c, std::size_t limit) {
  const std::size_t r = c.size();
  for (std::size_t i = r; i-- > 0;) {
    if (c[i] < limit - r + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < r; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

bool is_abelian_subspace(const MetricTwoStepAlgebra& A, const std::vector<QVec>& generators) {
  for (const QVec& g : generators)
    if (g.size() != A.dim_v())
      throw std::invalid_argument("generator has wrong dimension");
  for (std::size_t a = 0; a < generators.size(); ++a)
    for (std::size_t b = a + 1; b < generators.size(); ++b)
      if (!vec_is_zero(A.bracket_v(generators[a], generators[b]))) return false;
  return true;
}

AbelianReport coordinate_abelian_census(const MetricTwoStepAlgebra& A, std::size_t d) {
  const std::size_t n = A.dim_v();
  AbelianReport rep;
  rep.subset_size = d;
  if (d == 0 || d > n) return rep;
  std::vector<std::size_t> subset(d);
  for (std::size_t i = 0; i < d; ++i) subset[i] = i;
  do {
    bool abelian = true;
    for (std::size_t x = 0; x < d && abelian; ++x)
      for (std::size_t y = x + 1; y < d; ++y) {
        const ElementVector bracket =
            A.bracket(A.basis_v(subset[x]), A.basis_v(subset[y]));
        if (!bracket.is_zero()) {
          rep.witnesses.push_back({subset, subset[x], subset[y], bracket.z});
          abelian = false;
          break;
        }
      }
    if (abelian) rep.abelian_subsets.push_back(subset);
  } while (next_subset(subset, n));
  return rep;
}

CensusComparison nonisomorphism_evidence(const MetricTwoStepAlgebra& A1,
                                         const MetricTwoStepAlgebra& A2) {
  CensusComparison cmp;
  if (A1.dim_v() != A2.dim_v()) {
    cmp.first_difference = 0;
    return cmp;
  }
  const std::size_t n = A1.dim_v();
  for (std::size_t d = 1; d <= n; ++d) {
    cmp.counts_first.push_back(coordinate_abelian_census(A1, d).abelian_subsets.size());
    cmp.counts_second.push_back(coordinate_abelian_census(A2, d).abelian_subsets.size());
    if (!cmp.first_difference && cmp.counts_first.back() != cmp.counts_second.back())
      cmp.first_difference = d;
  }
  return cmp;
}

}  // namespace nilgeo
