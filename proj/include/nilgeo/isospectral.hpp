#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilgeo/algebra.hpp"
#include "nilgeo/lattice.hpp"
#include "nilgeo/linalg.hpp"
#include "nilgeo/poly.hpp"

namespace nilgeo {

/// Algebra together with the two lattices defining the compact quotient:
/// M in the v coordinates, L in the z coordinates.
struct NilmanifoldData {
  MetricTwoStepAlgebra algebra;
  IntegerLattice M;
  IntegerLattice L;

  /// M = Z^n always; L = (1/2 Z)^m for the 9-dimensional pair's
  /// dimensions (6, 3), Z^m otherwise.
  static NilmanifoldData standard(const MetricTwoStepAlgebra& A);
  static NilmanifoldData with_scales(const MetricTwoStepAlgebra& A,
                                     const Rational& M_scale, const Rational& L_scale);
};

enum class CriterionStatus { Pass, Fail, Inconclusive };

std::string to_string(CriterionStatus s);

/// Eigenvalue criterion: the characteristic polynomials of j_Z and j'_Z
/// agree identically in Z. Equality of the coefficient lists proves equal
/// eigenvalue multisets for every central Z; a difference is witnessed by
/// an integer Z found by grid search.
struct EigenvalueCriterion {
  CriterionStatus status = CriterionStatus::Inconclusive;
  std::string detail;
  /// charpoly of j_of_symbolic, coefficients ascending in lambda, each a
  /// polynomial in c_1..c_m.
  std::vector<Poly> charpoly_first, charpoly_second;
  std::optional<QVec> witness_Z;

  bool operator==(const EigenvalueCriterion&) const = default;
};

EigenvalueCriterion criterion_eigenvalues(const MetricTwoStepAlgebra& A1,
                                          const MetricTwoStepAlgebra& A2);

/// Lattice bracket criterion: [M, M] is contained in 2L, checked on
/// generator pairs for each manifold separately.
struct BracketLatticeCriterion {
  CriterionStatus status = CriterionStatus::Inconclusive;
  std::string detail;
  bool first_ok = false, second_ok = false;
  /// Witness when a side fails: which side (1 or 2), which generator
  /// pair, and the bracket value lying outside 2L.
  int witness_side = 0;
  std::optional<std::pair<std::size_t, std::size_t>> witness_pair;
  QVec witness_bracket;

  bool operator==(const BracketLatticeCriterion&) const = default;
};

BracketLatticeCriterion criterion_bracket_lattice(const NilmanifoldData& N1,
                                                  const NilmanifoldData& N2);

/// Whole-stratum certificate that ker j_Z = ker j'_Z on the stratum
/// c_1 = ... = c_{k-1} = 0, c_k != 0. The kernel bases are polynomial
/// vectors annihilated identically by both maps; the monomial minors
/// certify, at every point of the stratum, that the bases stay
/// independent and that the ranks stay at their generic values. Together
/// these pin both kernels to the same subspace everywhere on the stratum.
struct KernelStratumCertificate {
  std::size_t stratum = 0;  // 1-based index k
  std::vector<std::vector<Poly>> kernel_first, kernel_second;
  bool dims_equal = false;
  /// j'_Z kills every kernel vector of j_Z and vice versa, identically.
  bool cross_annihilation = false;
  /// All four monomial-minor certificates below were found.
  bool whole_stratum = false;
  std::optional<Poly> independence_minor_first, independence_minor_second;
  std::optional<Poly> rank_minor_first, rank_minor_second;

  bool operator==(const KernelStratumCertificate&) const = default;
};

/// One sampled dual-lattice point with both bounded length spectra
/// (squared lengths with multiplicities) of ker(j_Z) intersected with M.
struct KernelSampleRecord {
  QVec Z;
  std::map<Rational, unsigned long> spectrum_first, spectrum_second;
  bool equal = false;

  bool operator==(const KernelSampleRecord&) const = default;
};

enum class KernelMode { Symbolic, Sampled };

struct KernelCriterion {
  CriterionStatus status = CriterionStatus::Inconclusive;
  KernelMode mode = KernelMode::Symbolic;
  std::string detail;
  std::vector<KernelStratumCertificate> strata;  // symbolic mode
  std::vector<KernelSampleRecord> samples;       // sampled mode

  bool operator==(const KernelCriterion&) const = default;
};

struct KernelOptions {
  KernelMode mode = KernelMode::Symbolic;
  /// Sampled mode: bound on squared lengths in each spectrum.
  Rational length_bound = 64;
  /// Sampled mode: dual-lattice coefficients range over
  /// [-coeff_range, coeff_range]^m, zero excluded, first nonzero
  /// coordinate positive (Z and -Z have the same kernel).
  long coeff_range = 3;
};

/// Kernel-lattice criterion: for every nonzero Z in the dual lattice of
/// L, the length spectra of ker(j_Z) intersected with M agree. Symbolic
/// mode proves the stronger statement that the kernels coincide for all
/// Z != 0, stratum by stratum; it reports Pass only with whole-stratum
/// certificates everywhere, otherwise Inconclusive. Sampled mode compares
/// bounded spectra at finitely many dual points: a mismatch is a genuine
/// Fail witness, agreement is reported as Pass over the sampled set.
KernelCriterion criterion_kernel_lattices(const NilmanifoldData& N1,
                                          const NilmanifoldData& N2,
                                          const KernelOptions& opts = {});

struct GordonWilsonReport {
  EigenvalueCriterion eigenvalues;
  BracketLatticeCriterion bracket_lattice;
  KernelCriterion kernels;
  /// All three criteria passed.
  bool isospectral_by_criterion = false;

  bool operator==(const GordonWilsonReport&) const = default;
};

GordonWilsonReport gordon_wilson(const NilmanifoldData& N1, const NilmanifoldData& N2,
                                 const KernelOptions& opts = {});

}  // namespace nilgeo
