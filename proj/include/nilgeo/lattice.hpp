#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "nilgeo/matrix.hpp"
#include "nilgeo/rational.hpp"

namespace nilgeo {

/// Column-style Hermite normal form of an integer matrix: A * U = H with U
/// unimodular. H is in column echelon form: pivot rows strictly increase
/// column by column, pivots are positive, entries left of a pivot in its
/// row are reduced into [0, pivot), and columns after the last pivot are
/// zero. The U-columns matching zero H-columns form a basis of the
/// saturated integer kernel of A.
struct HnfResult {
  std::vector<std::vector<Int>> H;
  std::vector<std::vector<Int>> U;
  std::vector<std::size_t> pivot_rows;  // one per nonzero column of H
};

HnfResult column_hnf(std::vector<std::vector<Int>> A);

/// Full-rank-in-its-span lattice in Q^ambient, given by a rational basis.
/// The basis is kept exactly as constructed (membership and the length
/// spectrum do not depend on the choice); rank 0 is allowed.
class IntegerLattice {
 public:
  static IntegerLattice from_basis(std::size_t ambient_dim, std::vector<QVec> basis);
  /// Z^dim.
  static IntegerLattice standard(std::size_t dim);
  /// (s Z)^dim, s > 0.
  static IntegerLattice scaled_standard(std::size_t dim, const Rational& s);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<QVec>& basis() const { return basis_; }
  /// Gram matrix of the basis (rank x rank, positive definite).
  const QMatrix& gram() const { return gram_; }

  /// True iff v is an integer combination of the basis vectors; decided by
  /// forward substitution against the Hermite normal form of the scaled
  /// basis.
  bool contains(const QVec& v) const;

  /// Sublattice of points lying in the span of the given vectors, via the
  /// integer kernel of the orthogonal-projection conditions. The returned
  /// basis is in Hermite-canonical form (up to one global denominator).
  IntegerLattice intersect_subspace(const std::vector<QVec>& span) const;

  /// Dual lattice within the span: basis * gram^{-1}.
  IntegerLattice dual() const;

  /// s L.
  IntegerLattice scaled(const Rational& s) const;

  /// All squared lengths <= bound of lattice vectors, with multiplicities;
  /// includes the zero vector. Exact bounded enumeration on the Gram
  /// matrix.
  std::map<Rational, unsigned long> length_spectrum(const Rational& bound) const;

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<QVec> basis_;
  QMatrix gram_;
};

}  // namespace nilgeo
