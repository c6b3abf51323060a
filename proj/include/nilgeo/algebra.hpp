#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "nilgeo/matrix.hpp"
#include "nilgeo/poly.hpp"
#include "nilgeo/rational.hpp"

namespace nilgeo {

struct AlgebraError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Element of the metric algebra, split into its v-part (n coordinates)
/// and central z-part (m coordinates).
struct ElementVector {
  QVec v;
  QVec z;

  static ElementVector zero(std::size_t n, std::size_t m) {
    return {QVec(n, Rational(0)), QVec(m, Rational(0))};
  }
  static ElementVector basis_v(std::size_t n, std::size_t m, std::size_t i) {
    ElementVector e = zero(n, m);
    e.v[i] = 1;
    return e;
  }
  static ElementVector basis_z(std::size_t n, std::size_t m, std::size_t k) {
    ElementVector e = zero(n, m);
    e.z[k] = 1;
    return e;
  }

  bool is_zero() const { return vec_is_zero(v) && vec_is_zero(z); }
  bool operator==(const ElementVector& o) const { return v == o.v && z == o.z; }
  bool operator!=(const ElementVector& o) const { return !(*this == o); }

  friend ElementVector operator+(const ElementVector& a, const ElementVector& b) {
    return {vec_add(a.v, b.v), vec_add(a.z, b.z)};
  }
  friend ElementVector operator-(const ElementVector& a, const ElementVector& b) {
    return {vec_sub(a.v, b.v), vec_sub(a.z, b.z)};
  }
  ElementVector operator-() const {
    return {vec_scale(Rational(-1), v), vec_scale(Rational(-1), z)};
  }
  friend ElementVector operator*(const Rational& s, const ElementVector& a) {
    return {vec_scale(s, a.v), vec_scale(s, a.z)};
  }
};

/// Standard inner product (the bases of v and z are orthonormal).
inline Rational inner(const ElementVector& a, const ElementVector& b) {
  Rational s = dot(a.v, b.v);
  s += dot(a.z, b.z);
  return s;
}

std::string to_string(const ElementVector& x);

/// 2-step nilpotent Lie algebra v + z with an inner product making the
/// standard bases orthonormal. The j-maps are the primary data; the
/// bracket is derived through <[x,y], z_k> = <j_{z_k} x, y>, so
/// [v_a, v_b] has z_k-coordinate (j_k)_{b,a}. All brackets land in the
/// center and the center is bracket-trivial by construction.
class MetricTwoStepAlgebra {
 public:
  /// Validates shapes and exact skew-symmetry of every j-map; the error
  /// message names the offending map index and entry.
  static MetricTwoStepAlgebra from_j_maps(std::size_t dim_v, std::size_t dim_z,
                                          std::vector<QMatrix> j_maps);

  /// Builds from the full bracket table table[a][b] = [v_a, v_b] as m
  /// central coordinates; requires exact antisymmetry in (a, b).
  /// Round-trips with from_j_maps.
  static MetricTwoStepAlgebra from_structure_constants(
      std::size_t dim_v, std::size_t dim_z,
      const std::vector<std::vector<QVec>>& table);

  std::size_t dim_v() const { return dim_v_; }
  std::size_t dim_z() const { return dim_z_; }
  std::size_t dim() const { return dim_v_ + dim_z_; }

  const std::vector<QMatrix>& j_maps() const { return j_maps_; }
  const QMatrix& j_map(std::size_t k) const { return j_maps_[k]; }
  /// table[a][b][k] = <[v_a, v_b], z_k>.
  const std::vector<std::vector<QVec>>& structure_constants() const {
    return structure_constants_;
  }

  /// j of the central vector with coordinates Z (m entries).
  QMatrix j_of(const QVec& Z) const;
  /// j of the symbolic central vector (c_1, ..., c_m).
  PMatrix j_of_symbolic() const;
  /// j of a central vector with polynomial coordinates.
  PMatrix j_of_poly(const std::vector<Poly>& Z) const;
  QMatrix j_squared(const QVec& Z) const;

  /// [x, y] for v-coordinates x, y, returned as m central coordinates.
  QVec bracket_v(const QVec& x, const QVec& y) const;
  /// Full bracket; only the v-parts contribute, the result is central.
  ElementVector bracket(const ElementVector& X, const ElementVector& Y) const;

  ElementVector basis_v(std::size_t i) const {
    return ElementVector::basis_v(dim_v_, dim_z_, i);
  }
  ElementVector basis_z(std::size_t k) const {
    return ElementVector::basis_z(dim_v_, dim_z_, k);
  }

  bool operator==(const MetricTwoStepAlgebra& o) const {
    return dim_v_ == o.dim_v_ && dim_z_ == o.dim_z_ && j_maps_ == o.j_maps_;
  }

 private:
  std::size_t dim_v_ = 0, dim_z_ = 0;
  std::vector<QMatrix> j_maps_;
  std::vector<std::vector<QVec>> structure_constants_;
};

/// Catalog.
///
/// heisenberg(k): dim v = 2k, dim z = 1, j_1 = k diagonal blocks of the
/// standard rotation [[0,1],[-1,0]]; heisenberg(1) is the classical
/// 3-dimensional Heisenberg algebra.
MetricTwoStepAlgebra heisenberg(std::size_t k);

/// Quaternionic generalized Heisenberg algebra: dim v = 4, dim z = 3,
/// j_1, j_2, j_3 = left multiplication by the quaternion units i, j, k on
/// H = R^4 with basis (1, i, j, k).
MetricTwoStepAlgebra quaternionic_heisenberg();

/// First member of the 9-dimensional isospectral pair (dim v = 6,
/// dim z = 3). Basis names: v-basis X_i, X_j, X_k, Y_i, Y_j, Y_k at
/// indices 0..5; z-basis Z_i, Z_j, Z_k at indices 0..2.
MetricTwoStepAlgebra paper_nj();

/// Second member of the pair; same dimensions and basis naming.
MetricTwoStepAlgebra paper_njprime();

/// Deterministic pseudo-random algebra: raw entries are rationals with
/// |numerator| <= coeff_bound and denominator in [1, coeff_bound], then
/// each matrix M is skew-symmetrized to (M - M^T)/2.
MetricTwoStepAlgebra random_algebra(unsigned long seed, std::size_t n, std::size_t m,
                                    long coeff_bound);

/// Orthogonal change of the v-basis: each j_k becomes P^T j_k P. Requires
/// P^T P = Id (signed permutations qualify), which keeps the maps skew and
/// the metric contract intact.
MetricTwoStepAlgebra transform_v_basis(const MetricTwoStepAlgebra& A, const QMatrix& P);

/// Seeded random rational in [-5, 5] with denominator <= 4; helper for
/// property tests and the fuzz command.
class RationalSampler {
 public:
  explicit RationalSampler(unsigned long seed) : state_(seed == 0 ? 0x9e3779b9UL : seed) {}
  /// Uniform-ish rational p/q, |p| <= num_bound * q adjusted, q <= den_bound.
  Rational next(long num_bound = 5, long den_bound = 4);
  QVec next_vec(std::size_t len, long num_bound = 5, long den_bound = 4);
  unsigned long next_raw();

 private:
  unsigned long state_;
};

}  // namespace nilgeo
