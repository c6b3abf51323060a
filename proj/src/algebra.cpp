#include "nilgeo/algebra.hpp"

#include <random>
#include <sstream>
#include <utility>

namespace nilgeo {

std::string to_string(const ElementVector& x) {
  std::ostringstream out;
  out << "(v: ";
  for (std::size_t i = 0; i < x.v.size(); ++i) {
    if (i) out << ", ";
    out << to_string(x.v[i]);
  }
  out << " | z: ";
  for (std::size_t k = 0; k < x.z.size(); ++k) {
    if (k) out << ", ";
    out << to_string(x.z[k]);
  }
  out << ")";
  return out.str();
}

MetricTwoStepAlgebra MetricTwoStepAlgebra::from_j_maps(std::size_t dim_v,
                                                       std::size_t dim_z,
                                                       std::vector<QMatrix> j_maps) {
  if (j_maps.size() != dim_z)
    throw AlgebraError("expected " + std::to_string(dim_z) + " j-maps, got " +
                       std::to_string(j_maps.size()));
  for (std::size_t k = 0; k < j_maps.size(); ++k) {
    const QMatrix& J = j_maps[k];
    if (J.rows() != dim_v || J.cols() != dim_v)
      throw AlgebraError("j[" + std::to_string(k) + "] must be " + std::to_string(dim_v) +
                         "x" + std::to_string(dim_v) + ", got " + std::to_string(J.rows()) +
                         "x" + std::to_string(J.cols()));
    for (std::size_t i = 0; i < dim_v; ++i)
      for (std::size_t j = 0; j <= i; ++j)
        if (J.at(i, j) != -J.at(j, i))
          throw AlgebraError("j[" + std::to_string(k) + "] is not skew-symmetric at (" +
                             std::to_string(i) + "," + std::to_string(j) +
                             "): " + to_string(J.at(i, j)) + " vs " + to_string(J.at(j, i)));
  }
  MetricTwoStepAlgebra A;
  A.dim_v_ = dim_v;
  A.dim_z_ = dim_z;
  A.j_maps_ = std::move(j_maps);
  A.structure_constants_.assign(dim_v, std::vector<QVec>(dim_v, QVec(dim_z, Rational(0))));
  for (std::size_t a = 0; a < dim_v; ++a)
    for (std::size_t b = 0; b < dim_v; ++b)
      for (std::size_t k = 0; k < dim_z; ++k)
        A.structure_constants_[a][b][k] = A.j_maps_[k].at(b, a);
  return A;
}

MetricTwoStepAlgebra MetricTwoStepAlgebra::from_structure_constants(
    std::size_t dim_v, std::size_t dim_z, const std::vector<std::vector<QVec>>& table) {
  if (table.size() != dim_v)
    throw AlgebraError("bracket table must have " + std::to_string(dim_v) + " rows");
  for (std::size_t a = 0; a < dim_v; ++a) {
    if (table[a].size() != dim_v)
      throw AlgebraError("bracket table row " + std::to_string(a) + " must have " +
                         std::to_string(dim_v) + " entries");
    for (std::size_t b = 0; b < dim_v; ++b)
      if (table[a][b].size() != dim_z)
        throw AlgebraError("bracket table entry (" + std::to_string(a) + "," +
                           std::to_string(b) + ") must have " + std::to_string(dim_z) +
                           " coordinates");
  }
  for (std::size_t a = 0; a < dim_v; ++a)
    for (std::size_t b = 0; b <= a; ++b)
      for (std::size_t k = 0; k < dim_z; ++k)
        if (table[a][b][k] != -table[b][a][k])
          throw AlgebraError("bracket table is not antisymmetric at (" +
                             std::to_string(a) + "," + std::to_string(b) + ") coordinate " +
                             std::to_string(k));
  std::vector<QMatrix> maps(dim_z, QMatrix(dim_v, dim_v));
  for (std::size_t k = 0; k < dim_z; ++k)
    for (std::size_t a = 0; a < dim_v; ++a)
      for (std::size_t b = 0; b < dim_v; ++b) maps[k].at(b, a) = table[a][b][k];
  return from_j_maps(dim_v, dim_z, std::move(maps));
}

QMatrix MetricTwoStepAlgebra::j_of(const QVec& Z) const {
  if (Z.size() != dim_z_) throw AlgebraError("j_of expects " + std::to_string(dim_z_) +
                                             " central coordinates");
  QMatrix M(dim_v_, dim_v_);
  for (std::size_t k = 0; k < dim_z_; ++k) {
    if (Z[k] == 0) continue;
    M += j_maps_[k] * Z[k];
  }
  return M;
}

PMatrix MetricTwoStepAlgebra::j_of_symbolic() const {
  std::vector<Poly> Z(dim_z_);
  for (std::size_t k = 0; k < dim_z_; ++k) Z[k] = Poly::variable(dim_z_, k);
  return j_of_poly(Z);
}

PMatrix MetricTwoStepAlgebra::j_of_poly(const std::vector<Poly>& Z) const {
  if (Z.size() != dim_z_) throw AlgebraError("j_of_poly expects " + std::to_string(dim_z_) +
                                             " central coordinates");
  PMatrix M(dim_v_, dim_v_);
  for (std::size_t k = 0; k < dim_z_; ++k)
    for (std::size_t i = 0; i < dim_v_; ++i)
      for (std::size_t j = 0; j < dim_v_; ++j)
        M.at(i, j) += Z[k] * Poly(j_maps_[k].at(i, j));
  return M;
}

QMatrix MetricTwoStepAlgebra::j_squared(const QVec& Z) const {
  QMatrix M = j_of(Z);
  return M * M;
}

QVec MetricTwoStepAlgebra::bracket_v(const QVec& x, const QVec& y) const {
  if (x.size() != dim_v_ || y.size() != dim_v_)
    throw AlgebraError("bracket_v expects v-coordinates");
  QVec z(dim_z_, Rational(0));
  for (std::size_t k = 0; k < dim_z_; ++k) z[k] = dot(j_maps_[k] * x, y);
  return z;
}

ElementVector MetricTwoStepAlgebra::bracket(const ElementVector& X,
                                            const ElementVector& Y) const {
  ElementVector r = ElementVector::zero(dim_v_, dim_z_);
  r.z = bracket_v(X.v, Y.v);
  return r;
}

namespace {

QMatrix rotation_block_diag(std::size_t blocks) {
  QMatrix M(2 * blocks, 2 * blocks);
  for (std::size_t b = 0; b < blocks; ++b) {
    M.at(2 * b, 2 * b + 1) = 1;
    M.at(2 * b + 1, 2 * b) = -1;
  }
  return M;
}

// 3x3 cross-product matrix [a]_x with [a]_x w = a x w.
QMatrix cross_matrix(long a1, long a2, long a3) {
  QMatrix M(3, 3);
  M.at(0, 1) = -a3;
  M.at(0, 2) = a2;
  M.at(1, 0) = a3;
  M.at(1, 2) = -a1;
  M.at(2, 0) = -a2;
  M.at(2, 1) = a1;
  return M;
}

QMatrix block_diag2(const QMatrix& A) {
  const std::size_t n = A.rows();
  QMatrix M(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      M.at(i, j) = A.at(i, j);
      M.at(n + i, n + j) = A.at(i, j);
    }
  return M;
}

QMatrix block_antidiag2(const QMatrix& A) {
  const std::size_t n = A.rows();
  QMatrix M(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      M.at(i, n + j) = A.at(i, j);
      M.at(n + i, j) = A.at(i, j);
    }
  return M;
}

}  // namespace

MetricTwoStepAlgebra heisenberg(std::size_t k) {
  if (k == 0) throw AlgebraError("heisenberg(k) needs k >= 1");
  return MetricTwoStepAlgebra::from_j_maps(2 * k, 1, {rotation_block_diag(k)});
}

MetricTwoStepAlgebra quaternionic_heisenberg() {
  // Left multiplication by i, j, k on H with ordered basis (1, i, j, k).
  QMatrix Li(4, 4), Lj(4, 4), Lk(4, 4);
  Li.at(0, 1) = -1;
  Li.at(1, 0) = 1;
  Li.at(2, 3) = -1;
  Li.at(3, 2) = 1;
  Lj.at(0, 2) = -1;
  Lj.at(1, 3) = 1;
  Lj.at(2, 0) = 1;
  Lj.at(3, 1) = -1;
  Lk.at(0, 3) = -1;
  Lk.at(1, 2) = -1;
  Lk.at(2, 1) = 1;
  Lk.at(3, 0) = 1;
  return MetricTwoStepAlgebra::from_j_maps(4, 3, {Li, Lj, Lk});
}

MetricTwoStepAlgebra paper_nj() {
  std::vector<QMatrix> maps;
  maps.push_back(block_diag2(-cross_matrix(1, 0, 0)));
  maps.push_back(block_diag2(-cross_matrix(0, 1, 0)));
  maps.push_back(block_diag2(-cross_matrix(0, 0, 1)));
  return MetricTwoStepAlgebra::from_j_maps(6, 3, std::move(maps));
}

MetricTwoStepAlgebra paper_njprime() {
  std::vector<QMatrix> maps;
  maps.push_back(block_antidiag2(cross_matrix(1, 0, 0)));
  maps.push_back(block_antidiag2(cross_matrix(0, 1, 0)));
  maps.push_back(block_antidiag2(cross_matrix(0, 0, 1)));
  return MetricTwoStepAlgebra::from_j_maps(6, 3, std::move(maps));
}

MetricTwoStepAlgebra random_algebra(unsigned long seed, std::size_t n, std::size_t m,
                                    long coeff_bound) {
  if (coeff_bound < 1) throw AlgebraError("random_algebra needs coeff_bound >= 1");
  std::mt19937_64 rng(seed);
  auto draw = [&](long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
  };
  std::vector<QMatrix> maps;
  for (std::size_t k = 0; k < m; ++k) {
    QMatrix raw(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        long num = draw(-coeff_bound, coeff_bound);
        long den = draw(1, coeff_bound);
        Rational q(num, den);
        q.canonicalize();
        raw.at(i, j) = q;
      }
    QMatrix skew = (raw - raw.transpose()) * Rational(1, 2);
    maps.push_back(skew);
  }
  return MetricTwoStepAlgebra::from_j_maps(n, m, std::move(maps));
}

MetricTwoStepAlgebra transform_v_basis(const MetricTwoStepAlgebra& A, const QMatrix& P) {
  const std::size_t n = A.dim_v();
  if (P.rows() != n || P.cols() != n) throw AlgebraError("transform_v_basis shape");
  if (P.transpose() * P != QMatrix::identity(n))
    throw AlgebraError("transform_v_basis needs an orthogonal matrix");
  std::vector<QMatrix> maps;
  for (const QMatrix& J : A.j_maps()) maps.push_back(P.transpose() * J * P);
  return MetricTwoStepAlgebra::from_j_maps(n, A.dim_z(), std::move(maps));
}

unsigned long RationalSampler::next_raw() {
  // xorshift64
  unsigned long x = state_;
  x ^= x << 13;
  x ^= x >> 7;
  x ^= x << 17;
  state_ = x;
  return x;
}

Rational RationalSampler::next(long num_bound, long den_bound) {
  long num = static_cast<long>(next_raw() % static_cast<unsigned long>(2 * num_bound + 1)) -
             num_bound;
  long den = 1 + static_cast<long>(next_raw() % static_cast<unsigned long>(den_bound));
  Rational q(num, den);
  q.canonicalize();
  return q;
}

QVec RationalSampler::next_vec(std::size_t len, long num_bound, long den_bound) {
  QVec v(len);
  for (auto& x : v) x = next(num_bound, den_bound);
  return v;
}

}  // namespace nilgeo
