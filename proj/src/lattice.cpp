#include "nilgeo/lattice.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "nilgeo/linalg.hpp"

namespace nilgeo {

namespace {

Int abs_int(const Int& x) {
  Int a;
  mpz_abs(a.get_mpz_t(), x.get_mpz_t());
  return a;
}

// x - q*y for column operations.
void submul_col(std::vector<std::vector<Int>>& M, std::size_t dst, std::size_t src,
                const Int& q) {
  for (auto& row : M) row[dst] -= q * row[src];
}

void swap_col(std::vector<std::vector<Int>>& M, std::size_t a, std::size_t b) {
  for (auto& row : M) std::swap(row[a], row[b]);
}

void negate_col(std::vector<std::vector<Int>>& M, std::size_t c) {
  for (auto& row : M) row[c] = -row[c];
}

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int trunc_div(const Int& a, const Int& b) {
  Int q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Least common multiple of all entry denominators; 1 for empty input.
Int common_denominator(const std::vector<QVec>& vecs) {
  Int l(1);
  for (const auto& v : vecs)
    for (const auto& q : v) {
      Int d = q.get_den();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
  return l;
}

}  // namespace

HnfResult column_hnf(std::vector<std::vector<Int>> A) {
  const std::size_t rows = A.size();
  const std::size_t cols = rows ? A[0].size() : 0;
  std::vector<std::vector<Int>> U(cols, std::vector<Int>(cols, Int(0)));
  for (std::size_t i = 0; i < cols; ++i) U[i][i] = 1;

  std::vector<std::size_t> pivot_rows;
  std::size_t c = 0;
  for (std::size_t row = 0; row < rows && c < cols; ++row) {
    bool any = false;
    for (std::size_t j = c; j < cols; ++j)
      if (A[row][j] != 0) any = true;
    if (!any) continue;
    // Euclidean sweep: shrink the row segment to a single nonzero entry.
    for (;;) {
      std::size_t jmin = cols;
      for (std::size_t j = c; j < cols; ++j) {
        if (A[row][j] == 0) continue;
        if (jmin == cols || abs_int(A[row][j]) < abs_int(A[row][jmin])) jmin = j;
      }
      if (jmin != c) {
        swap_col(A, c, jmin);
        swap_col(U, c, jmin);
      }
      bool done = true;
      for (std::size_t j = c + 1; j < cols; ++j) {
        if (A[row][j] == 0) continue;
        Int q = trunc_div(A[row][j], A[row][c]);
        if (q != 0) {
          submul_col(A, j, c, q);
          submul_col(U, j, c, q);
        }
        if (A[row][j] != 0) done = false;
      }
      if (done) break;
    }
    if (A[row][c] < 0) {
      negate_col(A, c);
      negate_col(U, c);
    }
    for (std::size_t j = 0; j < c; ++j) {
      Int q = floor_div(A[row][j], A[row][c]);
      if (q != 0) {
        submul_col(A, j, c, q);
        submul_col(U, j, c, q);
      }
    }
    pivot_rows.push_back(row);
    ++c;
  }
  return HnfResult{std::move(A), std::move(U), std::move(pivot_rows)};
}

IntegerLattice IntegerLattice::from_basis(std::size_t ambient_dim,
                                          std::vector<QVec> basis) {
  IntegerLattice L;
  L.ambient_dim_ = ambient_dim;
  for (const auto& v : basis)
    if (v.size() != ambient_dim)
      throw std::invalid_argument("lattice basis vector has wrong dimension");
  const std::size_t k = basis.size();
  L.gram_ = QMatrix(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) L.gram_.at(i, j) = dot(basis[i], basis[j]);
  if (k > 0) {
    QMatrix B(ambient_dim, k);
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t i = 0; i < ambient_dim; ++i) B.at(i, j) = basis[j][i];
    if (nilgeo::rank(B) != k)
      throw std::invalid_argument("lattice basis is linearly dependent");
  }
  L.basis_ = std::move(basis);
  return L;
}

IntegerLattice IntegerLattice::standard(std::size_t dim) {
  return scaled_standard(dim, Rational(1));
}

IntegerLattice IntegerLattice::scaled_standard(std::size_t dim, const Rational& s) {
  if (s <= 0) throw std::invalid_argument("lattice scale must be positive");
  std::vector<QVec> basis(dim, QVec(dim, Rational(0)));
  for (std::size_t i = 0; i < dim; ++i) basis[i][i] = s;
  return from_basis(dim, std::move(basis));
}

bool IntegerLattice::contains(const QVec& v) const {
  if (v.size() != ambient_dim_) throw std::invalid_argument("lattice membership dimension");
  if (rank() == 0) {
    for (const auto& x : v)
      if (x != 0) return false;
    return true;
  }
  std::vector<QVec> all = basis_;
  all.push_back(v);
  Int den = common_denominator(all);
  std::vector<std::vector<Int>> A(ambient_dim_, std::vector<Int>(rank(), Int(0)));
  std::vector<Int> w(ambient_dim_, Int(0));
  for (std::size_t i = 0; i < ambient_dim_; ++i) {
    for (std::size_t j = 0; j < rank(); ++j) {
      Rational scaled = basis_[j][i] * Rational(den);
      A[i][j] = scaled.get_num();
    }
    Rational scaled = v[i] * Rational(den);
    w[i] = scaled.get_num();
  }
  HnfResult hnf = column_hnf(std::move(A));
  std::vector<Int> y(rank(), Int(0));
  // Forward substitution down the echelon pivots; exactness of every
  // division plus a zero residual decides membership.
  for (std::size_t c = 0; c < hnf.pivot_rows.size(); ++c) {
    std::size_t r = hnf.pivot_rows[c];
    Int val = w[r];
    for (std::size_t c2 = 0; c2 < c; ++c2) val -= hnf.H[r][c2] * y[c2];
    Int q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), val.get_mpz_t(),
                hnf.H[r][c].get_mpz_t());
    if (rem != 0) return false;
    y[c] = q;
  }
  for (std::size_t i = 0; i < ambient_dim_; ++i) {
    Int acc(0);
    for (std::size_t c = 0; c < rank(); ++c) acc += hnf.H[i][c] * y[c];
    if (acc != w[i]) return false;
  }
  return true;
}

IntegerLattice IntegerLattice::intersect_subspace(const std::vector<QVec>& span) const {
  if (rank() == 0) return *this;
  for (const auto& s : span)
    if (s.size() != ambient_dim_)
      throw std::invalid_argument("subspace vector has wrong dimension");
  // Rows of P span the orthogonal complement; x in span <=> P x = 0.
  QMatrix S(span.size(), ambient_dim_);
  for (std::size_t i = 0; i < span.size(); ++i)
    for (std::size_t j = 0; j < ambient_dim_; ++j) S.at(i, j) = span[i][j];
  std::vector<QVec> P = kernel_basis(S);
  if (P.empty()) return *this;

  // Condition on lattice coordinates: (P B) x = 0 with x integral.
  std::vector<QVec> rows;
  for (const auto& p : P) {
    QVec row(rank(), Rational(0));
    for (std::size_t j = 0; j < rank(); ++j) row[j] = dot(p, basis_[j]);
    rows.push_back(std::move(row));
  }
  Int den = common_denominator(rows);
  std::vector<std::vector<Int>> M(rows.size(), std::vector<Int>(rank(), Int(0)));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rank(); ++j) {
      Rational scaled = rows[i][j] * Rational(den);
      M[i][j] = scaled.get_num();
    }
  HnfResult hnf = column_hnf(std::move(M));
  std::vector<QVec> sub_basis;
  for (std::size_t c = hnf.pivot_rows.size(); c < rank(); ++c) {
    QVec v(ambient_dim_, Rational(0));
    for (std::size_t j = 0; j < rank(); ++j)
      for (std::size_t i = 0; i < ambient_dim_; ++i)
        v[i] += Rational(hnf.U[j][c]) * basis_[j][i];
    sub_basis.push_back(std::move(v));
  }

  // Hermite-canonical presentation of the result, one global denominator.
  if (!sub_basis.empty()) {
    Int d2 = common_denominator(sub_basis);
    std::vector<std::vector<Int>> C(ambient_dim_,
                                    std::vector<Int>(sub_basis.size(), Int(0)));
    for (std::size_t j = 0; j < sub_basis.size(); ++j)
      for (std::size_t i = 0; i < ambient_dim_; ++i) {
        Rational scaled = sub_basis[j][i] * Rational(d2);
        C[i][j] = scaled.get_num();
      }
    HnfResult canon = column_hnf(std::move(C));
    std::vector<QVec> canon_basis;
    for (std::size_t c = 0; c < canon.pivot_rows.size(); ++c) {
      QVec v(ambient_dim_, Rational(0));
      for (std::size_t i = 0; i < ambient_dim_; ++i) {
        v[i] = Rational(canon.H[i][c]) / Rational(d2);
        v[i].canonicalize();
      }
      canon_basis.push_back(std::move(v));
    }
    sub_basis = std::move(canon_basis);
  }
  return from_basis(ambient_dim_, std::move(sub_basis));
}

IntegerLattice IntegerLattice::dual() const {
  if (rank() == 0) return *this;
  QMatrix B(ambient_dim_, rank());
  for (std::size_t j = 0; j < rank(); ++j)
    for (std::size_t i = 0; i < ambient_dim_; ++i) B.at(i, j) = basis_[j][i];
  QMatrix D = B * inverse(gram_);
  std::vector<QVec> dual_basis(rank(), QVec(ambient_dim_, Rational(0)));
  for (std::size_t j = 0; j < rank(); ++j)
    for (std::size_t i = 0; i < ambient_dim_; ++i) dual_basis[j][i] = D.at(i, j);
  return from_basis(ambient_dim_, std::move(dual_basis));
}

IntegerLattice IntegerLattice::scaled(const Rational& s) const {
  if (s == 0) throw std::invalid_argument("lattice scale must be nonzero");
  std::vector<QVec> b = basis_;
  for (auto& v : b)
    for (auto& x : v) x *= s;
  return from_basis(ambient_dim_, std::move(b));
}

namespace {

// Fincke-Pohst style recursion on the decomposed quadratic form
// Q(x) = sum_i d[i] (x_i + sum_{j>i} r[i][j] x_j)^2, innermost level 0.
// Integer candidates at each level are walked outward from the real center,
// so no square roots are needed.
void enumerate_level(const std::vector<Rational>& d,
                     const std::vector<std::vector<Rational>>& r, std::size_t level,
                     std::vector<Rational>& x, const Rational& budget,
                     const Rational& used, std::map<Rational, unsigned long>& out) {
  if (budget < 0) return;
  if (level == 0 && d.empty()) {
    ++out[used];
    return;
  }
  const std::size_t i = level - 1;
  Rational center(0);
  for (std::size_t j = i + 1; j < d.size(); ++j) center += r[i][j] * x[j];
  center = -center;
  Int start = round_rat(center);
  auto try_value = [&](const Int& xi) -> bool {
    Rational delta = Rational(xi) - center;
    Rational q = d[i] * delta * delta;
    if (q > budget) return false;
    x[i] = Rational(xi);
    if (i == 0)
      ++out[Rational(used + q)];
    else
      enumerate_level(d, r, i, x, Rational(budget - q), Rational(used + q), out);
    return true;
  };
  for (Int xi = start;; ++xi)
    if (!try_value(xi)) break;
  for (Int xi = start - 1;; --xi)
    if (!try_value(xi)) break;
}

}  // namespace

std::map<Rational, unsigned long> IntegerLattice::length_spectrum(
    const Rational& bound) const {
  if (bound < 0) throw std::invalid_argument("length_spectrum bound must be >= 0");
  std::map<Rational, unsigned long> out;
  const std::size_t k = rank();
  if (k == 0) {
    out[Rational(0)] = 1;
    return out;
  }
  // Decompose the Gram form: d[i] = diagonal weight, r[i][j] (j > i) the
  // unit-triangular mixing coefficients.
  std::vector<std::vector<Rational>> q(k, std::vector<Rational>(k, Rational(0)));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) q[i][j] = gram_.at(i, j);
  for (std::size_t i = 0; i < k; ++i) {
    if (q[i][i] <= 0) throw std::logic_error("length_spectrum: gram not positive definite");
    for (std::size_t j = i + 1; j < k; ++j) {
      q[j][i] = q[i][j];  // working value saved below the diagonal
      q[i][j] /= q[i][i];
    }
    for (std::size_t l = i + 1; l < k; ++l)
      for (std::size_t j = l; j < k; ++j) q[l][j] -= q[l][i] * q[i][j];
  }
  std::vector<Rational> d(k);
  std::vector<std::vector<Rational>> r(k, std::vector<Rational>(k, Rational(0)));
  for (std::size_t i = 0; i < k; ++i) {
    d[i] = q[i][i];
    for (std::size_t j = i + 1; j < k; ++j) r[i][j] = q[i][j];
  }
  std::vector<Rational> x(k, Rational(0));
  enumerate_level(d, r, k, x, bound, Rational(0), out);
  return out;
}

}  // namespace nilgeo
