#include "nilgeo/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace nilgeo {

QMatrix rref(QMatrix M, std::vector<std::size_t>* pivot_cols) {
  const std::size_t rows = M.rows(), cols = M.cols();
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (M.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(M.at(r, j), M.at(piv, j));
    Rational inv = Rational(1) / M.at(r, col);
    for (std::size_t j = col; j < cols; ++j) M.at(r, j) = M.at(r, j) * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || M.at(i, col) == 0) continue;
      Rational f = M.at(i, col);
      for (std::size_t j = col; j < cols; ++j) M.at(i, j) -= f * M.at(r, j);
    }
    if (pivot_cols) pivot_cols->push_back(col);
    ++r;
  }
  return M;
}

std::size_t rank(const QMatrix& M) {
  std::vector<std::size_t> pivots;
  rref(M, &pivots);
  return pivots.size();
}

std::vector<QVec> kernel_basis(const QMatrix& M) {
  std::vector<std::size_t> pivots;
  QMatrix E = rref(M, &pivots);
  const std::size_t cols = M.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<QVec> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    QVec v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -E.at(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational det(const QMatrix& Min) {
  if (Min.rows() != Min.cols()) throw std::invalid_argument("det of non-square matrix");
  const std::size_t n = Min.rows();
  if (n == 0) return 1;
  QMatrix M = Min;
  Rational prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (M.at(k, k) == 0) {
      std::size_t piv = n;
      for (std::size_t i = k + 1; i < n; ++i)
        if (M.at(i, k) != 0) {
          piv = i;
          break;
        }
      if (piv == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(M.at(k, j), M.at(piv, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        M.at(i, j) = (M.at(i, j) * M.at(k, k) - M.at(i, k) * M.at(k, j)) / prev;
      M.at(i, k) = 0;
    }
    prev = M.at(k, k);
  }
  Rational d = M.at(n - 1, n - 1);
  return sign > 0 ? d : Rational(-d);
}

QMatrix inverse(const QMatrix& M) {
  if (M.rows() != M.cols()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = M.rows();
  QMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = M.at(i, j);
    aug.at(i, n + i) = 1;
  }
  std::vector<std::size_t> pivots;
  QMatrix E = rref(aug, &pivots);
  if (pivots.size() != n || pivots.back() != n - 1)
    throw std::invalid_argument("inverse of singular matrix");
  QMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = E.at(i, n + j);
  return inv;
}

LinearSolveResult solve_linear(const QMatrix& A, const QVec& b) {
  if (A.rows() != b.size()) throw std::invalid_argument("solve_linear shape mismatch");
  const std::size_t rows = A.rows(), cols = A.cols();
  QMatrix aug(rows, cols + 1);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, cols) = b[i];
  }
  std::vector<std::size_t> pivots;
  QMatrix E = rref(aug, &pivots);
  LinearSolveResult out;
  if (!pivots.empty() && pivots.back() == cols) {
    out.consistent = false;
    for (const QVec& y : kernel_basis(A.transpose())) {
      if (dot(y, b) != 0) {
        out.impossibility = y;
        break;
      }
    }
    return out;
  }
  out.consistent = true;
  out.particular.assign(cols, Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) out.particular[pivots[i]] = E.at(i, cols);
  out.kernel = kernel_basis(A);
  return out;
}

Poly poly_det(const PMatrix& M) {
  if (M.rows() != M.cols()) throw std::invalid_argument("poly_det of non-square matrix");
  const std::size_t n = M.rows();
  if (n == 0) return Poly(1);
  if (n == 1) return M.at(0, 0);
  Poly d(0);
  for (std::size_t i = 0; i < n; ++i) {
    if (M.at(i, 0).is_zero()) continue;
    PMatrix sub(n - 1, n - 1);
    for (std::size_t r = 0, sr = 0; r < n; ++r) {
      if (r == i) continue;
      for (std::size_t c = 1; c < n; ++c) sub.at(sr, c - 1) = M.at(r, c);
      ++sr;
    }
    Poly term = M.at(i, 0) * poly_det(sub);
    if (i % 2)
      d -= term;
    else
      d += term;
  }
  return d;
}

bool is_monomial_in_var(const Poly& p, std::size_t var) {
  if (p.terms().size() != 1) return false;
  const auto& e = p.terms().begin()->first;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (i != var && e[i] != 0) return false;
  return true;
}

namespace {

std::size_t matrix_nvars(const PMatrix& M) {
  std::size_t nv = 0;
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j) nv = std::max(nv, M.at(i, j).nvars());
  return nv;
}

// Divides out the common rational and monomial content of a polynomial row
// or vector; flips signs so the first nonzero entry has a positive leading
// coefficient. Appends each removed monomial variable to *removed when
// given (removing x^e is only harmless where x != 0).
void normalize_poly_vec(std::vector<Poly>& v, std::size_t nvars, Poly* removed) {
  Rational content(0);
  std::vector<unsigned> mono;
  bool any = false;
  for (const Poly& p : v) {
    if (p.is_zero()) continue;
    Rational pc = p.numeric_content();
    Poly::Exponents pm = p.monomial_content();
    if (!any) {
      content = pc;
      mono = pm;
      any = true;
    } else {
      Int g, l;
      mpz_gcd(g.get_mpz_t(), content.get_num_mpz_t(), pc.get_num_mpz_t());
      // contents are c1/d1, c2/d2 with the vector entries integer multiples
      // of gcd(c1,c2)/lcm(d1,d2)
      mpz_lcm(l.get_mpz_t(), content.get_den_mpz_t(), pc.get_den_mpz_t());
      content = Rational(g, l);
      content.canonicalize();
      for (std::size_t i = 0; i < mono.size(); ++i) mono[i] = std::min(mono[i], pm[i]);
    }
  }
  if (!any) return;
  for (Poly& p : v) p = p.divided_by(content, p.is_zero() ? Poly::Exponents(p.nvars(), 0) : mono);
  for (const Poly& p : v) {
    if (p.is_zero()) continue;
    if (p.terms().rbegin()->second < 0)
      for (Poly& q : v) q = -q;
    break;
  }
  if (removed)
    for (std::size_t i = 0; i < mono.size(); ++i)
      for (unsigned k = 0; k < mono[i]; ++k) *removed *= Poly::variable(nvars, i);
}

}  // namespace

SymbolicKernel symbolic_kernel(const PMatrix& Min, std::size_t prefer_var) {
  const std::size_t rows = Min.rows(), cols = Min.cols();
  const std::size_t nv = matrix_nvars(Min);
  PMatrix E(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      E.at(i, j) = Min.at(i, j) + Poly::zero(nv);

  SymbolicKernel out;
  out.pivot_product = Poly::constant(nv, Rational(1));
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t best = rows;
    long best_score = 0;
    for (std::size_t i = r; i < rows; ++i) {
      const Poly& p = E.at(i, col);
      if (p.is_zero()) continue;
      long score = (is_monomial_in_var(p, prefer_var) ? 0 : 1000000) +
                   static_cast<long>(p.terms().size()) * 1000 +
                   static_cast<long>(p.total_degree());
      if (best == rows || score < best_score) {
        best = i;
        best_score = score;
      }
    }
    if (best == rows) continue;
    if (best != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(E.at(r, j), E.at(best, j));
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || E.at(i, col).is_zero()) continue;
      const Poly p = E.at(r, col);
      const Poly f = E.at(i, col);
      std::vector<Poly> row(cols);
      for (std::size_t j = 0; j < cols; ++j) row[j] = p * E.at(i, j) - f * E.at(r, j);
      normalize_poly_vec(row, nv, &out.pivot_product);
      for (std::size_t j = 0; j < cols; ++j) E.at(i, j) = row[j];
    }
    pivot_cols.push_back(col);
    ++r;
  }
  out.generic_rank = pivot_cols.size();
  for (std::size_t i = 0; i < pivot_cols.size(); ++i)
    out.pivot_product *= E.at(i, pivot_cols[i]);

  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivot_cols) is_pivot[c] = true;
  std::vector<Poly> final_pivots(pivot_cols.size());
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) final_pivots[i] = E.at(i, pivot_cols[i]);
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Poly> v(cols, Poly::zero(nv));
    Poly all = Poly::constant(nv, Rational(1));
    for (const Poly& p : final_pivots) all *= p;
    v[f] = all;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
      Poly rest = Poly::constant(nv, Rational(1));
      for (std::size_t k = 0; k < final_pivots.size(); ++k)
        if (k != i) rest *= final_pivots[k];
      v[pivot_cols[i]] = -(E.at(i, f) * rest);
    }
    normalize_poly_vec(v, nv, nullptr);
    // Basis vectors must lie in the null space as a polynomial identity.
    for (std::size_t i = 0; i < rows; ++i) {
      Poly s(0);
      for (std::size_t j = 0; j < cols; ++j) s += Min.at(i, j) * v[j];
      if (!s.is_zero()) throw std::logic_error("symbolic_kernel: residual nonzero");
    }
    out.basis.push_back(std::move(v));
  }
  return out;
}

namespace {

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] + (k - i) < n) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<std::size_t> first_combination(std::size_t k) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  return idx;
}

}  // namespace

std::optional<Poly> find_monomial_minor(const PMatrix& M, std::size_t size,
                                        std::size_t var) {
  if (size == 0) return Poly(1);
  if (size > M.rows() || size > M.cols()) return std::nullopt;
  std::vector<std::size_t> rows_sel = first_combination(size);
  do {
    std::vector<std::size_t> cols_sel = first_combination(size);
    do {
      PMatrix sub(size, size);
      for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j)
          sub.at(i, j) = M.at(rows_sel[i], cols_sel[j]);
      Poly d = poly_det(sub);
      if (!d.is_zero() && is_monomial_in_var(d, var)) return d;
    } while (next_combination(cols_sel, M.cols()));
  } while (next_combination(rows_sel, M.rows()));
  return std::nullopt;
}

}  // namespace nilgeo
