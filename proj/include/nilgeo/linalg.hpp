#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nilgeo/matrix.hpp"
#include "nilgeo/poly.hpp"
#include "nilgeo/rational.hpp"

namespace nilgeo {

inline Rational ring_div(const Rational& x, long k) { return Rational(x / Rational(k)); }
inline Poly ring_div(const Poly& x, long k) { return x / k; }

/// Characteristic polynomial det(lambda*I - M) by the Faddeev-LeVerrier
/// recurrence (divisions only by integers 1..dim, exact over Rational and
/// Poly coefficients). Returns coefficients in ascending degree; the
/// leading coefficient is 1.
template <typename R>
std::vector<R> charpoly(const Matrix<R>& A) {
  if (A.rows() != A.cols()) throw std::invalid_argument("charpoly of non-square matrix");
  const std::size_t n = A.rows();
  std::vector<R> c(n + 1, R(0));
  c[n] = R(1);
  Matrix<R> M = Matrix<R>::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix<R> AM = A * M;
    c[n - k] = ring_div(-AM.trace(), static_cast<long>(k));
    if (k < n) M = AM + Matrix<R>::identity(n) * c[n - k];
  }
  return c;
}

/// Reduced row echelon form; pivot entries are 1, pivot columns ascending.
/// Pivot column indices are appended to *pivot_cols when given.
QMatrix rref(QMatrix M, std::vector<std::size_t>* pivot_cols = nullptr);

std::size_t rank(const QMatrix& M);

/// Null-space basis normalized from the RREF: one vector per free column
/// (ascending), with entry 1 in that free column. Empty for injective maps.
std::vector<QVec> kernel_basis(const QMatrix& M);

/// Determinant by fraction-free (Bareiss) elimination.
Rational det(const QMatrix& M);

/// Inverse by Gauss-Jordan; throws std::invalid_argument when singular.
QMatrix inverse(const QMatrix& M);

/// Outcome of an exact linear solve A x = b.
///
/// When consistent, the solution set is particular + span(kernel); unique
/// iff kernel is empty. When inconsistent, impossibility holds a row
/// functional y with y^T A = 0 and y^T b != 0, certifying that no solution
/// exists.
struct LinearSolveResult {
  bool consistent = false;
  QVec particular;
  std::vector<QVec> kernel;
  QVec impossibility;
  bool unique() const { return consistent && kernel.empty(); }
};

LinearSolveResult solve_linear(const QMatrix& A, const QVec& b);

/// Determinant over Poly entries by cofactor expansion (small matrices).
Poly poly_det(const PMatrix& M);

/// Null space of a polynomial matrix, computed by fraction-free
/// Gauss-Jordan elimination.
///
/// The basis vectors have polynomial entries and satisfy M v = 0 as a
/// polynomial identity. They span the full null space at every point
/// where pivot_product is nonzero; generic_rank is the rank attained
/// there. Pivot selection prefers entries that are monomials in variable
/// prefer_var (pass nvars or larger to disable the preference), so that on
/// a stratum where that variable is nonzero the basis tends to be valid
/// everywhere. Each basis vector is divided by its content (common
/// rational factor and common monomial factor).
struct SymbolicKernel {
  std::vector<std::vector<Poly>> basis;
  std::size_t generic_rank = 0;
  Poly pivot_product;
};

SymbolicKernel symbolic_kernel(const PMatrix& M, std::size_t prefer_var);

/// True iff p is a single term q * x_var^a with q != 0 (a may be 0).
bool is_monomial_in_var(const Poly& p, std::size_t var);

/// Searches the size x size minors of M for one equal to a nonzero
/// rational multiple of a power of x_var; such a minor certifies
/// rank(M) >= size at every point where x_var != 0.
std::optional<Poly> find_monomial_minor(const PMatrix& M, std::size_t size,
                                        std::size_t var);

}  // namespace nilgeo
