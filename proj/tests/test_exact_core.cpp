#include <doctest.h>

#include <map>
#include <vector>

#include "nilgeo/lattice.hpp"
#include "nilgeo/linalg.hpp"
#include "nilgeo/matrix.hpp"
#include "nilgeo/poly.hpp"

using namespace nilgeo;

namespace {

Poly var(std::size_t nvars, std::size_t i) { return Poly::variable(nvars, i); }

QVec qv(std::initializer_list<long> xs) {
  QVec v;
  for (long x : xs) v.push_back(Rational(x));
  return v;
}

}  // namespace

TEST_CASE("polynomial arithmetic and substitution") {
  const Poly x = var(2, 0), y = var(2, 1);
  CHECK((x + y) * (x + y) == x * x + Poly(2) * x * y + y * y);
  CHECK((x - x).is_zero());
  CHECK(Poly(3) + x == x + Poly::constant(2, Rational(3)));

  const Poly p = x * x + Poly(4) * x + Poly(4);
  CHECK((x + Poly(2)) * (x + Poly(2)) == p);
  CHECK(p.eval(qv({3, 7})) == Rational(25));

  const Poly q = (x + y) * (x + y);
  const Poly q_sub = q.substitute({{1, Rational(2)}});
  CHECK(q_sub == x * x + Poly(4) * x + Poly(4));
  CHECK(q_sub.nvars() == 2);

  CHECK((Poly(2) * x * x + Poly(4)) / 2 == x * x + Poly(2));
}

TEST_CASE("polynomial content and exact division") {
  const Poly x = var(2, 0), y = var(2, 1);
  const Poly p = Poly(4) * x * x * y + Poly(6) * x * y * y;
  CHECK(p.numeric_content() == Rational(2));
  CHECK(p.monomial_content() == Poly::Exponents{1, 1});
  CHECK(p.divided_by(Rational(2), {1, 1}) == Poly(2) * x + Poly(3) * y);
  CHECK(Poly::zero(2).numeric_content() == Rational(1));
}

TEST_CASE("polynomial rendering is deterministic") {
  const Poly p = var(3, 0) * var(3, 0) * var(3, 1) -
                 Poly::constant(3, Rational(3) / 2) * var(3, 2);
  CHECK(p.to_string(central_var_names(3)) == "c1^2*c2 - 3/2*c3");
  CHECK(Poly::zero(3).to_string() == "0");
}

TEST_CASE("reduced row echelon form, rank, kernel") {
  QMatrix M{{1, 2, 3}, {2, 4, 6}};
  CHECK(rank(M) == 1);
  const auto ker = kernel_basis(M);
  REQUIRE(ker.size() == 2);
  for (const auto& v : ker) CHECK(vec_is_zero(M * v));

  std::vector<std::size_t> pivots;
  const QMatrix R = rref(QMatrix{{0, 1}, {1, 0}}, &pivots);
  CHECK(R.is_identity());
  CHECK(pivots == std::vector<std::size_t>{0, 1});
}

TEST_CASE("determinant and inverse") {
  // Vandermonde on 1, 2, 3, 4: product of the differences.
  QMatrix V(4, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    Rational a(static_cast<long>(i) + 1), p(1);
    for (std::size_t j = 0; j < 4; ++j) {
      V.at(i, j) = p;
      p *= a;
    }
  }
  CHECK(det(V) == Rational(12));

  const QMatrix M{{2, 1}, {1, 1}};
  const QMatrix Minv = inverse(M);
  CHECK((M * Minv).is_identity());
  CHECK(Minv == QMatrix{{1, -1}, {-1, 2}});
  CHECK(det(QMatrix{{1, 2}, {2, 4}}) == Rational(0));
  CHECK_THROWS_AS(inverse(QMatrix{{1, 2}, {2, 4}}), std::invalid_argument);
}

TEST_CASE("linear solve: solution family and impossibility certificate") {
  const QMatrix A{{1, 2}, {2, 4}};

  const auto good = solve_linear(A, qv({1, 2}));
  REQUIRE(good.consistent);
  CHECK(A * good.particular == qv({1, 2}));
  REQUIRE(good.kernel.size() == 1);
  CHECK(vec_is_zero(A * good.kernel[0]));
  CHECK_FALSE(good.unique());

  const auto bad = solve_linear(A, qv({1, 3}));
  REQUIRE_FALSE(bad.consistent);
  // y certifies inconsistency: y^T A = 0 and y^T b != 0.
  REQUIRE(bad.impossibility.size() == 2);
  const QMatrix At = A.transpose();
  CHECK(vec_is_zero(At * bad.impossibility));
  CHECK(dot(bad.impossibility, qv({1, 3})) != Rational(0));
}

TEST_CASE("characteristic polynomial, ascending coefficients") {
  CHECK(charpoly(QMatrix{{0, 1}, {-1, 0}}) == std::vector<Rational>{1, 0, 1});

  QMatrix D(3, 3);
  D.at(0, 0) = 1;
  D.at(1, 1) = 2;
  D.at(2, 2) = 3;
  CHECK(charpoly(D) == std::vector<Rational>{-6, 11, -6, 1});

  // Coefficients against trace, principal 2x2 minors, determinant.
  const QMatrix M{{1, 2, 0}, {0, 1, 1}, {5, 0, 2}};
  CHECK(charpoly(M) == std::vector<Rational>{-12, 5, -4, 1});
}

TEST_CASE("characteristic polynomial over polynomial entries") {
  const Poly x = var(1, 0);
  PMatrix M(2, 2);
  M.at(0, 0) = x;
  M.at(0, 1) = Poly(1);
  M.at(1, 1) = x;
  M.at(1, 0) = Poly::zero(1);
  const auto c = charpoly(M);
  REQUIRE(c.size() == 3);
  CHECK(c[0] == x * x);
  CHECK(c[1] == Poly(-2) * x);
  CHECK(c[2] == Poly(1));
  CHECK(poly_det(M) == x * x);
}

TEST_CASE("symbolic kernel annihilates the matrix identically") {
  const Poly x = var(2, 0), y = var(2, 1);
  PMatrix M(2, 2);
  M.at(0, 0) = x;
  M.at(0, 1) = y;
  M.at(1, 0) = Poly::zero(2);
  M.at(1, 1) = Poly::zero(2);
  const auto k = symbolic_kernel(M, 0);
  CHECK(k.generic_rank == 1);
  REQUIRE(k.basis.size() == 1);
  const auto Mv = M * k.basis[0];
  for (const auto& e : Mv) CHECK(e.is_zero());
  CHECK_FALSE(k.pivot_product.is_zero());
}

TEST_CASE("monomial detection and monomial minors") {
  const Poly x = var(2, 0), y = var(2, 1);
  CHECK(is_monomial_in_var(x * x, 0));
  CHECK(is_monomial_in_var(Poly(3) * x * x * x * x, 0));
  CHECK(is_monomial_in_var(Poly(5), 0));
  CHECK_FALSE(is_monomial_in_var(x * y, 0));
  CHECK_FALSE(is_monomial_in_var(x + Poly(1), 0));
  CHECK_FALSE(is_monomial_in_var(Poly::zero(2), 0));

  PMatrix M(2, 2);
  M.at(0, 0) = x;
  M.at(0, 1) = Poly(1);
  M.at(1, 0) = Poly(1);
  M.at(1, 1) = x;
  const auto one = find_monomial_minor(M, 1, 0);
  REQUIRE(one.has_value());
  CHECK(is_monomial_in_var(*one, 0));
  // The only 2x2 minor is x^2 - 1: no certificate at that size.
  CHECK_FALSE(find_monomial_minor(M, 2, 0).has_value());

  PMatrix D(2, 2);
  D.at(0, 0) = x;
  D.at(1, 1) = y;
  D.at(0, 1) = Poly::zero(2);
  D.at(1, 0) = Poly::zero(2);
  // det = x*y involves the other variable: not a certificate in x alone.
  CHECK_FALSE(find_monomial_minor(D, 2, 0).has_value());
}

TEST_CASE("column Hermite normal form") {
  const std::vector<std::vector<Int>> A{{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}};
  const auto r = column_hnf(A);
  const std::size_t n = 3;

  // A * U = H, with U unimodular.
  std::vector<std::vector<Int>> AU(n, std::vector<Int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) AU[i][j] += A[i][k] * r.U[k][j];
  CHECK(AU == r.H);

  QMatrix Uq(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) Uq.at(i, j) = Rational(r.U[i][j]);
  const Rational dU = det(Uq);
  CHECK((dU == Rational(1) || dU == Rational(-1)));

  // Echelon shape: pivot rows strictly increase, pivots positive.
  for (std::size_t c = 0; c + 1 < r.pivot_rows.size(); ++c)
    CHECK(r.pivot_rows[c] < r.pivot_rows[c + 1]);
  for (std::size_t c = 0; c < r.pivot_rows.size(); ++c)
    CHECK(r.H[r.pivot_rows[c]][c] > 0);
}

TEST_CASE("lattice membership") {
  const auto Z2 = IntegerLattice::standard(2);
  CHECK(Z2.contains(qv({3, -5})));
  CHECK_FALSE(Z2.contains(QVec{Rational(1) / 2, Rational(0)}));

  const auto halves = IntegerLattice::scaled_standard(2, Rational(1) / 2);
  CHECK(halves.contains(QVec{Rational(1) / 2, Rational(-3) / 2}));
  CHECK_FALSE(halves.contains(QVec{Rational(1) / 3, Rational(0)}));

  // Skew basis: membership is about integer combinations, not the box.
  const auto L = IntegerLattice::from_basis(2, {qv({1, 0}), qv({1, 2})});
  CHECK(L.contains(qv({0, 2})));
  CHECK(L.contains(qv({3, -4})));
  CHECK_FALSE(L.contains(qv({0, 1})));
}

TEST_CASE("dual lattice of a scaled standard lattice") {
  const auto L = IntegerLattice::scaled_standard(3, Rational(1) / 2);
  const auto D = L.dual();
  const auto expect = IntegerLattice::scaled_standard(3, Rational(2));
  REQUIRE(D.rank() == 3);
  for (const auto& b : D.basis()) CHECK(expect.contains(b));
  for (const auto& b : expect.basis()) CHECK(D.contains(b));
}

TEST_CASE("sublattice in a subspace") {
  const auto Z2 = IntegerLattice::standard(2);
  const auto L = Z2.intersect_subspace({qv({1, 1})});
  REQUIRE(L.rank() == 1);
  CHECK(L.contains(qv({1, 1})));
  CHECK(L.contains(qv({-4, -4})));
  CHECK_FALSE(L.contains(QVec{Rational(1) / 2, Rational(1) / 2}));
  CHECK_FALSE(L.contains(qv({1, 0})));
}

TEST_CASE("length spectrum of the square lattice") {
  const auto spec = IntegerLattice::standard(2).length_spectrum(Rational(5));
  const std::map<Rational, unsigned long> expect{
      {Rational(0), 1}, {Rational(1), 4}, {Rational(2), 4}, {Rational(4), 4}, {Rational(5), 8}};
  CHECK(spec == expect);
}

TEST_CASE("length spectrum matches brute force on a skew lattice") {
  const auto L = IntegerLattice::from_basis(2, {qv({1, 0}), qv({1, 2})});
  const Rational bound(9);
  std::map<Rational, unsigned long> brute;
  for (long a = -6; a <= 6; ++a)
    for (long b = -4; b <= 4; ++b) {
      const Rational x(a + b), y(2 * b);
      Rational n2 = x * x;
      n2 += y * y;
      if (n2 <= bound) ++brute[n2];
    }
  CHECK(L.length_spectrum(bound) == brute);
}
