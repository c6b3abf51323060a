#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "nilgeo/rational.hpp"

namespace nilgeo {

/// Sparse multivariate polynomial over Rational in a fixed number of
/// variables. Terms map exponent vectors to nonzero coefficients; the zero
/// polynomial stores no terms. Arithmetic is exact.
///
/// Polynomials with different variable counts may be combined only when one
/// side is constant; the constant is promoted to the other side's variable
/// space. This lets integer/Rational literals mix freely with symbolic
/// entries in generic matrix code.
class Poly {
 public:
  using Exponents = std::vector<unsigned>;

  Poly() : nvars_(0) {}
  Poly(long c) { *this = constant(0, Rational(c)); }  // NOLINT: implicit
  Poly(const Rational& c) { *this = constant(0, c); }  // NOLINT: implicit

  static Poly zero(std::size_t nvars);
  static Poly constant(std::size_t nvars, const Rational& c);
  static Poly variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (the coefficient of the all-zero exponent vector).
  Rational constant_value() const;
  std::size_t total_degree() const;

  const std::map<Exponents, Rational>& terms() const { return terms_; }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  /// Division by a nonzero integer constant (always exact over Q
  /// coefficients). Used by the characteristic-polynomial recurrence.
  Poly operator/(long k) const;
  Poly operator*(const Rational& s) const;

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Rational eval(const QVec& point) const;
  /// Substitutes the given variables by rational values; the result keeps
  /// the same variable space.
  Poly substitute(const std::map<std::size_t, Rational>& values) const;

  /// Positive rational c such that (*this)/c has coprime integer
  /// coefficients; 1 for the zero polynomial.
  Rational numeric_content() const;
  /// Componentwise minimum of the exponent vectors over all terms; all
  /// zeros for the zero polynomial.
  Exponents monomial_content() const;
  /// Exact division by c times the monomial with exponents mono. The
  /// caller guarantees every term is divisible.
  Poly divided_by(const Rational& c, const Exponents& mono) const;

  /// Renders in a deterministic order, e.g. "c1^2*c2 - 3/2*c3". Variable
  /// names default to x0, x1, ... when none are given.
  std::string to_string(const std::vector<std::string>& var_names = {}) const;

 private:
  void insert_term(const Exponents& e, const Rational& c);
  static void promote(Poly& a, Poly& b);

  std::size_t nvars_;
  std::map<Exponents, Rational> terms_;
};

/// Convenience: names c1..cm for central coordinates.
std::vector<std::string> central_var_names(std::size_t m);

}  // namespace nilgeo
