#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace nilgeo {

/// Arbitrary-precision integer and rational scalars. Rationals are kept
/// canonical (lowest terms, positive denominator); equality is exact.
using Int = mpz_class;
using Rational = mpq_class;

/// Rational vector in coordinates.
using QVec = std::vector<Rational>;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses "p/q" or "p" (base 10). Throws ParseError on malformed input or
/// a zero denominator.
inline Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
    throw ParseError("not a rational: '" + text + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

/// Renders canonically as "p" or "p/q".
inline std::string to_string(const Rational& q) {
  return q.get_str();
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline Rational abs_rat(const Rational& q) {
  Rational a;
  mpq_abs(a.get_mpq_t(), q.get_mpq_t());
  return a;
}

/// Largest integer <= q.
inline Int floor_rat(const Rational& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

/// Nearest integer to q (ties toward +inf); used to seed lattice
/// enumeration intervals.
inline Int round_rat(const Rational& q) {
  return floor_rat(q + Rational(1, 2));
}

inline QVec parse_rational_vec(const std::vector<std::string>& parts) {
  QVec v;
  v.reserve(parts.size());
  for (const auto& p : parts) v.push_back(parse_rational(p));
  return v;
}

}  // namespace nilgeo
