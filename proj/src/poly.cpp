#include "nilgeo/poly.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace nilgeo {

Poly Poly::zero(std::size_t nvars) {
  Poly p;
  p.nvars_ = nvars;
  return p;
}

Poly Poly::constant(std::size_t nvars, const Rational& c) {
  Poly p = zero(nvars);
  if (c != 0) p.terms_[Exponents(nvars, 0)] = c;
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw std::invalid_argument("Poly::variable index out of range");
  Poly p = zero(nvars);
  Exponents e(nvars, 0);
  e[index] = 1;
  p.terms_[e] = Rational(1);
  return p;
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 &&
         std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                     [](unsigned e) { return e == 0; });
}

Rational Poly::constant_value() const {
  auto it = terms_.find(Exponents(nvars_, 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

std::size_t Poly::total_degree() const {
  std::size_t d = 0;
  for (const auto& [e, c] : terms_) {
    std::size_t t = 0;
    for (unsigned x : e) t += x;
    d = std::max(d, t);
  }
  return d;
}

void Poly::insert_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Poly::promote(Poly& a, Poly& b) {
  if (a.nvars_ == b.nvars_) return;
  Poly* small = a.nvars_ < b.nvars_ ? &a : &b;
  std::size_t target = std::max(a.nvars_, b.nvars_);
  if (!small->is_constant())
    throw std::invalid_argument("Poly: variable-count mismatch on non-constant operand");
  *small = constant(target, small->constant_value());
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  Poly rhs = o;
  promote(*this, rhs);
  for (const auto& [e, c] : rhs.terms_) insert_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  Poly rhs = o;
  promote(*this, rhs);
  for (const auto& [e, c] : rhs.terms_) insert_term(e, Rational(-c));
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  Poly::promote(x, y);
  Poly r = Poly::zero(x.nvars_);
  for (const auto& [ea, ca] : x.terms_) {
    for (const auto& [eb, cb] : y.terms_) {
      Poly::Exponents e(x.nvars_);
      for (std::size_t i = 0; i < x.nvars_; ++i) e[i] = ea[i] + eb[i];
      r.insert_term(e, Rational(ca * cb));
    }
  }
  return r;
}

Poly Poly::operator/(long k) const {
  if (k == 0) throw std::invalid_argument("Poly: division by zero");
  Poly r = *this;
  for (auto& [e, c] : r.terms_) c /= k;
  return r;
}

Poly Poly::operator*(const Rational& s) const {
  if (s == 0) return zero(nvars_);
  Poly r = *this;
  for (auto& [e, c] : r.terms_) c *= s;
  return r;
}

bool Poly::operator==(const Poly& o) const {
  if (nvars_ == o.nvars_) return terms_ == o.terms_;
  Poly a = *this, b = o;
  promote(a, b);
  return a.terms_ == b.terms_;
}

Rational Poly::eval(const QVec& point) const {
  // Variable-free polynomials are constants; they evaluate anywhere.
  if (nvars_ == 0) return constant_value();
  if (point.size() != nvars_) throw std::invalid_argument("Poly::eval wrong point size");
  Rational sum(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (unsigned k = 0; k < e[i]; ++k) t *= point[i];
    sum += t;
  }
  return sum;
}

Poly Poly::substitute(const std::map<std::size_t, Rational>& values) const {
  Poly r = zero(nvars_);
  for (const auto& [e, c] : terms_) {
    Rational coeff = c;
    Exponents rest = e;
    bool dead = false;
    for (const auto& [idx, val] : values) {
      if (e[idx] == 0) continue;
      if (val == 0) {
        dead = true;
        break;
      }
      for (unsigned k = 0; k < e[idx]; ++k) coeff *= val;
      rest[idx] = 0;
    }
    if (!dead) r.insert_term(rest, coeff);
  }
  return r;
}

Rational Poly::numeric_content() const {
  if (terms_.empty()) return Rational(1);
  Int g(0), l(1);
  for (const auto& [e, c] : terms_) {
    Int num = c.get_num(), den = c.get_den();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
  }
  Rational content(g, l);
  content.canonicalize();
  return content;
}

Poly::Exponents Poly::monomial_content() const {
  Exponents mono(nvars_, 0);
  if (terms_.empty()) return mono;
  mono = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < nvars_; ++i) mono[i] = std::min(mono[i], e[i]);
  return mono;
}

Poly Poly::divided_by(const Rational& c, const Exponents& mono) const {
  if (c == 0) throw std::invalid_argument("Poly::divided_by zero");
  Poly r = zero(nvars_);
  for (const auto& [e, coeff] : terms_) {
    Exponents q(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] < mono[i]) throw std::invalid_argument("Poly::divided_by non-divisible term");
      q[i] = e[i] - mono[i];
    }
    r.insert_term(q, Rational(coeff / c));
  }
  return r;
}

std::string Poly::to_string(const std::vector<std::string>& var_names) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Highest-degree-last map order is fine; print in reverse for readability.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational a = c;
    if (first) {
      if (a < 0) {
        out << "-";
        a = -a;
      }
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool has_vars = std::any_of(e.begin(), e.end(), [](unsigned x) { return x != 0; });
    bool printed_coeff = false;
    if (a != 1 || !has_vars) {
      out << nilgeo::to_string(a);
      printed_coeff = true;
    }
    bool any = false;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (printed_coeff || any) out << "*";
      if (i < var_names.size())
        out << var_names[i];
      else
        out << "x" << i;
      if (e[i] > 1) out << "^" << e[i];
      any = true;
    }
  }
  return out.str();
}

std::vector<std::string> central_var_names(std::size_t m) {
  std::vector<std::string> names;
  names.reserve(m);
  for (std::size_t k = 1; k <= m; ++k) names.push_back("c" + std::to_string(k));
  return names;
}

}  // namespace nilgeo
