#pragma once

// Exact integer Laurent polynomials in one indeterminate.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace burau {

using Integer = boost::multiprecision::cpp_int;

class LaurentPoly {
 public:
  using Terms = std::map<int, Integer>;

  LaurentPoly() = default;
  LaurentPoly(int c) { add_term(0, Integer(c)); }  // NOLINT: implicit scalar
  LaurentPoly(const Integer& c) { add_term(0, c); }  // NOLINT

  static LaurentPoly monomial(int exp, const Integer& coef = 1) {
    LaurentPoly p;
    p.add_term(exp, coef);
    return p;
  }
  static LaurentPoly t() { return monomial(1); }

  /// Builds from (exponent, coefficient) pairs; repeated exponents accumulate.
  static LaurentPoly from_terms(std::initializer_list<std::pair<int, int>> terms) {
    LaurentPoly p;
    for (auto [e, c] : terms) p.add_term(e, Integer(c));
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int min_exp() const { return terms_.empty() ? 0 : terms_.begin()->first; }
  int max_exp() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }
  Integer coef(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  /// True for ±t^k.
  bool is_unit() const {
    return terms_.size() == 1 && (terms_.begin()->second == 1 || terms_.begin()->second == -1);
  }

  void add_term(int exp, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(exp, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly r;
    for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
    return r;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ < b.terms_; }

  /// Multiplies by t^k.
  LaurentPoly shifted(int k) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
    return r;
  }

  /// p(t) -> p(t^k), k may be negative.
  LaurentPoly substitute_power(int k) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.add_term(e * k, c);
    return r;
  }

  /// p(t) -> p(t^{1/k}); nullopt if some exponent is not divisible by k.
  std::optional<LaurentPoly> root_substitute(int k) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) {
      if (e % k != 0) return std::nullopt;
      r.add_term(e / k, c);
    }
    return r;
  }

  LaurentPoly pow(unsigned n) const {
    LaurentPoly r = 1;
    LaurentPoly base = *this;
    while (n) {
      if (n & 1u) r *= base;
      base *= base;
      n >>= 1u;
    }
    return r;
  }

  /// Inverse of a unit ±t^k.
  LaurentPoly unit_inverse() const {
    if (!is_unit()) throw std::domain_error("LaurentPoly: not a unit");
    return monomial(-terms_.begin()->first, terms_.begin()->second);
  }

  /// Human-readable form, ascending exponents, e.g. "1 - t + t^2".
  std::string to_string(const std::string& var = "t") const;

 private:
  Terms terms_;
};

/// Exact quotient a / b, or nullopt when b does not divide a in Z[t, t^-1].
inline std::optional<LaurentPoly> exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("exact_divide: division by zero");
  if (a.is_zero()) return LaurentPoly{};
  // Work with ordinary polynomials: strip the lowest exponent of both.
  const int shift = a.min_exp() - b.min_exp();
  LaurentPoly rem = a.shifted(-a.min_exp());
  const LaurentPoly den = b.shifted(-b.min_exp());
  const int dd = den.max_exp();
  const Integer lead = den.coef(dd);
  LaurentPoly quot;
  while (!rem.is_zero() && rem.max_exp() >= dd) {
    const int e = rem.max_exp();
    const Integer c = rem.coef(e);
    if (c % lead != 0) return std::nullopt;
    LaurentPoly step = LaurentPoly::monomial(e - dd, c / lead);
    quot += step;
    rem -= step * den;
  }
  if (!rem.is_zero()) return std::nullopt;
  return quot.shifted(shift);
}

/// Multiplies by ±t^k so that the lowest exponent is 0 and its coefficient is positive.
inline LaurentPoly normalize_up_to_units(const LaurentPoly& p) {
  if (p.is_zero()) throw std::domain_error("normalize_up_to_units: zero polynomial");
  LaurentPoly r = p.shifted(-p.min_exp());
  if (r.coef(0) < 0) r = -r;
  return r;
}

inline std::string LaurentPoly::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Integer mag = c < 0 ? Integer(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    os << var;
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

}  // namespace burau
