#pragma once

// Integral group ring Z[F_m] with finitely supported elements.

#include "burau/free_word.hpp"
#include "burau/laurent.hpp"

#include <map>
#include <string>

namespace burau {

class GroupRingElement {
 public:
  using Terms = std::map<FreeWord, Integer>;

  GroupRingElement() = default;
  explicit GroupRingElement(const FreeWord& w, const Integer& c = 1) { add(w, c); }

  static GroupRingElement one(int rank) { return GroupRingElement(FreeWord(rank)); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const FreeWord& w, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  GroupRingElement& operator+=(const GroupRingElement& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
  }
  GroupRingElement& operator-=(const GroupRingElement& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
  }
  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
  friend GroupRingElement operator-(const GroupRingElement& a) {
    GroupRingElement r;
    for (const auto& [w, c] : a.terms_) r.add(w, -c);
    return r;
  }
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
    GroupRingElement r;
    for (const auto& [u, cu] : a.terms_)
      for (const auto& [v, cv] : b.terms_) r.add(u * v, cu * cv);
    return r;
  }
  friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

  /// Applies a group endomorphism to every support word.
  template <class F>
  GroupRingElement map_words(F f) const {
    GroupRingElement r;
    for (const auto& [w, c] : terms_) r.add(f(w), c);
    return r;
  }

  /// Ring map f_j -> t: each word goes to t^(exponent sum).
  LaurentPoly specialize() const {
    LaurentPoly p;
    for (const auto& [w, c] : terms_) p.add_term(w.exponent_sum(), c);
    return p;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [w, c] : terms_) {
      Integer mag = c < 0 ? Integer(-c) : c;
      s += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
      first = false;
      if (mag != 1) s += mag.str() + "*";
      s += w.is_identity() ? "1" : "(" + w.to_string() + ")";
    }
    return s;
  }

 private:
  Terms terms_;
};

}  // namespace burau
