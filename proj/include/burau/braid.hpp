#pragma once

// Braid words, Artin's action on free groups, and the iterated semidirect
// products B_n ⋉ F^(1) ⋉ ... ⋉ F^(j) with F^(j) = F_{n+j-1}.
//
// Automorphisms act from the right: for a braid word b = b_1 b_2 ... the
// word w is sent to (...((w)ψ(b_1))ψ(b_2)...). In the semidirect product this
// means f β = β ψ(β)(f).

#include "burau/free_word.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace burau {

class BraidWord {
 public:
  BraidWord() = default;
  explicit BraidWord(int strands, std::vector<int> letters = {}) : strands_(strands), letters_(std::move(letters)) {
    if (strands < 1) throw std::invalid_argument("BraidWord: strand count must be positive");
    for (int g : letters_) check_letter(g);
  }

  static BraidWord identity(int strands) { return BraidWord(strands); }

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  int exponent_sum() const {
    int w = 0;
    for (int g : letters_) w += g > 0 ? 1 : -1;
    return w;
  }

  BraidWord inverse() const {
    std::vector<int> r(letters_.rbegin(), letters_.rend());
    for (int& g : r) g = -g;
    return BraidWord(strands_, std::move(r));
  }

  /// Same letters on more strands (τ_i^(n) -> τ_i^(n')).
  BraidWord embedded(int strands) const {
    if (strands < strands_) throw std::invalid_argument("BraidWord: cannot embed into fewer strands");
    return BraidWord(strands, letters_);
  }

  friend BraidWord operator*(const BraidWord& a, const BraidWord& b) {
    if (a.strands_ != b.strands_) throw std::invalid_argument("BraidWord: strand mismatch");
    std::vector<int> r = a.letters_;
    r.insert(r.end(), b.letters_.begin(), b.letters_.end());
    return BraidWord(a.strands_, std::move(r));
  }

  /// Letter-sequence comparison only; group equality is braid_equal().
  bool same_letters(const BraidWord& o) const { return strands_ == o.strands_ && letters_ == o.letters_; }

  std::string to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < letters_.size(); ++i) os << (i ? " " : "") << letters_[i];
    return os.str();
  }

 private:
  void check_letter(int g) const {
    if (g == 0) throw std::invalid_argument("BraidWord: zero is not a generator");
    if (std::abs(g) > strands_ - 1) throw std::out_of_range("BraidWord: generator index out of range");
  }

  int strands_ = 1;
  std::vector<int> letters_;
};

/// Parses whitespace-separated nonzero integers, e.g. "1 -2 1 -2".
inline BraidWord parse_braid(const std::string& text, int strands) {
  std::istringstream is(text);
  std::vector<int> letters;
  std::string tok;
  while (is >> tok) {
    std::size_t used = 0;
    int g = 0;
    try {
      g = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("parse_braid: malformed token '" + tok + "'");
    }
    if (used != tok.size()) throw std::invalid_argument("parse_braid: malformed token '" + tok + "'");
    if (g == 0) throw std::invalid_argument("parse_braid: zero is not a generator");
    if (std::abs(g) >= strands)
      throw std::out_of_range("parse_braid: generator " + tok + " needs more than " + std::to_string(strands) +
                              " strands");
    letters.push_back(g);
  }
  return BraidWord(strands, std::move(letters));
}

inline std::string format_braid(const BraidWord& b) { return b.to_string(); }

// ---------------------------------------------------------------------------
// Artin action

/// Images of f_1..f_rank under ψ(τ_g), g signed, for rank ≥ |g|+1.
inline std::vector<FreeWord> artin_generator_images(int g, int rank) {
  const int i = std::abs(g);
  if (i < 1 || i + 1 > rank) throw std::out_of_range("artin action: generator index out of range");
  std::vector<FreeWord> im = identity_images(rank);
  const FreeWord fi = FreeWord::generator(rank, i);
  const FreeWord fj = FreeWord::generator(rank, i + 1);
  if (g > 0) {
    im[i - 1] = ad(fi, fj);  // f_i -> f_i f_{i+1} f_i^-1
    im[i] = fi;              // f_{i+1} -> f_i
  } else {
    im[i - 1] = fj;          // f_i -> f_{i+1}
    im[i] = ad(inverse(fj), fi);  // f_{i+1} -> f_{i+1}^-1 f_i f_{i+1}
  }
  return im;
}

/// ψ(b) applied to w, where w may live in any F_m with m ≥ b.strands()
/// (the generators of B_n act on F_m through B_n ⊂ B_m).
inline FreeWord artin_action_embedded(const BraidWord& b, FreeWord w) {
  if (w.rank() < b.strands()) throw std::invalid_argument("artin action: word rank below strand count");
  for (int g : b.letters()) w = apply_endomorphism(artin_generator_images(g, w.rank()), w);
  return w;
}

inline FreeWord artin_action(const BraidWord& b, const FreeWord& w) {
  if (w.rank() != b.strands()) throw std::invalid_argument("artin_action: rank mismatch");
  return artin_action_embedded(b, w);
}

/// (ψ(b)(f_1), ..., ψ(b)(f_n)): a complete invariant of b in B_n.
inline std::vector<FreeWord> action_signature(const BraidWord& b) {
  std::vector<FreeWord> sig = identity_images(b.strands());
  for (int g : b.letters()) {
    const auto im = artin_generator_images(g, b.strands());
    for (FreeWord& w : sig) w = apply_endomorphism(im, w);
  }
  return sig;
}

inline bool braid_equal(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) throw std::invalid_argument("braid_equal: strand mismatch");
  return action_signature(a) == action_signature(b);
}

/// τ_i ∈ B_n  ->  τ_i ∈ B_{n+1}.
inline BraidWord embed_generator(int i, int n) {
  if (i < 1 || i > n - 1) throw std::out_of_range("embed_generator: index out of range");
  return BraidWord(n + 1, {i});
}

/// Permutation of strand positions induced by b (position p at the bottom
/// ends at perm[p] at the top), 0-based.
inline std::vector<int> closure_permutation(const BraidWord& b) {
  std::vector<int> at(static_cast<std::size_t>(b.strands()));  // at[pos] = strand currently there
  std::iota(at.begin(), at.end(), 0);
  for (int g : b.letters()) {
    const auto i = static_cast<std::size_t>(std::abs(g) - 1);
    std::swap(at[i], at[i + 1]);
  }
  std::vector<int> perm(at.size());
  for (std::size_t pos = 0; pos < at.size(); ++pos) perm[static_cast<std::size_t>(at[pos])] = static_cast<int>(pos);
  return perm;
}

inline int closure_components(const BraidWord& b) {
  const auto perm = closure_permutation(b);
  std::vector<bool> seen(perm.size(), false);
  int cycles = 0;
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s]) continue;
    ++cycles;
    for (auto p = s; !seen[p]; p = static_cast<std::size_t>(perm[p])) seen[p] = true;
  }
  return cycles;
}

// ---------------------------------------------------------------------------
// Iterated semidirect products B_{n,j}

/// Free group F^(level) = F_{n+level-1}.
inline int level_rank(int n, int level) { return n + level - 1; }

/// Braid word of the generator f_i^(j) inside B_{n+j}: strand n+j encircles
/// strand i, τ_{m-1} ... τ_{i+1} τ_i^2 τ_{i+1}^-1 ... τ_{m-1}^-1 with m = n+j.
inline BraidWord pure_generator_braid(int n, int i, int j) {
  const int m = n + j;
  if (j < 1 || i < 1 || i > m - 1) throw std::out_of_range("pure_generator_braid: index out of range");
  std::vector<int> w;
  for (int k = m - 1; k > i; --k) w.push_back(k);
  w.push_back(i);
  w.push_back(i);
  for (int k = i + 1; k <= m - 1; ++k) w.push_back(-k);
  return BraidWord(m, std::move(w));
}

/// Image of f_k^(l) under the action of (f_i^(j))^eps, l > j, as a word in F^(l).
///
/// With c = n+j the encircling strand:
///   k < i or c < k : fixed
///   k ∈ {i, c}     : Ad((f_i f_c)^eps)(f_k)
///   i < k < c      : Ad([f_c^eps, f_i^eps]^-eps)(f_k)
inline FreeWord pure_braid_action(int n, int i, int j, int eps, int k, int l) {
  if (j < 1 || l <= j) throw std::out_of_range("pure_braid_action: need 1 <= j < l");
  if (eps != 1 && eps != -1) throw std::invalid_argument("pure_braid_action: eps must be +1 or -1");
  const int c = n + j;
  const int rank = level_rank(n, l);
  if (i < 1 || i >= c) throw std::out_of_range("pure_braid_action: generator index out of range");
  if (k < 1 || k > rank) throw std::out_of_range("pure_braid_action: target index out of range");
  const FreeWord fk = FreeWord::generator(rank, k);
  if (k < i || c < k) return fk;
  const FreeWord fi = FreeWord::generator(rank, i);
  const FreeWord fc = FreeWord::generator(rank, c);
  if (k == i || k == c) return ad(power(fi * fc, eps), fk);
  return ad(power(commutator(power(fc, eps), power(fi, eps)), -eps), fk);
}

/// Images of the generators of F^(l) under (f_i^(j))^eps.
inline std::vector<FreeWord> pure_braid_images(int n, int i, int j, int eps, int l) {
  std::vector<FreeWord> im;
  for (int k = 1; k <= level_rank(n, l); ++k) im.push_back(pure_braid_action(n, i, j, eps, k, l));
  return im;
}

/// Combed element β h_1 ... h_j of B_{n,j}, h_k ∈ F^(k).
struct SemidirectElement {
  BraidWord braid;
  std::vector<FreeWord> free_parts;

  static SemidirectElement identity(int n, int depth) {
    SemidirectElement e{BraidWord::identity(n), {}};
    for (int k = 1; k <= depth; ++k) e.free_parts.emplace_back(level_rank(n, k));
    return e;
  }

  int strands() const { return braid.strands(); }
  int depth() const { return static_cast<int>(free_parts.size()); }

  void validate() const {
    for (int k = 1; k <= depth(); ++k)
      if (free_parts[static_cast<std::size_t>(k - 1)].rank() != level_rank(strands(), k))
        throw std::invalid_argument("SemidirectElement: free part has wrong rank");
  }
};

inline bool semidirect_equal(const SemidirectElement& a, const SemidirectElement& b) {
  return a.depth() == b.depth() && braid_equal(a.braid, b.braid) && a.free_parts == b.free_parts;
}

/// Right action of the combed element (β, g_1, ..., g_{depth}) on a word of
/// F^(level), level > depth: β first, then g_1, ..., g_depth letter by letter.
inline FreeWord act_on_level(const BraidWord& braid, std::span<const FreeWord> lower, FreeWord w, int level) {
  const int n = braid.strands();
  w = artin_action_embedded(braid, w);
  for (std::size_t k = 0; k < lower.size(); ++k) {
    const int j = static_cast<int>(k) + 1;
    for (const Letter& l : lower[k].letters()) {
      const int eps = l.exp > 0 ? 1 : -1;
      const auto im = pure_braid_images(n, l.gen, j, eps, level);
      for (int r = 0; r < std::abs(l.exp); ++r) w = apply_endomorphism(im, w);
    }
  }
  return w;
}

/// (β, h)(γ, g) in combed form. Depth 1 is (βγ, ψ(γ)(h) g).
inline SemidirectElement semidirect_multiply(const SemidirectElement& x, const SemidirectElement& y) {
  if (x.strands() != y.strands() || x.depth() != y.depth())
    throw std::invalid_argument("semidirect_multiply: incompatible shapes");
  x.validate();
  y.validate();
  SemidirectElement r{x.braid * y.braid, {}};
  for (int level = 1; level <= x.depth(); ++level) {
    const auto idx = static_cast<std::size_t>(level - 1);
    std::span<const FreeWord> lower(y.free_parts.data(), idx);
    r.free_parts.push_back(act_on_level(y.braid, lower, x.free_parts[idx], level) * y.free_parts[idx]);
  }
  return r;
}

/// The combed element as a braid word in B_{n+depth}.
inline BraidWord embed_semidirect(const SemidirectElement& x) {
  const int n = x.strands();
  const int top = n + x.depth();
  BraidWord b = x.braid.embedded(top);
  for (int j = 1; j <= x.depth(); ++j) {
    for (const Letter& l : x.free_parts[static_cast<std::size_t>(j - 1)].letters()) {
      BraidWord g = pure_generator_braid(n, l.gen, j);
      if (l.exp < 0) g = g.inverse();
      g = g.embedded(top);
      for (int r = 0; r < std::abs(l.exp); ++r) b = b * g;
    }
  }
  return b;
}

}  // namespace burau
