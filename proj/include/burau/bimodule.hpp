#pragma once

// The left B_{3,3}, right B_3 bimodule
//
//   M = Z[B_{3,3}] 1 ⊕ I(3) ⊕ I(3) ⊗ I(2) ⊕ I(3) ⊗ I(2) ⊗ I(1)
//
// built from the relative augmentation ideals I(j) = span{ s_i(j) = f_i(j) - 1 }
// of F(j) = F_{j+2}, its specialization f -> t, τ -> 1, and the two rank-8
// quotients giving the Jones matrix R and the Alexander matrix Υ.
//
// Terms are kept in combed normal form
//     β · (w_3 s_a(3)) ⊗ (w_2 s_b(2)) ⊗ (w_1 s_c(1)),
// β ∈ B_3 and each w_l a word in its home slot F(l). A braid generator entering
// from the right crosses the slots from level 1 upwards: in slot l it maps
// w s_b to τ τ(w)(τ(f_b) - 1), and τ(f_b) - 1 is expanded over the s_k.

#include "burau/braid.hpp"
#include "burau/burau.hpp"
#include "burau/group_ring.hpp"
#include "burau/laurent.hpp"
#include "burau/tensor.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace burau {

inline constexpr int kBimoduleStrands = 3;
inline constexpr int kBimoduleDepth = 3;

/// Rank of F(level) for the three-strand tower.
inline int slot_rank(int level) { return level_rank(kBimoduleStrands, level); }

/// w s_index at one tensor level.
struct Slot {
  FreeWord coef;
  int index = 1;
  friend bool operator==(const Slot&, const Slot&) = default;
  friend auto operator<=>(const Slot&, const Slot&) = default;
};

/// Term key: B_3 prefix (by its action signature) and the occupied slots,
/// ordered from level 3 downwards. Degree = number of slots.
struct MKey {
  std::vector<FreeWord> prefix_signature;
  std::vector<Slot> slots;
  friend bool operator==(const MKey&, const MKey&) = default;
  friend auto operator<=>(const MKey&, const MKey&) = default;
};

class MElement {
 public:
  struct Value {
    BraidWord prefix;  // representative word of the prefix
    Integer coef;
  };
  using Terms = std::map<MKey, Value>;

  MElement() = default;

  /// Single term coef · prefix · slots.
  static MElement term(const BraidWord& prefix, std::vector<Slot> slots, const Integer& coef = 1) {
    MElement m;
    m.add(prefix, std::move(slots), coef);
    return m;
  }

  /// Basis element s_{i1}(3) s_{i2}(2) ... with trivial coefficients.
  static MElement basis(std::vector<int> indices) {
    std::vector<Slot> slots;
    for (std::size_t p = 0; p < indices.size(); ++p)
      slots.push_back({FreeWord(slot_rank(kBimoduleDepth - static_cast<int>(p))), indices[p]});
    return term(BraidWord::identity(kBimoduleStrands), std::move(slots));
  }

  /// prefix · Π_p (Σ coef · s_index) at levels 3, 2, ... expanded by distributivity.
  /// Each factor is a list of (group-ring coefficient, index) summands.
  static MElement product(const BraidWord& prefix,
                          const std::vector<std::vector<std::pair<GroupRingElement, int>>>& factors) {
    std::vector<std::pair<std::vector<Slot>, Integer>> partial = {{{}, 1}};
    for (const auto& factor : factors) {
      std::vector<std::pair<std::vector<Slot>, Integer>> next;
      for (const auto& [slots, c] : partial)
        for (const auto& [ring, idx] : factor)
          for (const auto& [w, cw] : ring.terms()) {
            auto s = slots;
            s.push_back({w, idx});
            next.emplace_back(std::move(s), c * cw);
          }
      partial = std::move(next);
    }
    MElement m;
    for (auto& [slots, c] : partial) m.add(prefix, std::move(slots), c);
    return m;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const BraidWord& prefix, std::vector<Slot> slots, const Integer& coef) {
    if (coef == 0) return;
    if (prefix.strands() != kBimoduleStrands) throw std::invalid_argument("MElement: prefix must lie in B_3");
    if (slots.size() > static_cast<std::size_t>(kBimoduleDepth)) throw std::invalid_argument("MElement: degree > 3");
    for (std::size_t p = 0; p < slots.size(); ++p) {
      const int level = kBimoduleDepth - static_cast<int>(p);
      if (slots[p].coef.rank() != slot_rank(level)) throw std::invalid_argument("MElement: slot coefficient rank");
      if (slots[p].index < 1 || slots[p].index > slot_rank(level))
        throw std::out_of_range("MElement: slot basis index out of range");
    }
    MKey key{action_signature(prefix), std::move(slots)};
    auto [it, inserted] = terms_.try_emplace(std::move(key), Value{prefix, coef});
    if (!inserted) {
      it->second.coef += coef;
      if (it->second.coef == 0) terms_.erase(it);
    }
  }

  MElement& operator+=(const MElement& o) {
    for (const auto& [k, v] : o.terms_) add(v.prefix, k.slots, v.coef);
    return *this;
  }
  friend MElement operator+(MElement a, const MElement& b) { return a += b; }
  friend bool operator==(const MElement& a, const MElement& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (auto ia = a.terms_.begin(), ib = b.terms_.begin(); ia != a.terms_.end(); ++ia, ++ib)
      if (ia->first != ib->first || ia->second.coef != ib->second.coef) return false;
    return true;
  }

  std::string to_string() const;

 private:
  Terms terms_;
};

/// u - 1 = Σ c_k (f_k - 1): returns (c_k as a single word, k, sign) summands.
inline std::vector<std::tuple<FreeWord, int, int>> augmentation_expansion(const FreeWord& u) {
  std::vector<std::tuple<FreeWord, int, int>> out;
  FreeWord prefix(u.rank());
  for (const Letter& l : u.letters()) {
    const int step = l.exp > 0 ? 1 : -1;
    for (int r = 0; r < std::abs(l.exp); ++r) {
      const FreeWord f = FreeWord::generator(u.rank(), l.gen, step);
      if (step > 0) {
        out.emplace_back(prefix, l.gen, 1);
        prefix = prefix * f;
      } else {
        prefix = prefix * f;  // f^-1 - 1 = -f^-1 (f - 1)
        out.emplace_back(prefix, l.gen, -1);
      }
    }
  }
  return out;
}

/// m · τ_g for g ∈ {±1, ±2}.
inline MElement right_action(const MElement& m, int g) {
  if (g == 0 || std::abs(g) > kBimoduleStrands - 1) throw std::out_of_range("right_action: generator not in B_3");
  const BraidWord tau(kBimoduleStrands, {g});
  MElement out;
  for (const auto& [key, val] : m.terms()) {
    const std::size_t d = key.slots.size();
    // Build the transformed slots right to left.
    std::vector<std::pair<std::vector<Slot>, Integer>> states = {{std::vector<Slot>(d), val.coef}};
    for (std::size_t p = d; p-- > 0;) {
      const Slot& s = key.slots[p];
      const int rank = s.coef.rank();
      const FreeWord moved_coef = artin_action_embedded(tau, s.coef);
      const FreeWord moved_gen = artin_action_embedded(tau, FreeWord::generator(rank, s.index));
      const auto expansion = augmentation_expansion(moved_gen);
      std::vector<std::pair<std::vector<Slot>, Integer>> next;
      next.reserve(states.size() * expansion.size());
      for (const auto& [slots, c] : states)
        for (const auto& [cw, k, sign] : expansion) {
          auto ns = slots;
          ns[p] = Slot{moved_coef * cw, k};
          next.emplace_back(std::move(ns), c * sign);
        }
      states = std::move(next);
    }
    const BraidWord prefix = val.prefix * tau;
    for (auto& [slots, c] : states) out.add(prefix, std::move(slots), c);
  }
  return out;
}

/// m · b for a braid word b ∈ B_3.
inline MElement right_action(const MElement& m, const BraidWord& b) {
  MElement r = m;
  for (int g : b.letters()) r = right_action(r, g);
  return r;
}

/// Combination of index monomials (levels 3, 2, 1 left to right) over Z[t, t^-1].
using PreQuotient = std::map<std::vector<int>, LaurentPoly>;

/// τ -> 1, f(j)_k -> t.
inline PreQuotient specialize_scalars(const MElement& m) {
  PreQuotient q;
  for (const auto& [key, val] : m.terms()) {
    int e = 0;
    std::vector<int> idx;
    for (const Slot& s : key.slots) {
      e += s.coef.exponent_sum();
      idx.push_back(s.index);
    }
    auto& slot = q[idx];
    slot += LaurentPoly::monomial(e, val.coef);
    if (slot.is_zero()) q.erase(idx);
  }
  return q;
}

/// Element of the rank-8 quotient: coefficient of the basis monomial whose
/// index set is given by the bits of the position (1, s1, s2, s1s2, s3, ...).
using QElement = std::array<LaurentPoly, 8>;

enum class Reduction { jones, grassman };

inline LaurentPoly swap_factor(Reduction r) {
  return r == Reduction::jones ? LaurentPoly::monomial(-1) : LaurentPoly(-1);
}

/// Which adjacent descent to rewrite first.
enum class RewriteOrder { leftmost, random };

/// Rewrites to strictly increasing index monomials: a repeated index kills the
/// monomial, and swapping an adjacent descent multiplies by t^-1 (jones) or
/// -1 (grassman).
inline QElement reduce(const PreQuotient& x, Reduction rule, RewriteOrder order = RewriteOrder::leftmost,
                       unsigned seed = 0) {
  const LaurentPoly factor = swap_factor(rule);
  std::mt19937 rng(seed);
  QElement q{};
  for (const auto& [idx0, c0] : x) {
    std::vector<int> idx = idx0;
    LaurentPoly c = c0;
    std::vector<int> sorted = idx;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
    for (;;) {
      std::vector<std::size_t> descents;
      for (std::size_t p = 0; p + 1 < idx.size(); ++p)
        if (idx[p] > idx[p + 1]) descents.push_back(p);
      if (descents.empty()) break;
      std::size_t p = descents.front();
      if (order == RewriteOrder::random) p = descents[std::uniform_int_distribution<std::size_t>(0, descents.size() - 1)(rng)];
      std::swap(idx[p], idx[p + 1]);
      c *= factor;
    }
    std::size_t mask = 0;
    for (int i : idx) {
      if (i < 1 || i > 3) throw std::out_of_range("reduce: index outside the rank-8 quotient");
      mask |= std::size_t{1} << (i - 1);
    }
    q[mask] += c;
  }
  return q;
}

inline QElement reduce_jones(const PreQuotient& x) { return reduce(x, Reduction::jones); }
inline QElement reduce_grassman(const PreQuotient& x) { return reduce(x, Reduction::grassman); }

/// Sorted index list of the quotient basis element at position r.
inline std::vector<int> quotient_basis_indices(std::size_t r) {
  std::vector<int> idx;
  for (int k = 1; k <= 3; ++k)
    if (r & (std::size_t{1} << (k - 1))) idx.push_back(k);
  return idx;
}

inline MElement quotient_basis_lift(std::size_t r) { return MElement::basis(quotient_basis_indices(r)); }

/// 8×8 matrix of τ_g (g = ±1, ±2) on the quotient, rows = images of the basis.
/// Inverse generators are the matrix inverse of the induced action.
inline LaurentMatrix induced_matrix(int g, Reduction rule) {
  if (g < 0) return inverse_over_laurent(induced_matrix(-g, rule));
  LaurentMatrix m(8, 8);
  for (std::size_t r = 0; r < 8; ++r) {
    const QElement row = reduce(specialize_scalars(right_action(quotient_basis_lift(r), g)), rule);
    for (std::size_t c = 0; c < 8; ++c) m(r, c) = row[c];
  }
  return m;
}

inline YangBaxterDerivation derive_R_full(Reduction rule) {
  return factor_through_two_factors(induced_matrix(1, rule), induced_matrix(2, rule));
}

inline TensorOperator derive_R(Reduction rule) { return derive_R_full(rule).factor; }

/// The Jones-type Yang-Baxter operator with corner entry 1.
inline TensorOperator reference_R() {
  const LaurentPoly t = LaurentPoly::t();
  return {2, LaurentMatrix{{1, 0, 0, 0}, {0, 1 - t, t, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}}};
}

// ---------------------------------------------------------------------------
// Reference action table

/// a_i(j) = 1 - f_i f_{i+1} f_i^-1 in F(j).
inline GroupRingElement a_coefficient(int i, int level) {
  const int rank = slot_rank(level);
  const FreeWord fi = FreeWord::generator(rank, i);
  const FreeWord fj = FreeWord::generator(rank, i + 1);
  return GroupRingElement::one(rank) - GroupRingElement(ad(fi, fj));
}
inline GroupRingElement f_coefficient(int i, int level) {
  return GroupRingElement(FreeWord::generator(slot_rank(level), i));
}
inline GroupRingElement one_coefficient(int level) { return GroupRingElement::one(slot_rank(level)); }

struct ActionEquation {
  std::string text;
  int generator;
  MElement lhs;
  MElement rhs;
};

/// The sixteen reference equations for the right action of τ_1 and τ_2 on the
/// basis elements 1, s1, s2, s3, s1s2, s1s3, s2s3, s1s2s3 of M.
inline std::vector<ActionEquation> reference_action_equations() {
  using F = std::vector<std::pair<GroupRingElement, int>>;
  const auto one = [](int level, int idx) { return F{{one_coefficient(level), idx}}; };
  // a_i(l) s_i(l) + f_i(l) s_{i+1}(l)
  const auto mix = [](int i, int level) { return F{{a_coefficient(i, level), i}, {f_coefficient(i, level), i + 1}}; };
  const BraidWord t1(3, {1});
  const BraidWord t2(3, {2});
  const auto b = [](std::vector<int> v) { return MElement::basis(std::move(v)); };
  std::vector<ActionEquation> eq;
  eq.push_back({"1 t1 = t1 1", 1, b({}), MElement::product(t1, {})});
  eq.push_back({"s1(3) t1 = t1 (a1(3) s1(3) + f1(3) s2(3))", 1, b({1}), MElement::product(t1, {mix(1, 3)})});
  eq.push_back({"s2(3) t1 = t1 s1(3)", 1, b({2}), MElement::product(t1, {one(3, 1)})});
  eq.push_back({"s3(3) t1 = t1 s3(3)", 1, b({3}), MElement::product(t1, {one(3, 3)})});
  eq.push_back({"s1(3) s2(2) t1 = t1 (a1(3) s1(3) + f1(3) s2(3)) s1(2)", 1, b({1, 2}),
                MElement::product(t1, {mix(1, 3), one(2, 1)})});
  eq.push_back({"s1(3) s3(2) t1 = t1 (a1(3) s1(3) + f1(3) s2(3)) s3(2)", 1, b({1, 3}),
                MElement::product(t1, {mix(1, 3), one(2, 3)})});
  eq.push_back({"s2(3) s3(2) t1 = t1 s1(3) s3(2)", 1, b({2, 3}), MElement::product(t1, {one(3, 1), one(2, 3)})});
  eq.push_back({"s1(3) s2(2) s3(1) t1 = t1 (a1(3) s1(3) + f1(3) s2(3)) s1(2) s3(1)", 1, b({1, 2, 3}),
                MElement::product(t1, {mix(1, 3), one(2, 1), one(1, 3)})});

  eq.push_back({"1 t2 = t2 1", 2, b({}), MElement::product(t2, {})});
  eq.push_back({"s1(3) t2 = t2 s1(3)", 2, b({1}), MElement::product(t2, {one(3, 1)})});
  eq.push_back({"s2(3) t2 = t2 (a2(3) s2(3) + f2(3) s3(3))", 2, b({2}), MElement::product(t2, {mix(2, 3)})});
  eq.push_back({"s3(3) t2 = t2 s2(3)", 2, b({3}), MElement::product(t2, {one(3, 2)})});
  eq.push_back({"s1(3) s2(2) t2 = t2 (a2(2) s1(3) s2(2) + f2(2) s1(3) s3(2))", 2, b({1, 2}),
                MElement::product(t2, {one(3, 1), {{a_coefficient(2, 2), 2}}}) +
                    MElement::product(t2, {one(3, 1), {{f_coefficient(2, 2), 3}}})});
  eq.push_back({"s1(3) s3(2) t2 = t2 s1(3) s2(2)", 2, b({1, 3}), MElement::product(t2, {one(3, 1), one(2, 2)})});
  eq.push_back({"s2(3) s3(2) t2 = t2 (a2(3) s2(3) + f2(3) s3(3)) s2(2)", 2, b({2, 3}),
                MElement::product(t2, {mix(2, 3), one(2, 2)})});
  eq.push_back({"s1(3) s2(2) s3(1) t2 = t2 (a2(2) s1(3) s2(2) s2(1) + f2(2) s1(3) s3(2) s2(1))", 2, b({1, 2, 3}),
                MElement::product(t2, {one(3, 1), {{a_coefficient(2, 2), 2}}, one(1, 2)}) +
                    MElement::product(t2, {one(3, 1), {{f_coefficient(2, 2), 3}}, one(1, 2)})});
  return eq;
}

inline std::string MElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, val] : terms_) {
    out += first ? (val.coef < 0 ? "-" : "") : (val.coef < 0 ? " - " : " + ");
    first = false;
    const Integer mag = val.coef < 0 ? Integer(-val.coef) : val.coef;
    if (mag != 1) out += mag.str() + "*";
    out += "[" + (val.prefix.empty() ? std::string("e") : val.prefix.to_string()) + "]";
    for (std::size_t p = 0; p < key.slots.size(); ++p) {
      const int level = kBimoduleDepth - static_cast<int>(p);
      out += " ";
      if (!key.slots[p].coef.is_identity()) out += "(" + key.slots[p].coef.to_string() + ")";
      out += "s" + std::to_string(key.slots[p].index) + "(" + std::to_string(level) + ")";
    }
  }
  return out;
}

}  // namespace burau
