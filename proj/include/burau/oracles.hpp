#pragma once

// Brute-force invariants of closed braid diagrams, kept independent of the
// Burau and Yang-Baxter code paths.

#include "burau/braid.hpp"
#include "burau/laurent.hpp"
#include "burau/matrix.hpp"

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace burau::oracle {

/// Closed braid diagram. Strands run upwards; crossing k joins positions
/// p, p+1 (0-based). Edge ids: 0..n-1 are the bottom edges, crossing k emits
/// edges n+2k (left) and n+2k+1 (right); top edge at position p is glued to p.
struct PlanarClosure {
  struct Crossing {
    int sign = 1;      // +1 for τ_i, -1 for τ_i^-1
    int position = 0;  // p = i - 1
    int in_left = 0, in_right = 0, out_left = 0, out_right = 0;
  };
  int strands = 1;
  std::vector<Crossing> crossings;
  std::vector<int> top_edges;  // edge leaving the top at each position

  int edge_count() const { return strands + 2 * static_cast<int>(crossings.size()); }
  int writhe() const {
    int w = 0;
    for (const auto& c : crossings) w += c.sign;
    return w;
  }
};

inline PlanarClosure planar_closure(const BraidWord& b) {
  PlanarClosure d;
  d.strands = b.strands();
  std::vector<int> cur(static_cast<std::size_t>(b.strands()));
  std::iota(cur.begin(), cur.end(), 0);
  int next = b.strands();
  for (int g : b.letters()) {
    const auto p = static_cast<std::size_t>(std::abs(g) - 1);
    PlanarClosure::Crossing c;
    c.sign = g > 0 ? 1 : -1;
    c.position = static_cast<int>(p);
    c.in_left = cur[p];
    c.in_right = cur[p + 1];
    c.out_left = next++;
    c.out_right = next++;
    cur[p] = c.out_left;
    cur[p + 1] = c.out_right;
    d.crossings.push_back(c);
  }
  d.top_edges = cur;
  return d;
}

namespace detail {
struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(a)] = b;
    return true;
  }
};
}  // namespace detail

inline constexpr std::size_t kMaxBracketCrossings = 20;

/// <D> = Σ_states A^{#A - #B} δ^{loops - 1}, δ = -A^2 - A^-2.
/// At a positive crossing the A-smoothing joins in_left-out_left and
/// in_right-out_right (the braid-like one); at a negative crossing that one is
/// the B-smoothing.
inline LaurentPoly kauffman_bracket(const PlanarClosure& d) {
  const std::size_t c = d.crossings.size();
  if (c > kMaxBracketCrossings) throw std::length_error("kauffman_bracket: crossing budget exceeded");
  const LaurentPoly delta = LaurentPoly::from_terms({{2, -1}, {-2, -1}});
  std::vector<LaurentPoly> delta_pow(static_cast<std::size_t>(d.edge_count()) + 1, LaurentPoly(1));
  for (std::size_t k = 1; k < delta_pow.size(); ++k) delta_pow[k] = delta_pow[k - 1] * delta;
  LaurentPoly sum;
  const std::uint64_t states = std::uint64_t{1} << c;
  for (std::uint64_t s = 0; s < states; ++s) {
    detail::DisjointSets ds(d.edge_count());
    for (int p = 0; p < d.strands; ++p) ds.unite(d.top_edges[static_cast<std::size_t>(p)], p);
    int a_count = 0;
    for (std::size_t k = 0; k < c; ++k) {
      const auto& x = d.crossings[k];
      const bool vertical = ((s >> k) & 1u) == 0;
      const bool is_a = vertical == (x.sign > 0);
      a_count += is_a ? 1 : 0;
      if (vertical) {
        ds.unite(x.in_left, x.out_left);
        ds.unite(x.in_right, x.out_right);
      } else {
        ds.unite(x.in_left, x.in_right);
        ds.unite(x.out_left, x.out_right);
      }
    }
    int components = 0;
    for (int e = 0; e < d.edge_count(); ++e) components += ds.find(e) == e ? 1 : 0;
    const int b_count = static_cast<int>(c) - a_count;
    sum += LaurentPoly::monomial(a_count - b_count) * delta_pow[static_cast<std::size_t>(components - 1)];
  }
  return sum;
}

/// (-A^3)^{-w} <D>: the writhe-normalized bracket, in A.
inline LaurentPoly normalized_bracket(const BraidWord& b) {
  const PlanarClosure d = planar_closure(b);
  const int w = d.writhe();
  LaurentPoly factor = LaurentPoly::monomial(-3 * w, (w % 2 == 0) ? 1 : -1);
  return factor * kauffman_bracket(d);
}

// ---------------------------------------------------------------------------
// Fox calculus

/// Wirtinger presentation of the closed braid: one generator per arc (arcs
/// break at under-crossings), one relator per crossing,
///     out_under^-1 · over^sign · in_under · over^-sign.
/// For τ_i the strand coming from position i passes over; for τ_i^-1 the
/// strand coming from position i+1 does.
struct WirtingerPresentation {
  int arcs = 0;
  std::vector<std::vector<std::pair<int, int>>> relators;  // (arc, ±1) letters
};

inline WirtingerPresentation wirtinger(const BraidWord& b) {
  const PlanarClosure d = planar_closure(b);
  // Provisional labels: every edge is a label; over-strand edges are merged
  // through their crossing, then the closure glues top to bottom.
  detail::DisjointSets ds(d.edge_count());
  for (const auto& x : d.crossings) {
    if (x.sign > 0)
      ds.unite(x.in_left, x.out_right);  // over strand continues the arc
    else
      ds.unite(x.in_right, x.out_left);
  }
  for (int p = 0; p < d.strands; ++p) ds.unite(d.top_edges[static_cast<std::size_t>(p)], p);
  // Number arcs left to right, bottom to top by first edge id.
  std::vector<int> arc_of(static_cast<std::size_t>(d.edge_count()), -1);
  std::vector<int> root_arc(static_cast<std::size_t>(d.edge_count()), -1);
  WirtingerPresentation w;
  for (int e = 0; e < d.edge_count(); ++e) {
    const int r = ds.find(e);
    if (root_arc[static_cast<std::size_t>(r)] < 0) root_arc[static_cast<std::size_t>(r)] = w.arcs++;
    arc_of[static_cast<std::size_t>(e)] = root_arc[static_cast<std::size_t>(r)];
  }
  for (const auto& x : d.crossings) {
    const auto arc = [&](int e) { return arc_of[static_cast<std::size_t>(e)]; };
    const int over = x.sign > 0 ? arc(x.in_left) : arc(x.in_right);
    const int in_under = x.sign > 0 ? arc(x.in_right) : arc(x.in_left);
    const int out_under = x.sign > 0 ? arc(x.out_left) : arc(x.out_right);
    w.relators.push_back({{out_under, -1}, {over, x.sign}, {in_under, 1}, {over, -x.sign}});
  }
  return w;
}

/// ∂r/∂x_arc with every generator sent to t.
inline LaurentPoly fox_derivative(const std::vector<std::pair<int, int>>& relator, int arc) {
  LaurentPoly d;
  int prefix = 0;
  for (const auto& [g, e] : relator) {
    if (e > 0) {
      if (g == arc) d.add_term(prefix, 1);
      prefix += 1;
    } else {
      prefix -= 1;
      if (g == arc) d.add_term(prefix, -1);
    }
  }
  return d;
}

inline LaurentMatrix alexander_matrix(const WirtingerPresentation& w) {
  LaurentMatrix m(w.relators.size(), static_cast<std::size_t>(w.arcs));
  for (std::size_t r = 0; r < w.relators.size(); ++r)
    for (int a = 0; a < w.arcs; ++a) m(r, static_cast<std::size_t>(a)) = fox_derivative(w.relators[r], a);
  return m;
}

/// Determinant of the Alexander matrix with the last relator and the given
/// arc column deleted (unnormalized).
inline LaurentPoly fox_minor(const BraidWord& b, int deleted_column) {
  if (closure_components(b) != 1) throw std::invalid_argument("fox_alexander: closure is not a knot");
  const WirtingerPresentation w = wirtinger(b);
  if (w.arcs <= 1) return 1;
  if (w.relators.size() != static_cast<std::size_t>(w.arcs))
    throw std::logic_error("fox_alexander: presentation is not balanced");
  const LaurentMatrix m = alexander_matrix(w);
  return determinant(minor_matrix(m, m.rows() - 1, static_cast<std::size_t>(deleted_column)));
}

inline int arc_count(const BraidWord& b) { return wirtinger(b).arcs; }

inline LaurentPoly fox_alexander(const BraidWord& b, int deleted_column = 0) {
  return normalize_up_to_units(fox_minor(b, deleted_column));
}

}  // namespace burau::oracle
