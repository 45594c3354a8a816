#pragma once

// Braid-valued Burau matrices over Z[B_n ⋉ F_n], their specialization to the
// classical Burau representation, and the exterior-algebra extension that
// yields the two-factor Yang-Baxter operator Υ.

#include "burau/braid.hpp"
#include "burau/group_ring.hpp"
#include "burau/matrix.hpp"
#include "burau/tensor.hpp"

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace burau {

using GroupRingMatrix = Matrix<GroupRingElement>;

/// α·S with α ∈ B_n and S an n×n matrix over Z[F_n]. Row j of S holds the
/// image of s_j = f_j - 1 after the prefix has been moved to the front:
/// s_j α = α Σ_k S_jk s_k.
struct FactoredBurauMatrix {
  BraidWord prefix;
  GroupRingMatrix body;

  int strands() const { return prefix.strands(); }

  static FactoredBurauMatrix identity(int n) {
    GroupRingMatrix body(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < body.rows(); ++i) body(i, i) = GroupRingElement::one(n);
    return {BraidWord::identity(n), std::move(body)};
  }
};

/// ψ(β) applied to every support word of every entry.
inline GroupRingMatrix act_entrywise(const BraidWord& beta, const GroupRingMatrix& s) {
  return s.map([&](const GroupRingElement& e) {
    return e.map_words([&](const FreeWord& w) { return artin_action(beta, w); });
  });
}

/// (α, S)(β, T) = (αβ, ψ(β)(S) T).
inline FactoredBurauMatrix operator*(const FactoredBurauMatrix& a, const FactoredBurauMatrix& b) {
  if (a.strands() != b.strands()) throw std::invalid_argument("FactoredBurauMatrix: strand mismatch");
  return {a.prefix * b.prefix, act_entrywise(b.prefix, a.body) * b.body};
}

/// Group equality: prefixes equal in B_n and bodies equal over Z[F_n].
inline bool burau_equal(const FactoredBurauMatrix& a, const FactoredBurauMatrix& b) {
  return a.strands() == b.strands() && braid_equal(a.prefix, b.prefix) && a.body == b.body;
}

/// Generator image. For τ_i the (i, i+1) block is
///   [ 1 - f_i f_{i+1} f_i^-1   f_i ]
///   [ 1                        0   ]
/// and for τ_i^-1 its inverse after the prefix:
///   [ 0            1                         ]
///   [ f_{i+1}^-1   f_{i+1}^-1 f_i - f_{i+1}^-1 ]
inline FactoredBurauMatrix burau_braid_valued(int g, int n) {
  const int i = std::abs(g);
  if (g == 0 || i > n - 1) throw std::out_of_range("burau_braid_valued: generator index out of range");
  FactoredBurauMatrix m = FactoredBurauMatrix::identity(n);
  m.prefix = BraidWord(n, {g});
  const auto a = static_cast<std::size_t>(i - 1);
  const auto b = a + 1;
  const FreeWord one(n);
  const FreeWord fi = FreeWord::generator(n, i);
  const FreeWord fj = FreeWord::generator(n, i + 1);
  if (g > 0) {
    m.body(a, a) = GroupRingElement(one) - GroupRingElement(ad(fi, fj));
    m.body(a, b) = GroupRingElement(fi);
    m.body(b, a) = GroupRingElement(one);
    m.body(b, b) = {};
  } else {
    const FreeWord fj_inv = inverse(fj);
    m.body(a, a) = {};
    m.body(a, b) = GroupRingElement(one);
    m.body(b, a) = GroupRingElement(fj_inv);
    m.body(b, b) = GroupRingElement(fj_inv * fi) - GroupRingElement(fj_inv);
  }
  return m;
}

inline FactoredBurauMatrix burau_of_word(const BraidWord& b) {
  FactoredBurauMatrix m = FactoredBurauMatrix::identity(b.strands());
  for (int g : b.letters()) m = m * burau_braid_valued(g, b.strands());
  return m;
}

/// τ_i -> 1, f_j -> t.
inline LaurentMatrix specialize(const FactoredBurauMatrix& m) {
  return m.body.map([](const GroupRingElement& e) { return e.specialize(); });
}

/// Classical (unreduced) Burau matrix of a braid word.
inline LaurentMatrix classical_burau(const BraidWord& b) {
  const auto n = static_cast<std::size_t>(b.strands());
  LaurentMatrix m = LaurentMatrix::identity(n);
  const LaurentPoly t = LaurentPoly::t();
  for (int g : b.letters()) {
    const auto i = static_cast<std::size_t>(std::abs(g) - 1);
    LaurentMatrix step = LaurentMatrix::identity(n);
    if (g > 0) {
      step(i, i) = 1 - t;
      step(i, i + 1) = t;
      step(i + 1, i) = 1;
      step(i + 1, i + 1) = 0;
    } else {
      const LaurentPoly ti = LaurentPoly::monomial(-1);
      step(i, i) = 0;
      step(i, i + 1) = 1;
      step(i + 1, i) = ti;
      step(i + 1, i + 1) = 1 - ti;
    }
    m = m * step;
  }
  return m;
}

// ---------------------------------------------------------------------------
// Exterior algebra Λ(R^3)

/// Ordered basis (1, v1, v2, v1∧v2, v3, v1∧v3, v2∧v3, v1∧v2∧v3): index r
/// contains v_k iff bit k-1 of r is set.
inline std::vector<int> wedge_indices(std::size_t r) {
  std::vector<int> idx;
  for (int k = 0; k < 3; ++k)
    if (r & (std::size_t{1} << k)) idx.push_back(k);
  return idx;
}

/// Algebra-homomorphism extension of a 3×3 row-action matrix to Λ(R^3):
/// v_{a1}∧...∧v_{ad} goes to the wedge of the image rows, i.e. the d×d minors.
inline LaurentMatrix exterior_extension(const LaurentMatrix& rho) {
  if (rho.rows() != 3 || rho.cols() != 3) throw std::invalid_argument("exterior_extension: need a 3x3 matrix");
  LaurentMatrix e(8, 8);
  for (std::size_t r = 0; r < 8; ++r) {
    const auto rows = wedge_indices(r);
    for (std::size_t c = 0; c < 8; ++c) {
      const auto cols = wedge_indices(c);
      if (rows.size() != cols.size()) continue;
      LaurentMatrix sub(rows.size(), rows.size());
      for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
          sub(i, j) = rho(static_cast<std::size_t>(rows[i]), static_cast<std::size_t>(cols[j]));
      e(r, c) = determinant(sub);
    }
  }
  return e;
}

/// [[1-t, t], [1, 0]]
inline LaurentMatrix burau_block() {
  const LaurentPoly t = LaurentPoly::t();
  return LaurentMatrix{{1 - t, t}, {1, 0}};
}

/// The Alexander-type Yang-Baxter operator with corner entry -t.
inline TensorOperator reference_upsilon() {
  const LaurentPoly t = LaurentPoly::t();
  return {2, LaurentMatrix{{1, 0, 0, 0}, {0, 1 - t, t, 0}, {0, 1, 0, 0}, {0, 0, 0, -t}}};
}

/// Induced operators of τ_1, τ_2 on a rank-8 module with the ordered basis
/// above, and the two-factor operator they factor through.
struct YangBaxterDerivation {
  TensorOperator sigma1;
  TensorOperator sigma2;
  TensorOperator factor;
};

/// Identifies the ordered rank-8 basis with V^{⊗3} in index order (the bit of
/// v_3 is the first tensor factor). Then τ_1 must act as 1 ⊗ X and τ_2 as
/// X ⊗ 1 for a single X; returns X or throws.
inline YangBaxterDerivation factor_through_two_factors(const LaurentMatrix& tau1, const LaurentMatrix& tau2) {
  YangBaxterDerivation d{TensorOperator(3, tau1), TensorOperator(3, tau2), TensorOperator::identity(2)};
  const auto x1 = factor_as_right(d.sigma1);
  const auto x2 = factor_as_left(d.sigma2);
  if (!x1 || !x2) throw std::runtime_error("factorization failed: induced operators are not of the form 1⊗X, X⊗1");
  if (*x1 != *x2) throw std::runtime_error("factorization failed: the two generators give different factors");
  d.factor = *x1;
  return d;
}

/// Υ from the exterior extension of ρ_1 = B ⊕ 1, ρ_2 = 1 ⊕ B.
inline YangBaxterDerivation derive_upsilon_full() {
  const LaurentMatrix b = burau_block();
  LaurentMatrix rho1 = LaurentMatrix::identity(3);
  LaurentMatrix rho2 = LaurentMatrix::identity(3);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      rho1(i, j) = b(i, j);
      rho2(i + 1, j + 1) = b(i, j);
    }
  return factor_through_two_factors(exterior_extension(rho1), exterior_extension(rho2));
}

inline TensorOperator derive_upsilon() { return derive_upsilon_full().factor; }

}  // namespace burau
