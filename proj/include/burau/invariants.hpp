#pragma once

// Yang-Baxter operators on V^{⊗n}, enhanced traces, and the Jones and
// Alexander invariants of braid closures.

#include "burau/bimodule.hpp"
#include "burau/braid.hpp"
#include "burau/burau.hpp"
#include "burau/laurent.hpp"
#include "burau/tensor.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace burau {

/// (X⊗1)(1⊗X)(X⊗1) == (1⊗X)(X⊗1)(1⊗X), exactly.
inline bool ybe_check(const TensorOperator& x) {
  if (x.arity() != 2) throw std::invalid_argument("ybe_check: need arity 2");
  const TensorOperator s1 = place_on_factors(x, 1, 3);
  const TensorOperator s2 = place_on_factors(x, 2, 3);
  return compose(compose(s1, s2), s1) == compose(compose(s2, s1), s2);
}

/// σ_{b_1} σ_{b_2} ... with σ_i = 1^{⊗(i-1)} ⊗ X ⊗ 1^{⊗(n-i-1)} and X^-1 for
/// negative letters.
inline TensorOperator braid_rep(const TensorOperator& x, const BraidWord& b) {
  if (x.arity() != 2) throw std::invalid_argument("braid_rep: need arity 2");
  const int n = b.strands();
  bool has_negative = false;
  for (int g : b.letters()) has_negative |= g < 0;
  const TensorOperator x_inv = has_negative ? inverse(x) : x;
  LaurentMatrix m = LaurentMatrix::identity(TensorOperator::dim_of(n));
  for (int g : b.letters()) m = right_apply_on_factors(m, g > 0 ? x : x_inv, std::abs(g), n);
  return {n, std::move(m)};
}

// ---------------------------------------------------------------------------
// Enhancement

/// Finite search space for solve_enhancement: units ±u^k with u = t^{1/root}
/// and k/root ∈ [-max_exponent, max_exponent]. root = 1 is the ring
/// Z[t, t^-1] itself.
struct EnhancementScan {
  int max_exponent = 4;
  int root = 1;
};

/// All polynomial fields are in the variable u = t^{1/root}.
struct EnhancedStructure {
  TensorOperator r;    // the operator, rewritten in u
  LaurentMatrix mu;    // diag(1, m)
  LaurentPoly alpha;
  LaurentPoly beta;
  int root = 1;
};

/// Conditions: R commutes with mu⊗mu, Tr_2(R(1⊗mu)) = αβ·1 and
/// Tr_2(R^-1(1⊗mu)) = α^-1 β·1.
inline bool enhancement_holds(const TensorOperator& r, const LaurentMatrix& mu, const LaurentPoly& alpha,
                              const LaurentPoly& beta) {
  const TensorOperator mu_op(1, mu);
  const TensorOperator mumu = kronecker(mu_op, mu_op);
  if (compose(r, mumu) != compose(mumu, r)) return false;
  const TensorOperator one_mu = kronecker(TensorOperator::identity(1), mu_op);
  const TensorOperator lhs = partial_trace_last(compose(r, one_mu));
  const TensorOperator lhs_inv = partial_trace_last(compose(inverse(r), one_mu));
  const LaurentMatrix id = LaurentMatrix::identity(2);
  const auto scaled = [&](const LaurentPoly& c) { return id.map([&](const LaurentPoly& e) { return e * c; }); };
  return lhs.matrix() == scaled(alpha * beta) && lhs_inv.matrix() == scaled(alpha.unit_inverse() * beta);
}

inline std::vector<LaurentPoly> scan_units(const EnhancementScan& scan) {
  std::vector<LaurentPoly> units;
  const int lim = scan.max_exponent * scan.root;
  for (int k = -lim; k <= lim; ++k) {
    units.push_back(LaurentPoly::monomial(k, 1));
    units.push_back(LaurentPoly::monomial(k, -1));
  }
  return units;
}

/// First (mu, alpha, beta) in the scan order (m, then alpha, then beta; each
/// by ascending exponent, + before -); nullopt if the space holds none.
inline std::optional<EnhancedStructure> find_enhancement(const TensorOperator& x, const EnhancementScan& scan = {}) {
  if (scan.root < 1) throw std::invalid_argument("EnhancementScan: root must be positive");
  const TensorOperator r(2, x.matrix().map([&](const LaurentPoly& p) { return p.substitute_power(scan.root); }));
  const auto units = scan_units(scan);
  for (const LaurentPoly& m : units) {
    LaurentMatrix mu = LaurentMatrix::identity(2);
    mu(1, 1) = m;
    for (const LaurentPoly& alpha : units)
      for (const LaurentPoly& beta : units)
        if (enhancement_holds(r, mu, alpha, beta)) return EnhancedStructure{r, mu, alpha, beta, scan.root};
  }
  return std::nullopt;
}

inline EnhancedStructure solve_enhancement(const TensorOperator& x, const EnhancementScan& scan = {}) {
  auto e = find_enhancement(x, scan);
  if (!e) throw std::runtime_error("solve_enhancement: no enhancement in the scan space");
  return *e;
}

/// Scan used by the Jones pipeline: half-integer powers of t.
inline constexpr EnhancementScan kJonesScan{4, 2};

/// α^{-w} β^{-n} Tr(mu^{⊗n} ρ(b)), in u = t^{1/root}.
inline LaurentPoly enhanced_trace(const EnhancedStructure& e, const BraidWord& b) {
  const int n = b.strands();
  const TensorOperator rho = braid_rep(e.r, b);
  LaurentPoly tr;
  for (std::size_t i = 0; i < rho.dim(); ++i) {
    if (rho(i, i).is_zero()) continue;
    LaurentPoly weight = 1;
    for (int p = 0; p < n; ++p) weight *= e.mu((i >> p) & 1u, (i >> p) & 1u);
    tr += weight * rho(i, i);
  }
  const int w = b.exponent_sum();
  const LaurentPoly a_inv = e.alpha.unit_inverse();
  const LaurentPoly b_inv = e.beta.unit_inverse();
  LaurentPoly scale = 1;
  for (int k = 0; k < (w < 0 ? -w : w); ++k) scale *= (w > 0 ? a_inv : e.alpha);
  for (int k = 0; k < n; ++k) scale *= b_inv;
  return scale * tr;
}

/// Jones polynomial as an exact Laurent polynomial in s = t^{1/2}.
struct JonesPolynomial {
  LaurentPoly in_sqrt_t;

  /// Integral form in t, available when all exponents of s are even (knots).
  std::optional<LaurentPoly> in_t() const { return in_sqrt_t.root_substitute(2); }
  friend bool operator==(const JonesPolynomial&, const JonesPolynomial&) = default;
};

inline const EnhancedStructure& jones_enhancement() {
  static const EnhancedStructure e = solve_enhancement(reference_R(), kJonesScan);
  return e;
}

/// Enhanced trace of R normalized so that the unknot gives 1.
inline JonesPolynomial jones(const BraidWord& b) {
  const EnhancedStructure& e = jones_enhancement();
  const LaurentPoly unknot = enhanced_trace(e, BraidWord::identity(1));
  auto q = exact_divide(enhanced_trace(e, b), unknot);
  if (!q) throw std::logic_error("jones: enhanced trace not divisible by the unknot value");
  return {*q};
}

// ---------------------------------------------------------------------------
// Alexander

/// Burau action on the span of d_k = v_k - v_{k+1}; coordinates of a
/// zero-sum row vector x in that basis are its partial sums.
inline LaurentMatrix reduced_burau(const BraidWord& b) {
  const LaurentMatrix rho = classical_burau(b);
  const std::size_t n = rho.rows();
  if (n < 2) return LaurentMatrix(0, 0);
  LaurentMatrix red(n - 1, n - 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    LaurentPoly partial;
    for (std::size_t m = 0; m + 1 < n; ++m) {
      partial += rho(k, m) - rho(k + 1, m);
      red(k, m) = partial;
    }
  }
  return red;
}

/// 1 + t + ... + t^{n-1}
inline LaurentPoly strand_polynomial(int n) {
  LaurentPoly p;
  for (int k = 0; k < n; ++k) p.add_term(k, 1);
  return p;
}

struct BurauDivisibility {
  LaurentPoly determinant;              // det(reduced(b) - I)
  std::optional<LaurentPoly> quotient;  // determinant / (1 + ... + t^{n-1})
};

inline BurauDivisibility burau_divisibility(const BraidWord& b) {
  LaurentMatrix m = reduced_burau(b);
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) -= 1;
  BurauDivisibility d{determinant(m), std::nullopt};
  d.quotient = exact_divide(d.determinant, strand_polynomial(b.strands()));
  return d;
}

/// Δ(t) of a knot closure, normalized up to units.
inline LaurentPoly alexander(const BraidWord& b) {
  if (closure_components(b) != 1) throw std::invalid_argument("alexander: closure is not a knot");
  if (b.strands() == 1) return 1;
  const BurauDivisibility d = burau_divisibility(b);
  if (!d.quotient) throw std::logic_error("alexander: Burau determinant not divisible by 1 + ... + t^(n-1)");
  return normalize_up_to_units(*d.quotient);
}

}  // namespace burau
