#include "burau/invariants.hpp"
#include "burau/knot_table.hpp"
#include "burau/oracles.hpp"

#include "test_support.hpp"

#include <catch_amalgamated.hpp>

using namespace burau;

namespace {
LaurentPoly mirror(const LaurentPoly& p) { return p.substitute_power(-1); }

BraidWord conjugate(const BraidWord& b, const BraidWord& c) { return c * b * c.inverse(); }

BraidWord stabilize(const BraidWord& b, int sign) {
  const int n = b.strands();
  return b.embedded(n + 1) * BraidWord(n + 1, {sign * n});
}
}  // namespace

TEST_CASE("ybe_check", "[invariants]") {
  CHECK(ybe_check(reference_upsilon()));
  CHECK(ybe_check(reference_R()));
  CHECK(ybe_check(TensorOperator::identity(2)));
  LaurentMatrix m = LaurentMatrix::identity(4);
  m(0, 1) = 1;
  CHECK_FALSE(ybe_check(TensorOperator(2, m)));
  CHECK_THROWS(ybe_check(TensorOperator::identity(3)));
}

TEST_CASE("braid_rep", "[invariants]") {
  const TensorOperator r = reference_R();
  CHECK(braid_rep(r, BraidWord::identity(3)) == TensorOperator::identity(3));
  CHECK(braid_rep(r, BraidWord(2, {1})) == r);
  CHECK(braid_rep(r, BraidWord(3, {1, 2, 1})) == braid_rep(r, BraidWord(3, {2, 1, 2})));
  CHECK(braid_rep(r, BraidWord(3, {1})) == place_on_factors(r, 1, 3));
  CHECK(braid_rep(r, BraidWord(2, {1, -1})) == TensorOperator::identity(2));
  for (int trial = 0; trial < 30; ++trial) {
    const int n = testing::uniform(2, 4);
    const BraidWord a = testing::random_braid(n, 4), b = testing::random_braid(n, 4);
    CHECK(braid_rep(r, a * b) == compose(braid_rep(r, a), braid_rep(r, b)));
  }
}

TEST_CASE("enhancement scan rejects the identity operator", "[invariants]") {
  CHECK_FALSE(find_enhancement(TensorOperator::identity(2)));
  CHECK_THROWS(solve_enhancement(TensorOperator::identity(2)));
}

TEST_CASE("every enhancement of R needs a square root of t", "[invariants]") {
  // Exhaust the half-integer space: every solution has alpha = ±t^{k/2} with k odd,
  // so the integer-exponent space holds none.
  const EnhancementScan scan = kJonesScan;
  const TensorOperator r(2, reference_R().matrix().map([](const LaurentPoly& p) { return p.substitute_power(2); }));
  const auto units = scan_units(scan);
  int solutions = 0;
  for (const LaurentPoly& m : units) {
    LaurentMatrix mu = LaurentMatrix::identity(2);
    mu(1, 1) = m;
    for (const LaurentPoly& alpha : units)
      for (const LaurentPoly& beta : units)
        if (enhancement_holds(r, mu, alpha, beta)) {
          ++solutions;
          CHECK(alpha.min_exp() % 2 != 0);
          CHECK(alpha * alpha == LaurentPoly::monomial(-2));
        }
  }
  CHECK(solutions > 0);
  CHECK_FALSE(find_enhancement(reference_R(), EnhancementScan{4, 1}));
}

TEST_CASE("half-integer enhancement of R", "[invariants]") {
  const EnhancedStructure& e = jones_enhancement();
  CHECK(e.root == 2);
  CHECK(e.mu(1, 1) == LaurentPoly::monomial(-2));  // t^-1
  CHECK(e.alpha == LaurentPoly::monomial(-1));
  CHECK(e.beta == LaurentPoly::monomial(-1));
  CHECK(enhancement_holds(e.r, e.mu, e.alpha, e.beta));
  const TensorOperator mu(1, e.mu);
  const LaurentPoly tr_mu = e.mu(0, 0) + e.mu(1, 1);
  CHECK(trace(compose(kronecker(mu, mu), e.r)) == e.alpha * e.beta * tr_mu);
}

TEST_CASE("jones examples", "[invariants]") {
  const LaurentPoly t = LaurentPoly::t();
  CHECK(jones(BraidWord::identity(1)).in_t() == LaurentPoly(1));
  const JonesPolynomial trefoil = jones(BraidWord(2, {1, 1, 1}));
  CHECK(trefoil.in_t() == LaurentPoly::from_terms({{1, 1}, {3, 1}, {4, -1}}));
  const JonesPolynomial fig8 = jones(BraidWord(3, {1, -2, 1, -2}));
  REQUIRE(fig8.in_t());
  CHECK(mirror(*fig8.in_t()) == *fig8.in_t());
  CHECK(*jones(BraidWord(2, {-1, -1, -1})).in_t() == mirror(*trefoil.in_t()));
  // Hopf link: odd powers of t^{1/2}
  CHECK_FALSE(jones(BraidWord(2, {1, 1})).in_t());
  // two-component unlink: s + s^-1 with s = t^{1/2}
  CHECK(jones(BraidWord::identity(2)).in_sqrt_t == LaurentPoly::monomial(-1) + LaurentPoly::monomial(1));
  CHECK(jones(BraidWord::identity(3)).in_t() == LaurentPoly::monomial(-1) + 2 + t);
}

TEST_CASE("jones variable identification is fixed by the trefoil", "[invariants][oracle]") {
  const auto id = match_jones_identification();
  REQUIRE(id);
  CHECK(id->exponent == -2);
  CHECK(id->component_sign == -1);
  for (auto [n, w] : std::vector<std::pair<int, std::vector<int>>>{
           {3, {1, -2, 1, -2}}, {2, {-1, -1, -1}}, {2, {1, 1, 1, 1, 1}}, {3, {1, 1, 1, 2, -1, 2}}, {2, {1, 1}}, {3, {1, 1, 2, 2}}, {3, {1, 2, 1, 2, 1, 2}}}) {
    const BraidWord b(n, w);
    CHECK(id->to_bracket(jones(b), closure_components(b)) == oracle::normalized_bracket(b));
  }
}

TEST_CASE("alexander examples", "[invariants]") {
  CHECK(alexander(BraidWord::identity(1)) == LaurentPoly(1));
  CHECK(alexander(BraidWord(2, {1})) == LaurentPoly(1));
  CHECK(alexander(BraidWord(2, {1, 1, 1})) == LaurentPoly::from_terms({{0, 1}, {1, -1}, {2, 1}}));
  CHECK(alexander(BraidWord(3, {1, -2, 1, -2})) == LaurentPoly::from_terms({{0, 1}, {1, -3}, {2, 1}}));
  CHECK_THROWS_AS(alexander(BraidWord(2, {1, 1})), std::invalid_argument);
}

TEST_CASE("reduced Burau and divisibility", "[invariants]") {
  CHECK(reduced_burau(BraidWord::identity(3)) == LaurentMatrix::identity(2));
  for (int trial = 0; trial < 100; ++trial) {
    const int n = testing::uniform(2, 4);
    const BraidWord a = testing::random_braid(n, 6), b = testing::random_braid(n, 6);
    CHECK(reduced_burau(a * b) == reduced_burau(a) * reduced_burau(b));
    const BraidWord k = testing::random_knot_braid(n, 8);
    const BurauDivisibility d = burau_divisibility(k);
    REQUIRE(d.quotient);
    CHECK(*d.quotient * strand_polynomial(n) == d.determinant);
  }
}

TEST_CASE("Markov moves leave both invariants unchanged", "[invariants][property]") {
  for (int trial = 0; trial < 40; ++trial) {
    const int n = testing::uniform(1, 3);
    const BraidWord b = testing::random_knot_braid(n, 6);
    const BraidWord c = testing::random_braid(n, 4);
    const LaurentPoly a0 = alexander(b);
    const JonesPolynomial j0 = jones(b);
    CHECK(alexander(conjugate(b, c)) == a0);
    CHECK(jones(conjugate(b, c)) == j0);
    const BraidWord s = stabilize(b, testing::uniform(0, 1) ? 1 : -1);
    CHECK(alexander(s) == a0);
    CHECK(jones(s) == j0);
  }
}
