// Acceptance gate: one PASS/FAIL line per criterion, with runtime budgets.
//
//   acceptance                   exit 0 iff every criterion passes
//   acceptance --expect-fail 8   exit 0 iff exactly the listed criteria fail

#include "burau/bimodule.hpp"
#include "burau/burau.hpp"
#include "burau/invariants.hpp"
#include "burau/knot_table.hpp"
#include "burau/oracles.hpp"
#include "burau/verify.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace burau;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double budget_s;  // 0: no runtime budget
  std::function<Outcome()> run;
};

std::mt19937 rng(0x5eed2024u);

int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

BraidWord random_braid(int n, int max_len) {
  std::vector<int> letters;
  if (n >= 2)
    for (int k = uniform(0, max_len); k > 0; --k) letters.push_back(uniform(1, n - 1) * (uniform(0, 1) ? 1 : -1));
  return BraidWord(n, letters);
}

BraidWord random_knot_braid(int n, int max_len) {
  for (;;) {
    BraidWord b = random_braid(n, max_len);
    if (closure_components(b) == 1) return b;
  }
}

Outcome criterion_artin() {
  int relations = 0;
  for (int n = 3; n <= 5; ++n)
    for (const auto& [l, r] : artin_relations(n)) {
      ++relations;
      if (!burau_equal(burau_of_word(l), burau_of_word(r)))
        return {false, l.to_string() + " vs " + r.to_string() + " in B_" + std::to_string(n)};
    }
  return {true, std::to_string(relations) + " relations"};
}

Outcome criterion_specialization() {
  int checked = 0;
  for (int n = 2; n <= 5; ++n)
    for (int i = 1; i < n; ++i) {
      const LaurentMatrix c = classical_generator(i, n);
      if (!(specialize(burau_braid_valued(i, n)) == c)) return {false, "τ_" + std::to_string(i)};
      if (!(specialize(burau_braid_valued(-i, n)) == inverse_over_laurent(c))) return {false, "τ_" + std::to_string(i) + "^-1"};
      checked += 2;
    }
  return {true, std::to_string(checked) + " generator matrices"};
}

Outcome criterion_upsilon() {
  const TensorOperator u = derive_upsilon();
  if (!(u == reference_upsilon())) return {false, "derived Υ differs"};
  if (!ybe_check(u)) return {false, "YBE fails"};
  return {true, "corner entry " + u.matrix()(3, 3).to_string()};
}

Outcome criterion_bimodule() {
  const auto eqs = reference_action_equations();
  int ok = 0;
  for (const auto& e : eqs) ok += right_action(e.lhs, e.generator) == e.rhs ? 1 : 0;
  if (ok != 16 || eqs.size() != 16) return {false, std::to_string(ok) + "/16 action equations"};
  const TensorOperator r = derive_R(Reduction::jones);
  if (!(r == reference_R())) return {false, "derived R differs"};
  if (!(derive_R(Reduction::grassman) == reference_upsilon())) return {false, "Grassman quotient differs from Υ"};
  if (!ybe_check(r)) return {false, "YBE fails for R"};
  return {true, "16/16 action equations, corner entry " + r.matrix()(3, 3).to_string()};
}

Outcome criterion_table() {
  const std::string path = std::string(BURAU_DATA_DIR) + "/knots.csv";
  std::ifstream in(path);
  if (!in) return {false, "cannot read " + path};
  int knots = 0, mismatches = 0, errors = 0;
  std::size_t max_crossings = 0;
  for (const TableRow& row : parse_knot_table(in)) {
    if (!row.entry) {
      ++errors;
      continue;
    }
    const KnotReport r = check_knot(*row.entry);
    if (r.components != 1) continue;
    ++knots;
    max_crossings = std::max(max_crossings, parse_braid(row.entry->word, row.entry->strands).length());
    mismatches += r.ok() ? 0 : 1;
  }
  std::ostringstream d;
  d << knots << " knots, max " << max_crossings << " crossings, " << mismatches << " mismatches, " << errors
    << " row errors";
  return {knots >= 12 && max_crossings <= 10 && mismatches == 0 && errors == 0, d.str()};
}

// Braids generated by the Markov battery; reused by the divisibility criterion.
std::vector<BraidWord> battery_knots;

Outcome criterion_markov() {
  int conj_fail = 0, stab_fail = 0;
  const int trials = 200;
  for (int k = 0; k < trials; ++k) {
    const int n = uniform(1, 4);
    const BraidWord b = random_knot_braid(n, 10);
    const BraidWord c = random_braid(n, 10);
    const BraidWord moved = c * b * c.inverse();
    battery_knots.push_back(b);
    battery_knots.push_back(moved);
    if (!(alexander(moved) == alexander(b)) || !(jones(moved) == jones(b))) ++conj_fail;
  }
  for (int k = 0; k < trials; ++k) {
    const int n = uniform(1, 3);
    const BraidWord b = random_knot_braid(n, 10);
    const BraidWord moved = b.embedded(n + 1) * BraidWord(n + 1, {(uniform(0, 1) ? 1 : -1) * n});
    battery_knots.push_back(b);
    battery_knots.push_back(moved);
    if (!(alexander(moved) == alexander(b)) || !(jones(moved) == jones(b))) ++stab_fail;
  }
  std::ostringstream d;
  d << trials << " conjugations (" << conj_fail << " changed), " << trials << " stabilizations (" << stab_fail
    << " changed)";
  return {conj_fail == 0 && stab_fail == 0, d.str()};
}

Outcome criterion_divisibility() {
  if (battery_knots.empty()) return {false, "Markov battery produced no braids"};
  int failures = 0;
  for (const BraidWord& b : battery_knots) {
    const BurauDivisibility d = burau_divisibility(b);
    if (!d.quotient || !(*d.quotient * strand_polynomial(b.strands()) == d.determinant)) ++failures;
  }
  return {failures == 0, std::to_string(battery_knots.size()) + " knot braids, " + std::to_string(failures) +
                             " with nonzero remainder"};
}

std::string describe(const EnhancedStructure& e) {
  const std::string var = e.root == 1 ? "t" : "s";
  std::string out = "mu = diag(1, " + e.mu(1, 1).to_string(var) + "), alpha = " + e.alpha.to_string(var) +
                    ", beta = " + e.beta.to_string(var);
  if (e.root != 1) out += " with s = t^(1/" + std::to_string(e.root) + ")";
  return out;
}

Outcome criterion_enhancement() {
  const EnhancementScan scan{4, 1};  // m, alpha, beta = ±t^k, k in [-4, 4]
  EnhancedStructure e;
  try {
    e = solve_enhancement(reference_R(), scan);
  } catch (const std::runtime_error& ex) {
    return {false, std::string(ex.what()) + "; every solution needs alpha^2 = t^-1"};
  }
  if (!enhancement_holds(e.r, e.mu, e.alpha, e.beta)) return {false, "partial-trace conditions fail"};
  return {true, describe(e)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::vector<int> expect_fail;
  app.add_option("--expect-fail", expect_fail, "Criteria known to fail; exit 0 iff exactly these fail");
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria{
      {1, "braid-valued Burau respects Artin relations, n = 3, 4, 5", 10, criterion_artin},
      {2, "specialization equals the classical Burau matrices, n <= 5", 0, criterion_specialization},
      {3, "derive_upsilon equals Υ and satisfies YBE", 1, criterion_upsilon},
      {4, "action equations, derive_R(jones) = R, derive_R(grassman) = Υ, YBE(R)", 5, criterion_bimodule},
      {5, "knot table: jones vs bracket, alexander vs fox", 60, criterion_table},
      {6, "Markov invariance battery", 120, criterion_markov},
      {7, "det(reduced Burau - I) divisible by 1 + t + ... + t^(n-1)", 0, criterion_divisibility},
      {8, "solve_enhancement(R) in the scan space m, alpha, beta = ±t^k, |k| <= 4", 0, criterion_enhancement},
  };

  std::set<int> failed;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& ex) {
      o = {false, std::string("exception: ") + ex.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = c.budget_s <= 0 || secs < c.budget_s;
    const bool pass = o.passed && in_budget;
    if (!pass) failed.insert(c.id);
    char timing[64];
    if (c.budget_s > 0)
      std::snprintf(timing, sizeof timing, "%.2f s of %.0f s", secs, c.budget_s);
    else
      std::snprintf(timing, sizeof timing, "%.2f s", secs);
    std::cout << "criterion " << c.id << ": " << (pass ? "PASS" : "FAIL") << "  " << c.title << "  [" << o.detail
              << "; " << timing << (in_budget ? "" : ", over budget") << "]\n";
  }

  // Not a criterion: the same search over half-integer exponents.
  if (const auto half = find_enhancement(reference_R(), kJonesScan))
    std::cout << "supplement: half-integer scan finds " << describe(*half) << "; conditions hold: "
              << (enhancement_holds(half->r, half->mu, half->alpha, half->beta) ? "yes" : "no") << '\n';
  else
    std::cout << "supplement: half-integer scan finds nothing\n";

  const std::set<int> expected(expect_fail.begin(), expect_fail.end());
  std::cout << failed.size() << " of " << criteria.size() << " criteria failed\n";
  if (failed == expected) return 0;
  if (!expected.empty()) std::cout << "failing set differs from --expect-fail\n";
  return 1;
}
