#pragma once

// The self-verification suite behind `burau_cli verify`.

#include "burau/bimodule.hpp"
#include "burau/burau.hpp"
#include "burau/invariants.hpp"
#include "burau/json_io.hpp"

#include <functional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace burau {

/// Artin's defining relations of B_n, each as (lhs, rhs), plus τ_i τ_i^-1 = 1.
inline std::vector<std::pair<BraidWord, BraidWord>> artin_relations(int n) {
  std::vector<std::pair<BraidWord, BraidWord>> rel;
  for (int i = 1; i < n; ++i) {
    rel.emplace_back(BraidWord(n, {i, -i}), BraidWord::identity(n));
    rel.emplace_back(BraidWord(n, {-i, i}), BraidWord::identity(n));
    if (i + 1 < n) rel.emplace_back(BraidWord(n, {i, i + 1, i}), BraidWord(n, {i + 1, i, i + 1}));
    for (int j = i + 2; j < n; ++j) rel.emplace_back(BraidWord(n, {i, j}), BraidWord(n, {j, i}));
  }
  return rel;
}

/// n×n classical Burau matrix of τ_i: identity with the block [[1-t, t], [1, 0]] at (i, i+1).
inline LaurentMatrix classical_generator(int i, int n) {
  LaurentMatrix m = LaurentMatrix::identity(static_cast<std::size_t>(n));
  const LaurentMatrix b = burau_block();
  const auto a = static_cast<std::size_t>(i - 1);
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) m(a + r, a + c) = b(r, c);
  return m;
}

struct VerifyCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  bool inject_transposed_upsilon = false;  // negative control
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;

  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  int exit_code() const { return all_passed() ? 0 : 1; }
};

namespace detail {
inline VerifyCheck run_check(std::string name, const std::function<bool(std::string&)>& body) {
  VerifyCheck c{std::move(name), false, {}};
  try {
    c.passed = body(c.detail);
  } catch (const std::exception& ex) {
    c.detail = ex.what();
  }
  return c;
}
}  // namespace detail

inline VerifyReport run_verify(const VerifyOptions& opt = {}) {
  VerifyReport rep;
  auto add = [&](std::string name, const std::function<bool(std::string&)>& body) {
    rep.checks.push_back(detail::run_check(std::move(name), body));
  };

  for (int n = 3; n <= 5; ++n)
    add("braid-valued Burau respects Artin relations, n = " + std::to_string(n), [n](std::string& d) {
      for (const auto& [l, r] : artin_relations(n))
        if (!burau_equal(burau_of_word(l), burau_of_word(r))) {
          d = l.to_string() + " vs " + r.to_string();
          return false;
        }
      return true;
    });

  add("specialization yields the classical Burau matrices, n <= 5", [](std::string& d) {
    for (int n = 2; n <= 5; ++n)
      for (int i = 1; i < n; ++i)
        if (!(specialize(burau_braid_valued(i, n)) == classical_generator(i, n))) {
          d = "τ_" + std::to_string(i) + " in B_" + std::to_string(n);
          return false;
        }
    return true;
  });

  add("induced operators factor as 1⊗X, X⊗1", [&opt](std::string&) {
    const YangBaxterDerivation full = derive_upsilon_full();
    LaurentMatrix tau1 = full.sigma1.matrix();
    if (opt.inject_transposed_upsilon)
      tau1 = kronecker(TensorOperator::identity(1), TensorOperator(2, reference_upsilon().matrix().transposed())).matrix();
    return factor_through_two_factors(tau1, full.sigma2.matrix()).factor == reference_upsilon();
  });
  add("derived Υ equals reference Υ", [](std::string&) { return derive_upsilon() == reference_upsilon(); });
  add("Υ satisfies the Yang-Baxter equation", [](std::string&) { return ybe_check(reference_upsilon()); });

  const auto equations = reference_action_equations();
  for (std::size_t k = 0; k < equations.size(); ++k)
    add("action equation " + std::to_string(k + 1) + ": " + equations[k].text, [&equations, k](std::string& d) {
      const MElement got = right_action(equations[k].lhs, equations[k].generator);
      if (got == equations[k].rhs) return true;
      d = "got " + got.to_string();
      return false;
    });

  add("derived R equals reference R", [](std::string&) { return derive_R(Reduction::jones) == reference_R(); });
  add("Grassman quotient gives Υ", [](std::string&) { return derive_R(Reduction::grassman) == reference_upsilon(); });
  add("R satisfies the Yang-Baxter equation", [](std::string&) { return ybe_check(reference_R()); });
  return rep;
}

inline void print_report(const VerifyReport& rep, std::ostream& out) {
  for (const auto& c : rep.checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) out << "  (" << c.detail << ")";
    out << '\n';
  }
}

inline json to_json(const VerifyReport& rep) {
  json checks = json::array();
  for (const auto& c : rep.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"checks", checks}, {"all_passed", rep.all_passed()}};
}

}  // namespace burau
