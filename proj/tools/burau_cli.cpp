// burau_cli: braid-valued Burau matrices, Yang-Baxter operators and the
// Jones / Alexander invariants of braid closures.

#include "burau/invariants.hpp"
#include "burau/json_io.hpp"
#include "burau/knot_table.hpp"
#include "burau/oracles.hpp"
#include "burau/verify.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <string>
#include <vector>

using namespace burau;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct WordArgs {
  std::vector<std::string> tokens;
  int strands = 0;

  BraidWord braid() const {
    std::string text;
    for (const auto& t : tokens) text += t + " ";
    int n = strands;
    if (n <= 0) {
      const BraidWord wide = parse_braid(text, 1 << 20);
      n = 1;
      for (int g : wide.letters()) n = std::max(n, std::abs(g) + 1);
    }
    return parse_braid(text, n);
  }
};

void add_word(CLI::App* cmd, WordArgs& w) {
  cmd->add_option("word", w.tokens, "Braid word: signed generator indices, e.g. \"1 -2 1 -2\"");
  cmd->add_option("-n,--strands", w.strands, "Number of strands (default: largest index + 1)");
}

void print_poly(const LaurentPoly& p, const std::string& var, bool as_json) {
  if (as_json)
    std::cout << to_json(p, var).dump() << '\n';
  else
    std::cout << p.to_string(var) << '\n';
}

void print_matrix(const TensorOperator& x, bool as_json) {
  if (as_json)
    std::cout << to_json(x).dump() << '\n';
  else
    std::cout << matrix_to_text(x.matrix());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Braid-valued Burau matrices, Yang-Baxter operators and knot invariants"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Emit JSON");
  app.fallthrough();

  auto* verify_cmd = app.add_subcommand("verify", "Run the self-verification suite");
  bool inject = false;
  verify_cmd->add_flag("--inject-transposed-upsilon", inject, "Negative control: corrupt the factorization input");

  WordArgs burau_args;
  auto* burau_cmd = app.add_subcommand("burau", "Burau matrix of a braid word");
  add_word(burau_cmd, burau_args);
  bool braid_valued = false;
  burau_cmd->add_flag("--braid-valued", braid_valued, "Keep entries in the group ring of the free group");

  std::string rmatrix_kind;
  auto* rmatrix_cmd = app.add_subcommand("rmatrix", "Derived Yang-Baxter operator");
  rmatrix_cmd->add_option("kind", rmatrix_kind, "jones | alexander | grassman")
      ->required()
      ->check(CLI::IsMember({"jones", "alexander", "grassman"}));

  WordArgs alexander_args;
  auto* alexander_cmd = app.add_subcommand("alexander", "Alexander polynomial of a knot closure");
  add_word(alexander_cmd, alexander_args);

  WordArgs jones_args;
  auto* jones_cmd = app.add_subcommand("jones", "Jones polynomial of a braid closure");
  add_word(jones_cmd, jones_args);

  WordArgs oracle_args;
  std::string oracle_kind;
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force oracle invariants");
  oracle_cmd->add_option("kind", oracle_kind, "bracket | fox")->required()->check(CLI::IsMember({"bracket", "fox"}));
  add_word(oracle_cmd, oracle_args);

  std::string table_path;
  auto* table_cmd = app.add_subcommand("table", "Check a knot table against both oracles");
  table_cmd->add_option("path", table_path, "CSV file with rows name,strands,word")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*verify_cmd) {
      const VerifyReport rep = run_verify({inject});
      if (as_json)
        std::cout << to_json(rep).dump(2) << '\n';
      else
        print_report(rep, std::cout);
      return rep.exit_code();
    }
    if (*rmatrix_cmd) {
      if (rmatrix_kind == "jones") print_matrix(derive_R(Reduction::jones), as_json);
      if (rmatrix_kind == "grassman") print_matrix(derive_R(Reduction::grassman), as_json);
      if (rmatrix_kind == "alexander") print_matrix(derive_upsilon(), as_json);
      return kExitOk;
    }
    if (*table_cmd) {
      const TableSummary s = run_table(table_path, std::cout, as_json);
      if (!as_json)
        std::cout << s.rows << " rows, " << s.mismatches << " mismatches, " << s.row_errors << " row errors\n";
      return s.exit_code();
    }

    const auto braid_of = [](const WordArgs& w) {
      try {
        return w.braid();
      } catch (const std::exception& e) {
        throw CLI::ValidationError("word", e.what());
      }
    };
    if (*burau_cmd) {
      const BraidWord b = braid_of(burau_args);
      if (braid_valued) {
        const FactoredBurauMatrix m = burau_of_word(b);
        if (as_json) {
          std::cout << to_json(m).dump() << '\n';
        } else {
          std::cout << "prefix: " << (m.prefix.letters().empty() ? "(identity)" : m.prefix.to_string()) << '\n';
          for (std::size_t i = 0; i < m.body.rows(); ++i) {
            std::cout << "[ ";
            for (std::size_t j = 0; j < m.body.cols(); ++j) std::cout << (j ? ", " : "") << m.body(i, j).to_string();
            std::cout << " ]\n";
          }
        }
      } else if (as_json) {
        std::cout << to_json(classical_burau(b)).dump() << '\n';
      } else {
        std::cout << matrix_to_text(classical_burau(b));
      }
      return kExitOk;
    }
    if (*alexander_cmd) {
      print_poly(alexander(braid_of(alexander_args)), "t", as_json);
      return kExitOk;
    }
    if (*jones_cmd) {
      const JonesPolynomial v = jones(braid_of(jones_args));
      if (auto in_t = v.in_t())
        print_poly(*in_t, "t", as_json);
      else
        print_poly(v.in_sqrt_t, "t^(1/2)", as_json);
      return kExitOk;
    }
    if (*oracle_cmd) {
      const BraidWord b = braid_of(oracle_args);
      if (oracle_kind == "bracket")
        print_poly(oracle::normalized_bracket(b), "A", as_json);
      else
        print_poly(oracle::fox_alexander(b), "t", as_json);
      return kExitOk;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
