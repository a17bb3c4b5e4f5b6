// Command line front end: validate, derive, decompose, enumerate and
// round-trip bunches of layer groups and the chains they describe.
//
// Exit codes: 0 all checks passed, 1 violations or unmet preconditions,
// 2 usage or parse errors.

#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "flec/bunch.hpp"
#include "flec/chain.hpp"
#include "flec/convert.hpp"
#include "flec/dsl.hpp"
#include "flec/laws.hpp"
#include "flec/oracle.hpp"
#include "flec/report.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitViolations = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

flec::BunchOfLayerGroups load_bunch(const std::string& path) {
  return flec::parse_bunch(read_file(path));
}

int report_exit(const flec::Report& r) {
  std::cout << r.to_string();
  return r.passed() ? kExitPass : kExitViolations;
}

int run_check(const std::string& path, const flec::CheckConfig& cfg) {
  const flec::BunchOfLayerGroups b = load_bunch(path);
  flec::Report groups = flec::validate_bunch(b, cfg);
  std::cout << groups.to_string();
  if (!groups.passed()) return kExitViolations;
  flec::Report algebras =
      flec::validate_bunch(flec::groups_to_algebras(b), cfg);
  std::cout << algebras.to_string();
  return algebras.passed() ? kExitPass : kExitViolations;
}

int run_derive(const std::string& path, const flec::CheckConfig& cfg,
               bool emit_table) {
  const flec::BunchOfLayerGroups b = load_bunch(path);
  const flec::Chain c = flec::derive_chain(flec::groups_to_algebras(b));
  if (emit_table) {
    const auto table = flec::to_finite_table(c);
    if (!table) {
      throw std::domain_error("the derived chain is infinite; no table");
    }
    std::cout << table->to_text();
  } else {
    std::cout << flec::render_table(c, cfg.window);
  }
  return kExitPass;
}

int run_decompose(const std::string& path, const flec::CheckConfig& cfg) {
  flec::FiniteChainTable table;
  try {
    table = flec::FiniteChainTable::from_text(read_file(path));
  } catch (const std::runtime_error& e) {
    throw UsageError(std::string(e.what()));
  }
  const flec::BunchOfLayerAlgebras a =
      flec::decompose_chain(flec::table_chain(table), cfg);
  std::cout << flec::print_bunch(flec::algebras_to_groups(a));
  return kExitPass;
}

int run_enumerate(int n, const std::string& parity_word, bool quiet) {
  flec::SearchConfig sc;
  sc.n = n;
  const std::pair<const char*, flec::Parity> kinds[] = {
      {"odd", flec::Parity::Odd},
      {"even-id", flec::Parity::EvenIdempotent},
      {"even-nonid", flec::Parity::EvenNonIdempotent},
  };
  std::ostringstream summary;
  for (const auto& [word, parity] : kinds) {
    if (!parity_word.empty() && parity_word != word) continue;
    sc.parity = parity;
    const auto found = flec::enumerate_finite_chains(sc);
    for (const auto& t : found) {
      if (!quiet) std::cout << t.to_text() << "\n";
    }
    summary << n << ' ' << word << ' ' << found.size() << '\n';
  }
  std::cout << summary.str();
  return kExitPass;
}

int run_roundtrip(const std::string& path, const flec::CheckConfig& cfg) {
  return report_exit(flec::verify_representation(load_bunch(path), cfg));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Involutive commutative residuated chains from bunches of totally "
      "ordered abelian groups"};
  app.require_subcommand(1);

  flec::CheckConfig cfg;
  const auto add_common = [&cfg](CLI::App* cmd) {
    cmd->add_option("--seed", cfg.seed, "random seed for sampled checks");
    cmd->add_option("--samples", cfg.samples,
                    "sample count for sampled checks");
    cmd->add_option("--window", cfg.window,
                    "coordinate window for sampling and rendering");
  };

  std::string path;
  bool emit_table = false;
  int n = 1;
  std::string parity_word;
  bool quiet = false;

  CLI::App* check =
      app.add_subcommand("check", "validate a bunch description");
  check->add_option("file", path, "bunch description file")->required();
  add_common(check);

  CLI::App* derive = app.add_subcommand(
      "derive", "derive the chain of a bunch and render it");
  derive->add_option("file", path, "bunch description file")->required();
  derive->add_flag("--emit-table", emit_table,
                   "print the finite chain as a reloadable table");
  add_common(derive);

  CLI::App* decompose = app.add_subcommand(
      "decompose", "decompose a finite chain table into a bunch");
  decompose->add_option("file", path, "chain table file")->required();
  add_common(decompose);

  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "search every chain on n elements by brute force");
  enumerate->add_option("--n", n, "carrier size (1..8)")->required();
  enumerate
      ->add_option("--parity", parity_word,
                   "restrict to one parity: odd, even-id or even-nonid")
      ->check(CLI::IsMember({"odd", "even-id", "even-nonid"}));
  enumerate->add_flag("--quiet", quiet, "print only the summary counts");

  CLI::App* roundtrip = app.add_subcommand(
      "roundtrip", "full representation check for a bunch description");
  roundtrip->add_option("file", path, "bunch description file")->required();
  add_common(roundtrip);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (check->parsed()) return run_check(path, cfg);
    if (derive->parsed()) return run_derive(path, cfg, emit_table);
    if (decompose->parsed()) return run_decompose(path, cfg);
    if (enumerate->parsed()) return run_enumerate(n, parity_word, quiet);
    if (roundtrip->parsed()) return run_roundtrip(path, cfg);
  } catch (const flec::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitViolations;
  }
  return kExitUsage;
}
