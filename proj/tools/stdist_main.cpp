// stdist: growth series, periods, tree checks and residue orbits from the command line.

#include <CLI11.hpp>

#include <iostream>

#include "stdist/errors.hpp"
#include "stdist/run.hpp"

int main(int argc, char** argv) {
  using namespace stdist::io;

  RunConfig config;
  std::string command = "suite";
  std::string format = "text";

  CLI::App app{"Exact verification toolkit for Steinberg periods over unramified extensions"};
  app.add_option("command", command,
                 "growth | period | tree-verify | tree-period | invariant | orbit | suite")
      ->required();
  app.add_option("--family", config.family, "Dynkin family A-G")->capture_default_str();
  app.add_option("--rank", config.rank, "rank d of the affine type")->capture_default_str();
  app.add_option("--qF", config.q_F, "residue field size of F (prime power)")->capture_default_str();
  app.add_option("--depth", config.depth, "tree radius for tree commands")->capture_default_str();
  app.add_option("--K", config.max_length, "growth truncation length")->capture_default_str();
  app.add_option("--p", config.p, "characteristic for orbit")->capture_default_str();
  app.add_option("--n", config.n, "q = p^n for orbit")->capture_default_str();
  app.add_option("--format", format, "json | csv | text")->capture_default_str();
  app.add_option("--cache-dir", config.cache_dir, "directory for cached growth series");
  app.add_option("--budget", config.element_budget, "element budget for enumeration")
      ->capture_default_str();
  app.add_option("--seed", config.seed, "seed for automorphism sampling")->capture_default_str();
  app.add_option("--tree-out", config.tree_out, "write the tree pair as JSON");
  app.add_option("--cocycle-out", config.cocycle_out, "write the Iwahori cocycle as CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    config.command = parse_command(command);
    config.format = parse_format(format);
  } catch (const stdist::InvalidArgumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  const RunOutcome outcome = run(config);
  if (outcome.exit_code == kExitUsage || outcome.exit_code == kExitBudget ||
      (outcome.report.checks.empty() && outcome.exit_code != kExitPass)) {
    std::cerr << outcome.output;
  } else {
    std::cout << outcome.output;
  }
  return outcome.exit_code;
}
