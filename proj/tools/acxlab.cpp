// Scenario runner for the acx library: loads a JSON scenario, executes the
// requested operation and writes CSV/JSON artifacts with deterministic seeds.
//
// Exit codes: 0 success, 1 malformed input, 2 invariant violated at run time.

#include <cstdio>
#include <iostream>

#include <CLI11.hpp>

#include "acx/errors.hpp"
#include "acx/scenario.hpp"

int main(int argc, char** argv) {
  CLI::App app{"acxlab - almost complex analysis scenario runner"};
  app.require_subcommand(0, 1);

  std::string scenario_path, out_dir;
  uint64_t seed = 0;
  bool seed_set = false;
  int threads = 1;

  app.add_option("--scenario", scenario_path, "path to a scenario JSON file");
  app.add_option("--out", out_dir, "output directory (overrides the scenario's 'out')");
  auto* seed_opt = app.add_option("--seed", seed, "seed override (mandatory for sampling ops)");
  app.add_option("--threads", threads,
                 "parallelism hint; results are identical for any value");

  auto* cat = app.add_subcommand("catalog", "list builtin charts, fields and suites");

  CLI11_PARSE(app, argc, argv);
  seed_set = seed_opt->count() > 0;

  if (cat->parsed()) {
    std::cout << acx::catalog_text();
    return 0;
  }

  if (scenario_path.empty()) {
    std::cerr << "error: --scenario PATH is required (or use the 'catalog' subcommand)\n";
    return 1;
  }
  if (threads < 1) {
    std::cerr << "error: --threads must be >= 1\n";
    return 1;
  }

  acx::RunOptions opts;
  opts.scenario_path = scenario_path;
  opts.out_dir = out_dir;
  if (seed_set) opts.seed_override = seed;
  opts.threads = threads;

  try {
    int rc = acx::run_scenario_file(opts);
    if (rc == 2) std::cerr << "invariant violated; see failure_report.json\n";
    return rc;
  } catch (const acx::SpecError& e) {
    std::cerr << "malformed input at '" << e.where << "': " << e.what() << "\n";
    return 1;
  } catch (const acx::AcxError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
