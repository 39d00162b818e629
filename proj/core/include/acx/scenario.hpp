#pragma once

#include <optional>
#include <string>

namespace acx {

struct RunOptions {
  std::string scenario_path;
  std::string out_dir;  // empty -> scenario "out" key -> "."
  std::optional<uint64_t> seed_override;
  int threads = 1;
};

/// Loads, validates and runs a scenario file. Returns 0 on success, 2 when a
/// run-time invariant fails (a machine-readable failure report is written to
/// the output directory). Malformed input throws SpecError with a pointer to
/// the offending key (the CLI maps it to exit 1).
int run_scenario_file(const RunOptions& options);

/// Stable listing of builtin charts, fields and suites.
std::string catalog_text();

class AlmostComplexChart;

/// Chart JSON codec for polynomial-table charts ({n, radius, entries: [...]},
/// 1-based rows/cols). Serialization writes terms in a canonical order, so
/// load -> serialize -> load round-trips to identical documents.
std::string serialize_chart_json(const AlmostComplexChart& chart);
AlmostComplexChart load_chart_json(const std::string& text);

}  // namespace acx
