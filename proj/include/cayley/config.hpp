// config.hpp - key = value configuration for budgets and seed.
//
//   # comment
//   seed = 7
//   budget_sources = 50
//   max_clique_vertices = 400
//   max_index_ids = 300
//   sample_edges = 1000000
//   exhaustive_cap = 2000
//   materialization_cap = 20000
//   workers = 4
//   output_dir = /tmp/reports
#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "cayley/oracles.hpp"

namespace cayley {

struct RunConfig {
  OracleBudget budget;
  std::int64_t exhaustive_cap = 2'000;
  std::int64_t materialization_cap = kDefaultMaterializationCap;
  std::optional<std::filesystem::path> output_dir;
};

/// Applies the keys found in `in` on top of `base`. Throws Error(BadConfig)
/// on unknown keys or malformed values.
RunConfig parse_config(std::istream& in, RunConfig base = {});
RunConfig load_config(const std::filesystem::path& path, RunConfig base = {});

inline constexpr const char* kOutputDirEnv = "CAYLEY_OUTPUT_DIR";

/// Relative paths are placed under the configured output directory, or under
/// $CAYLEY_OUTPUT_DIR when no directory is configured.
std::filesystem::path resolve_output(const std::filesystem::path& p, const RunConfig& cfg);

}  // namespace cayley
