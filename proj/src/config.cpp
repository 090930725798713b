#include "cayley/config.hpp"

#include <cstdlib>
#include <fstream>
#include <istream>
#include <string_view>

namespace cayley {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::int64_t positive(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  long long x = 0;
  try {
    x = std::stoll(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != value.size() || x <= 0) {
    throw Error(ErrorCode::BadConfig, key + " needs a positive integer, got '" + value + "'");
  }
  return x;
}

}  // namespace

RunConfig parse_config(std::istream& in, RunConfig cfg) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string body = trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::BadConfig, "line " + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key = trim(std::string_view(body).substr(0, eq));
    const std::string value = trim(std::string_view(body).substr(eq + 1));

    if (key == "seed") {
      std::size_t used = 0;
      try {
        cfg.budget.seed = std::stoull(value, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != value.size() || value.empty() || value[0] == '-') {
        throw Error(ErrorCode::BadConfig, "seed needs an unsigned integer, got '" + value + "'");
      }
    } else if (key == "budget_sources") {
      cfg.budget.bfs_sources = positive(key, value);
    } else if (key == "max_clique_vertices") {
      cfg.budget.max_clique_vertices = positive(key, value);
    } else if (key == "max_index_ids") {
      cfg.budget.max_index_ids = positive(key, value);
    } else if (key == "sample_edges") {
      cfg.budget.sample_edges = positive(key, value);
    } else if (key == "exhaustive_cap") {
      cfg.exhaustive_cap = positive(key, value);
    } else if (key == "materialization_cap") {
      cfg.materialization_cap = positive(key, value);
    } else if (key == "workers") {
      cfg.budget.workers = static_cast<unsigned>(positive(key, value));
    } else if (key == "output_dir") {
      cfg.output_dir = value;
    } else {
      throw Error(ErrorCode::BadConfig, "unknown key '" + key + "'");
    }
  }
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::BadConfig, "cannot open " + path.string());
  return parse_config(in, std::move(base));
}

std::filesystem::path resolve_output(const std::filesystem::path& p, const RunConfig& cfg) {
  if (p.is_absolute()) return p;
  if (cfg.output_dir) return *cfg.output_dir / p;
  if (const char* env = std::getenv(kOutputDirEnv); env != nullptr && *env != '\0') {
    return std::filesystem::path(env) / p;
  }
  return p;
}

}  // namespace cayley
