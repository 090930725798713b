// report.hpp - the machine-readable certificate report.
//
// Serialization is canonical: keys appear in the fixed order documented in
// docs/report-schema.md, integers are unquoted and certificate arrays are
// ascending. Equal inputs and seed give byte-identical output.
#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cayley/config.hpp"
#include "cayley/group.hpp"
#include "cayley/structure.hpp"

namespace cayley {

inline constexpr int kReportSchemaVersion = 1;

struct ReportOptions {
  RunConfig config;
  bool oracle = false;    // run the BFS distance sweep
  bool timings = false;   // append wall-clock timings (breaks byte determinism)
};

struct CertificateReport {
  std::array<std::int64_t, 3> primes{};
  std::int64_t n = 0;
  std::int64_t c_size = 0;
  std::int64_t c_size_formula = 0;
  std::int64_t degree = 0;
  std::string mode;  // "exhaustive" or "sampled"

  struct Connected {
    bool value = false;
    BezoutWitness bezout;
    bool bezout_holds = false;
    std::int64_t bfs_reached = 0;
    friend bool operator==(const Connected&, const Connected&) = default;
  } connected;

  bool eulerian = false;

  struct Girth {
    std::int64_t value = 0;
    std::vector<Exponent> triangle;
    bool verified = false;
    std::vector<Exponent> oracle_triangle;
    friend bool operator==(const Girth&, const Girth&) = default;
  } girth;

  struct Nonplanar {
    bool value = false;
    std::vector<Exponent> k5;
    bool verified = false;
    friend bool operator==(const Nonplanar&, const Nonplanar&) = default;
  } nonplanar;

  struct Clique {
    std::int64_t value = 0;
    std::vector<Exponent> certificate;
    bool verified = false;
    std::optional<std::int64_t> oracle_max;  // exact search on the closed neighborhood of 0
    friend bool operator==(const Clique&, const Clique&) = default;
  } clique;

  struct Chromatic {
    std::int64_t value = 0;
    bool coloring_proper = false;
    std::int64_t edges_checked = 0;
    std::int64_t monochromatic = 0;
    bool sampled = false;
    friend bool operator==(const Chromatic&, const Chromatic&) = default;
  } chromatic;

  struct Independence {
    std::int64_t value = 0;
    std::int64_t index_set_size = 0;
    std::vector<BlockId> index_set;
    std::int64_t internal_edges = 0;
    std::int64_t pairs_checked = 0;
    friend bool operator==(const Independence&, const Independence&) = default;
  } independence;

  struct IndexMis {
    std::int64_t value = 0;
    std::int64_t expected = 0;
    bool lemmas_hold = false;
    friend bool operator==(const IndexMis&, const IndexMis&) = default;
  };
  std::optional<IndexMis> index_graph_mis;

  struct Sweep {
    std::int64_t sources = 0;
    std::int64_t pairs_compared = 0;
    std::int64_t max_distance = 0;
    std::int64_t mismatches = 0;
    bool eccentricity_uniform = false;
    friend bool operator==(const Sweep&, const Sweep&) = default;
  };
  struct Diameter {
    std::int64_t value = 0;
    std::array<Exponent, 2> witness_pair{};
    std::int64_t witness_distance = 0;
    std::int64_t bfs_eccentricity = 0;
    std::optional<Sweep> sweep;
    friend bool operator==(const Diameter&, const Diameter&) = default;
  } diameter;

  struct Hamiltonian {
    std::string kind;
    bool verified = false;
    std::array<Exponent, 2> endpoints{};
    std::string cycle_existence;  // "constructed" or "not determined"
    friend bool operator==(const Hamiltonian&, const Hamiltonian&) = default;
  } hamiltonian;

  std::optional<std::array<bool, 8>> prop23;
  std::optional<bool> block_partition;
  std::optional<bool> block_adjacency_consistent;
  std::uint64_t oracle_seed = 0;
  std::optional<std::vector<std::pair<std::string, double>>> timings_ms;

  friend bool operator==(const CertificateReport&, const CertificateReport&) = default;
};

CertificateReport build_report(const PrimeTriple& t, const ReportOptions& opts = {});

nlohmann::ordered_json to_json(const CertificateReport& r);
CertificateReport report_from_json(const nlohmann::json& j);

/// Canonical JSON followed by a newline. Throws SinkFailure.
void write_report(const CertificateReport& r, std::ostream& out);

/// Names of every check whose verdict is negative; empty when all agree.
std::vector<std::string> failed_checks(const CertificateReport& r);

}  // namespace cayley
