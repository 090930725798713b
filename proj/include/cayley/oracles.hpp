// oracles.hpp - brute-force ground truth.
//
// Nothing here calls the closed-form constructors from parameters.hpp; the
// oracles only use the adjacency predicate, BFS and the index-graph rule.
#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "cayley/graph.hpp"
#include "cayley/structure.hpp"

namespace cayley {

struct OracleBudget {
  std::int64_t max_clique_vertices = 400;
  std::int64_t max_index_ids = 300;
  std::int64_t bfs_sources = 50;       // extra BFS sources beyond vertex 0
  std::int64_t sample_edges = 1'000'000;
  std::uint64_t seed = 1;
  unsigned workers = 1;
};

using AdjacencyPredicate = std::function<bool(std::int64_t, std::int64_t)>;

/// Maximum clique of the subgraph induced on `vertices`, by branch and bound
/// with a greedy-coloring bound. Result ascending. Throws BudgetExceeded.
std::vector<std::int64_t> exact_max_clique(std::span<const std::int64_t> vertices,
                                           const AdjacencyPredicate& adjacent,
                                           const OracleBudget& budget = {});

/// Maximum independent set of the index graph (clique in its complement).
/// Throws BudgetExceeded when alpha*beta*gamma exceeds the budget.
std::vector<BlockId> exact_max_independent_index(const IndexGraph& ig,
                                                 const OracleBudget& budget = {});

struct DistanceSweepReport {
  std::vector<Exponent> sources;            // ascending, always contains 0
  std::int64_t pairs_compared = 0;
  std::int32_t max_distance = 0;
  std::int64_t mismatches = 0;              // BFS vs closed form
  std::int32_t eccentricity_source0 = 0;
  bool eccentricity_uniform = true;         // same eccentricity from every source
  std::vector<std::int64_t> histogram_source0;  // index = distance
};

/// BFS from vertex 0 and from `budget.bfs_sources` further sampled sources
/// (all vertices if that covers n), each row compared against the component
/// cost distance. Work is split across `budget.workers` threads; the merged
/// result does not depend on scheduling.
DistanceSweepReport distance_sweep(const CayleyGraph& g, const OracleBudget& budget = {});

/// First triangle {0, c1, c2} with c1 < c2 in C and c2 - c1 in C.
std::optional<std::array<Exponent, 3>> find_triangle(const CayleyGraph& g);

/// Triangle search on an arbitrary induced subgraph, by pair/triple scan.
std::optional<std::array<std::int64_t, 3>> find_triangle_in(std::span<const std::int64_t> vertices,
                                                            const AdjacencyPredicate& adjacent);

/// Sources used by distance_sweep: 0 plus a seeded sample, ascending.
std::vector<Exponent> sample_sources(std::int64_t n, std::int64_t extra, std::uint64_t seed);

}  // namespace cayley
