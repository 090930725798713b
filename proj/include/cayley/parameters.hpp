// parameters.hpp - certified graph parameters.
//
// Each parameter comes with an explicit witness (clique, coloring, independent
// set, witness pair) and a check of that witness against the adjacency test.
#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "cayley/graph.hpp"
#include "cayley/oracles.hpp"
#include "cayley/structure.hpp"

namespace cayley {

/// {k alpha^2 beta^2 : 0 <= k < gamma}; the clique number is gamma.
std::vector<Exponent> clique_certificate(const PrimeTriple& t);

/// ((g_a mod alpha) + (g_b mod beta) + g_c) mod gamma.
std::int64_t zeta_color(Exponent v, const PrimeTriple& t);

struct ColoringVerdict {
  bool proper = false;
  std::int64_t chromatic = 0;          // gamma, when proper and the clique certificate holds
  bool sampled = false;
  std::int64_t edges_checked = 0;
  std::int64_t monochromatic = 0;
  bool clique_certified = false;
};

struct ColoringOptions {
  std::int64_t exhaustive_cap = 2'000;   // above this n, sample edges instead
  std::int64_t sample_edges = 1'000'000;
  std::uint64_t seed = 1;
};

ColoringVerdict verify_coloring(const CayleyGraph& g, const ColoringOptions& opts = {});

struct IndependenceCertificate {
  std::vector<BlockId> index_set;      // L, ascending
  std::vector<Exponent> vertices;      // union of the blocks, ascending
  std::int64_t size() const noexcept { return static_cast<std::int64_t>(vertices.size()); }
};

/// L = {(i, j, (i + j) mod gamma)} and the union of its blocks.
IndependenceCertificate independence_certificate(const PrimeTriple& t);

struct InternalEdgeScan {
  std::int64_t pairs_checked = 0;
  std::int64_t internal_edges = 0;
};

/// Exhaustive pair scan over the vertex set.
InternalEdgeScan count_internal_edges(const CayleyGraph& g, const std::vector<Exponent>& vertices);

/// Same count by walking the neighbors of each member; pairs_checked then
/// counts (vertex, connector) incidences.
InternalEdgeScan count_internal_edges_by_neighbors(const CayleyGraph& g,
                                                   const std::vector<Exponent>& vertices);

struct IndexLemmaChecklist {
  bool certificate_projection_injective = false;  // pi_ab on L
  bool oracle_projection_injective = false;       // pi_ab on the oracle's optimum
  bool certificate_agreement_free = false;        // L independent in the index graph
  std::int64_t max_independent = 0;               // exact, from the oracle
  bool max_equals_ab = false;
  bool counting_bound = false;                    // |I| * alpha beta gamma = alpha^2 beta^2 gamma
  bool all() const noexcept {
    return certificate_projection_injective && oracle_projection_injective &&
           certificate_agreement_free && max_equals_ab && counting_bound;
  }
};

/// Throws BudgetExceeded when the index graph is beyond the exact oracle.
IndexLemmaChecklist verify_index_lemmas(const PrimeTriple& t, const OracleBudget& budget = {});

/// Per-component cost: 0 equal, 1 different residue mod p, 2 same residue but unequal.
struct DistanceProfile {
  std::array<int, 3> cost{};
  int total() const noexcept { return cost[0] + cost[1] + cost[2]; }
};

DistanceProfile distance_profile(Exponent u, Exponent v, const PrimeTriple& t);

std::int64_t closed_form_distance(Exponent u, Exponent v, const PrimeTriple& t);

/// Distance in Cay(Z_{alpha^2 beta^2}, S_A) between (a, b) and (x, y), with
/// a, x in Z_{alpha^2} and b, y in Z_{beta^2}. Throws ComponentOutOfRange.
std::int64_t two_prime_distance(std::int64_t a, std::int64_t b, std::int64_t x, std::int64_t y,
                                std::int64_t alpha, std::int64_t beta);

struct DiameterCertificate {
  std::int64_t value = 6;
  Exponent witness_u = 0;
  Exponent witness_v = 0;             // components (alpha, beta, gamma)
  std::int64_t witness_distance = 0;  // closed form at the witness pair
  std::int32_t bfs_eccentricity = 0;  // from vertex 0
  bool verified() const noexcept { return witness_distance == value && bfs_eccentricity == value; }
};

DiameterCertificate diameter(const CayleyGraph& g);

}  // namespace cayley
