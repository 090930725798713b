// graph.hpp - the implicit circulant graph Cay(Z_n, C).
//
// Nothing is materialized: adjacency is an O(1) arithmetic test on the
// difference of exponents, and neighbors are translates u + c of C.
#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "cayley/connecting_set.hpp"
#include "cayley/group.hpp"

namespace cayley {

inline constexpr std::int32_t kUnreachable = -1;
inline constexpr std::int64_t kDefaultMaterializationCap = 20'000;

/// Hop counts from a source, kUnreachable where no path exists.
using DistanceTable = std::vector<std::int32_t>;

class CayleyGraph {
public:
  explicit CayleyGraph(const PrimeTriple& t);

  const PrimeTriple& triple() const noexcept { return triple_; }
  const ConnectingSet& cset() const noexcept { return cset_; }
  std::int64_t vertex_count() const noexcept { return triple_.n(); }
  std::int64_t degree() const noexcept { return cset_.size(); }

  bool adjacent(Exponent u, Exponent v) const;

  bool adjacent_unchecked(Exponent u, Exponent v) const noexcept {
    if (u == v) return false;
    const Exponent d = u > v ? u - v : u - v + triple_.n();
    return is_connector_unchecked(d, triple_);
  }

  /// All neighbors of u, ascending.
  std::vector<Exponent> neighbors(Exponent u) const;

  /// Calls f(v) for each neighbor v in the order of C (not sorted).
  template <class F>
  void for_each_neighbor(Exponent u, F&& f) const {
    const std::int64_t n = triple_.n();
    for (Exponent c : cset_.members) {
      Exponent v = u + c;
      if (v >= n) v -= n;
      f(v);
    }
  }

  DistanceTable bfs(Exponent source) const;

  void check_vertex(Exponent u) const;

private:
  PrimeTriple triple_;
  ConnectingSet cset_;
};

/// Largest finite entry of a distance table.
std::int32_t eccentricity(const DistanceTable& dist) noexcept;

/// Number of vertices with a finite distance.
std::int64_t reached_count(const DistanceTable& dist) noexcept;

struct ConnectivityVerdict {
  BezoutWitness bezout;
  bool bezout_holds = false;   // identity and word replay both check out
  std::int64_t bfs_reached = 0;
  bool bfs_connected = false;
  bool connected() const noexcept { return bezout_holds && bfs_connected; }
};

ConnectivityVerdict is_connected(const CayleyGraph& g);

/// Connected and every degree even.
bool is_eulerian(const CayleyGraph& g);

/// {0, alpha^2 beta^2, 2 alpha^2 beta^2}.
std::array<Exponent, 3> girth_certificate(const CayleyGraph& g);
inline constexpr int kGirth = 3;

/// {k alpha^2 beta^2 : 0 <= k <= 4}, a K5.
std::array<Exponent, 5> nonplanarity_certificate(const CayleyGraph& g);

/// True iff every pair of the listed vertices is adjacent.
bool pairwise_adjacent(const CayleyGraph& g, const std::vector<Exponent>& vs);

enum class ExportFormat { EdgeList, Dot };

/// Writes every undirected edge; throws TooLarge when n exceeds cap.
/// Returns the number of edges written.
std::int64_t export_graph(const CayleyGraph& g, ExportFormat format, std::ostream& out,
                          std::int64_t cap = kDefaultMaterializationCap);

}  // namespace cayley
