// structure.hpp - fibers, independence blocks and the index graph.
//
// Two coordinate systems meet here. Fibers use the mixed-radix digits of an
// exponent, e = r + s*alpha^2 + t*alpha^2*beta^2. Blocks use CRT components
// reduced modulo the primes themselves.
#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "cayley/graph.hpp"

namespace cayley {

enum class FiberKind : std::uint8_t { R, S, T };

struct FiberId {
  FiberKind kind = FiberKind::R;
  std::int64_t index = 0;
};

/// Mixed-radix digits (r, s, t) of an exponent.
struct FiberDigits {
  std::int64_t r = 0;
  std::int64_t s = 0;
  std::int64_t t = 0;
};

FiberDigits fiber_digits(Exponent e, const PrimeTriple& t) noexcept;

/// Members of R_r, S_s or T_t, ascending. Throws IndexOutOfRange.
std::vector<Exponent> fiber_members(const FiberId& f, const PrimeTriple& t);

struct BlockId {
  std::int64_t i = 0;
  std::int64_t j = 0;
  std::int64_t k = 0;

  friend bool operator==(const BlockId&, const BlockId&) = default;
  friend auto operator<=>(const BlockId&, const BlockId&) = default;
};

/// The block containing a vertex: its components reduced mod (alpha, beta, gamma).
BlockId block_of(const Components& c, const PrimeTriple& t) noexcept;

/// C(i,j,k) in component space: (i + alpha x, j + beta y, k + gamma z).
std::vector<Components> block_members(const BlockId& b, const PrimeTriple& t);

/// Same block as exponents, ascending.
std::vector<Exponent> block_member_exponents(const BlockId& b, const PrimeTriple& t);

/// Disjointness and coverage of the alpha*beta*gamma blocks. Throws TooLarge.
bool verify_partition(const PrimeTriple& t, std::int64_t cap = kDefaultMaterializationCap);

/// Exhaustive pair scan inside every block.
bool verify_blocks_independent(const CayleyGraph& g, std::int64_t cap = kDefaultMaterializationCap);

/// Graph on block ids; two ids are adjacent iff they agree in exactly two
/// coordinates.
class IndexGraph {
public:
  explicit IndexGraph(const PrimeTriple& t);

  std::int64_t size() const noexcept { return static_cast<std::int64_t>(ids_.size()); }
  const std::vector<BlockId>& ids() const noexcept { return ids_; }
  const BlockId& id(std::int64_t index) const { return ids_.at(static_cast<std::size_t>(index)); }
  std::int64_t index_of(const BlockId& b) const;

  static bool adjacent(const BlockId& x, const BlockId& y) noexcept {
    const int agree = (x.i == y.i) + (x.j == y.j) + (x.k == y.k);
    return agree == 2;
  }
  bool adjacent(std::int64_t x, std::int64_t y) const { return adjacent(id(x), id(y)); }

private:
  std::array<std::int64_t, 3> dims_{};
  std::vector<BlockId> ids_;  // lexicographic
};

inline IndexGraph index_graph(const PrimeTriple& t) { return IndexGraph(t); }

struct BlockAdjacencyCheck {
  bool consistent = false;
  std::int64_t block_pairs = 0;        // unordered pairs of distinct blocks
  std::int64_t adjacent_pairs = 0;     // pairs with at least one cross edge
  std::int64_t mismatches = 0;         // pairs where edges and index rule disagree
  std::int64_t internal_edges = 0;     // edges with both ends in one block
};

/// Compares actual cross-block edges with the index-graph rule for every
/// pair of blocks. Throws TooLarge.
BlockAdjacencyCheck verify_block_adjacency(const CayleyGraph& g,
                                           std::int64_t cap = kDefaultMaterializationCap);

/// True iff seq is a cycle in g: length >= 3, distinct, consecutive entries
/// adjacent and last adjacent to first.
bool is_cycle(const CayleyGraph& g, const std::vector<Exponent>& seq);

// Cycle certificates, emitted independently of the checks that consume them.

/// r + s alpha^2 + k alpha^2 beta^2 for k = 0 .. gamma^2 - 1.
std::vector<Exponent> fiber_pair_cycle(std::int64_t r, std::int64_t s, const PrimeTriple& t);

/// l beta^2 gamma^2 for l = 0 .. alpha^2 - 1: one representative per R_r.
std::vector<Exponent> alpha_class_cycle(const PrimeTriple& t);

/// k_r beta^2 gamma^2 + l alpha^2 gamma^2 for l = 0 .. beta^2 - 1, where
/// k_r beta^2 gamma^2 is the unique member of R_r of that form.
std::vector<Exponent> row_representative_cycle(std::int64_t r, const PrimeTriple& t);

struct Prop23Checklist {
  std::array<bool, 8> items{};
  /// |R_0 cap S_0 cap A|, reported separately since the statement excludes (0,0).
  std::int64_t identity_bucket = 0;
  bool all() const noexcept {
    for (bool b : items) if (!b) return false;
    return true;
  }
};

/// Checks the eight fiber properties literally. Throws TooLarge.
Prop23Checklist verify_prop23(const CayleyGraph& g, std::int64_t cap = kDefaultMaterializationCap);

}  // namespace cayley
