// hamiltonian.hpp - boustrophedon ("snake") Hamiltonian walks.
//
// Layer g_a = l holds the beta^2 x gamma^2 grid of (g_b, g_c). The walk sweeps
// each layer row by row, alternating direction, and steps g_a -> g_a + 1 at
// the corner where the layer ends. Odd layers replay the even-layer sweep
// backwards. With alpha = 2 there are four layers and the last vertex
// (3, 0, 0) is adjacent to (0, 0, 0), closing a cycle; with alpha > 2 the walk
// is an open path ending at (alpha^2-1, beta^2-1, gamma^2-1).
#pragma once

#include <iosfwd>
#include <vector>

#include "cayley/graph.hpp"

namespace cayley {

enum class WalkKind { Cycle, Path };

struct WalkCertificate {
  std::vector<Exponent> vertices;
  bool closed = false;
  WalkKind kind = WalkKind::Path;
};

WalkCertificate snake_walk(const PrimeTriple& t);

/// Permutation of [0, n), consecutive pairs adjacent, closure if a cycle.
/// Uses only the arithmetic adjacency test. Throws LengthMismatch.
bool verify_walk(const WalkCertificate& w, const CayleyGraph& g, unsigned workers = 1);

/// Header line "cycle" or "path", then one exponent per line in walk order.
void write_walk(const WalkCertificate& w, std::ostream& out);

}  // namespace cayley
