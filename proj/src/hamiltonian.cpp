#include "cayley/hamiltonian.hpp"

#include <algorithm>
#include <atomic>
#include <ostream>
#include <thread>

namespace cayley {

namespace {

// One layer in forward order: rows g_b ascending, row direction alternating,
// starting along the gamma axis.
std::vector<std::pair<std::int64_t, std::int64_t>> layer_sweep(const PrimeTriple& t) {
  std::vector<std::pair<std::int64_t, std::int64_t>> cells;
  cells.reserve(static_cast<std::size_t>(t.mod_b() * t.mod_c()));
  for (std::int64_t b = 0; b < t.mod_b(); ++b) {
    for (std::int64_t i = 0; i < t.mod_c(); ++i) {
      cells.emplace_back(b, b % 2 == 0 ? i : t.mod_c() - 1 - i);
    }
  }
  return cells;
}

}  // namespace

WalkCertificate snake_walk(const PrimeTriple& t) {
  const auto forward = layer_sweep(t);
  WalkCertificate w;
  w.vertices.reserve(static_cast<std::size_t>(t.n()));
  for (std::int64_t layer = 0; layer < t.mod_a(); ++layer) {
    auto emit = [&](const std::pair<std::int64_t, std::int64_t>& cell) {
      w.vertices.push_back(crt_combine({layer, cell.first, cell.second}, t));
    };
    if (layer % 2 == 0) {
      std::for_each(forward.begin(), forward.end(), emit);
    } else {
      std::for_each(forward.rbegin(), forward.rend(), emit);
    }
  }
  w.closed = t.alpha() == 2;
  w.kind = w.closed ? WalkKind::Cycle : WalkKind::Path;
  return w;
}

bool verify_walk(const WalkCertificate& w, const CayleyGraph& g, unsigned workers) {
  const std::int64_t n = g.vertex_count();
  if (static_cast<std::int64_t>(w.vertices.size()) != n) {
    throw Error(ErrorCode::LengthMismatch, "walk has " + std::to_string(w.vertices.size()) +
                                               " vertices, graph has " + std::to_string(n));
  }
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(n), 0);
  for (Exponent v : w.vertices) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]++ != 0) return false;
  }

  const std::size_t steps = w.vertices.size() - 1;
  workers = std::max(1u, workers);
  std::atomic<bool> ok{true};
  auto check = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end && ok.load(std::memory_order_relaxed); ++i) {
      if (!g.adjacent_unchecked(w.vertices[i], w.vertices[i + 1])) ok = false;
    }
  };
  if (workers == 1) {
    check(0, steps);
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (steps + workers - 1) / workers;
    for (std::size_t b = 0; b < steps; b += chunk) pool.emplace_back(check, b, std::min(steps, b + chunk));
  }
  if (!ok) return false;
  if (w.kind == WalkKind::Cycle) return g.adjacent_unchecked(w.vertices.back(), w.vertices.front());
  return true;
}

void write_walk(const WalkCertificate& w, std::ostream& out) {
  out << (w.kind == WalkKind::Cycle ? "cycle" : "path") << '\n';
  for (Exponent v : w.vertices) out << v << '\n';
  if (!out) throw Error(ErrorCode::SinkFailure, "write failed");
}

}  // namespace cayley
