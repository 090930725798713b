#include "cayley/graph.hpp"

#include <algorithm>
#include <ostream>

namespace cayley {

CayleyGraph::CayleyGraph(const PrimeTriple& t) : triple_(t), cset_(enumerate_c(t)) {}

void CayleyGraph::check_vertex(Exponent u) const {
  if (u < 0 || u >= triple_.n()) {
    throw Error(ErrorCode::OutOfRange,
                "vertex " + std::to_string(u) + " outside [0," + std::to_string(triple_.n()) + ")");
  }
}

bool CayleyGraph::adjacent(Exponent u, Exponent v) const {
  check_vertex(u);
  check_vertex(v);
  return adjacent_unchecked(u, v);
}

std::vector<Exponent> CayleyGraph::neighbors(Exponent u) const {
  check_vertex(u);
  std::vector<Exponent> out;
  out.reserve(cset_.members.size());
  for_each_neighbor(u, [&](Exponent v) { out.push_back(v); });
  std::sort(out.begin(), out.end());
  return out;
}

DistanceTable CayleyGraph::bfs(Exponent source) const {
  check_vertex(source);
  const auto n = static_cast<std::size_t>(triple_.n());
  DistanceTable dist(n, kUnreachable);
  // every vertex enters the queue at most once, so a flat array of size n
  // is the whole ring
  std::vector<Exponent> queue(n);
  std::size_t head = 0, tail = 0;
  dist[static_cast<std::size_t>(source)] = 0;
  queue[tail++] = source;
  while (head < tail) {
    const Exponent u = queue[head++];
    const std::int32_t next = dist[static_cast<std::size_t>(u)] + 1;
    for_each_neighbor(u, [&](Exponent v) {
      auto& slot = dist[static_cast<std::size_t>(v)];
      if (slot == kUnreachable) {
        slot = next;
        queue[tail++] = v;
      }
    });
  }
  return dist;
}

std::int32_t eccentricity(const DistanceTable& dist) noexcept {
  std::int32_t best = 0;
  for (auto d : dist) best = std::max(best, d);
  return best;
}

std::int64_t reached_count(const DistanceTable& dist) noexcept {
  return std::count_if(dist.begin(), dist.end(), [](std::int32_t d) { return d != kUnreachable; });
}

ConnectivityVerdict is_connected(const CayleyGraph& g) {
  ConnectivityVerdict v;
  v.bezout = bezout_witness(g.triple());
  v.bezout_holds = bezout_identity_holds(v.bezout, g.triple()) &&
                   replay_bezout_word(v.bezout, g.triple()) == 1;
  v.bfs_reached = reached_count(g.bfs(0));
  v.bfs_connected = v.bfs_reached == g.vertex_count();
  return v;
}

bool is_eulerian(const CayleyGraph& g) {
  return g.degree() % 2 == 0 && is_connected(g).connected();
}

std::array<Exponent, 3> girth_certificate(const CayleyGraph& g) {
  const auto& t = g.triple();
  const Exponent step = t.mod_a() * t.mod_b();
  return {0, step, 2 * step};
}

std::array<Exponent, 5> nonplanarity_certificate(const CayleyGraph& g) {
  const auto& t = g.triple();
  const Exponent step = t.mod_a() * t.mod_b();
  return {0, step, 2 * step, 3 * step, 4 * step};
}

bool pairwise_adjacent(const CayleyGraph& g, const std::vector<Exponent>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (!g.adjacent(vs[i], vs[j])) return false;
    }
  }
  return true;
}

std::int64_t export_graph(const CayleyGraph& g, ExportFormat format, std::ostream& out,
                          std::int64_t cap) {
  const std::int64_t n = g.vertex_count();
  if (n > cap) {
    throw Error(ErrorCode::TooLarge,
                "graph has " + std::to_string(n) + " vertices, cap is " + std::to_string(cap));
  }
  if (format == ExportFormat::Dot) {
    out << "graph cayley {\n";
    for (Exponent u = 0; u < n; ++u) out << "  " << u << ";\n";
  }
  std::int64_t edges = 0;
  for (Exponent u = 0; u < n; ++u) {
    for (Exponent v : g.neighbors(u)) {
      if (v <= u) continue;
      if (format == ExportFormat::EdgeList) {
        out << u << ' ' << v << '\n';
      } else {
        out << "  " << u << " -- " << v << ";\n";
      }
      ++edges;
    }
  }
  if (format == ExportFormat::Dot) out << "}\n";
  if (!out) throw Error(ErrorCode::SinkFailure, "write failed");
  return edges;
}

}  // namespace cayley
