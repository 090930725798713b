// Brute-force references used by the tests. These deliberately avoid the
// library: orders come from std::gcd, adjacency from the order of u - v, and
// distances from a plain BFS over an explicit adjacency list.
#pragma once
#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <queue>
#include <vector>

namespace brute {

inline std::int64_t order(std::int64_t k, std::int64_t n) { return n / std::gcd(n, k); }

/// All k in [0, n) whose order is p^2 for one of the three primes.
inline std::vector<std::int64_t> connectors(std::int64_t p, std::int64_t q, std::int64_t r) {
  const std::int64_t n = p * p * q * q * r * r;
  std::vector<std::int64_t> out;
  for (std::int64_t k = 0; k < n; ++k) {
    const auto o = order(k, n);
    if (o == p * p || o == q * q || o == r * r) out.push_back(k);
  }
  return out;
}

struct Graph {
  std::int64_t n = 0;
  std::vector<std::vector<std::int64_t>> adj;
  std::vector<std::uint8_t> is_conn;  // indexed by difference

  bool adjacent(std::int64_t u, std::int64_t v) const {
    const std::int64_t d = ((u - v) % n + n) % n;
    return is_conn[static_cast<std::size_t>(d)] != 0;
  }
};

inline Graph build(std::int64_t p, std::int64_t q, std::int64_t r) {
  Graph g;
  g.n = p * p * q * q * r * r;
  g.is_conn.assign(static_cast<std::size_t>(g.n), 0);
  const auto c = connectors(p, q, r);
  for (auto k : c) g.is_conn[static_cast<std::size_t>(k)] = 1;
  g.adj.resize(static_cast<std::size_t>(g.n));
  for (std::int64_t u = 0; u < g.n; ++u)
    for (auto k : c) g.adj[static_cast<std::size_t>(u)].push_back((u + k) % g.n);
  return g;
}

inline std::vector<int> bfs(const Graph& g, std::int64_t s) {
  std::vector<int> d(static_cast<std::size_t>(g.n), -1);
  std::queue<std::int64_t> q;
  d[static_cast<std::size_t>(s)] = 0;
  q.push(s);
  while (!q.empty()) {
    const auto u = q.front();
    q.pop();
    for (auto v : g.adj[static_cast<std::size_t>(u)]) {
      if (d[static_cast<std::size_t>(v)] < 0) {
        d[static_cast<std::size_t>(v)] = d[static_cast<std::size_t>(u)] + 1;
        q.push(v);
      }
    }
  }
  return d;
}

/// Largest clique by exhaustive subset growth; only for tiny vertex lists.
inline std::size_t max_clique(const Graph& g, const std::vector<std::int64_t>& vs) {
  std::size_t best = 0;
  std::vector<std::int64_t> cur;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    best = std::max(best, cur.size());
    for (std::size_t i = from; i < vs.size(); ++i) {
      bool ok = true;
      for (auto w : cur) ok = ok && g.adjacent(w, vs[i]);
      if (!ok) continue;
      cur.push_back(vs[i]);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return best;
}

/// Triples p < q < r of primes with p^2 q^2 r^2 <= limit.
inline std::vector<std::array<std::int64_t, 3>> small_triples(std::int64_t limit) {
  std::vector<std::int64_t> ps;
  for (std::int64_t x = 2; x * x <= limit; ++x) {
    bool prime = true;
    for (std::int64_t d = 2; d * d <= x; ++d) prime = prime && x % d != 0;
    if (prime) ps.push_back(x);
  }
  std::vector<std::array<std::int64_t, 3>> out;
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = i + 1; j < ps.size(); ++j)
      for (std::size_t k = j + 1; k < ps.size(); ++k) {
        const auto m = ps[i] * ps[j] * ps[k];
        if (m * m <= limit) out.push_back({ps[i], ps[j], ps[k]});
      }
  return out;
}

}  // namespace brute
