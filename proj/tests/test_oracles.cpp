#include <doctest.h>

#include <bit>
#include <numeric>
#include <random>

#include "cayley/oracles.hpp"
#include "support/brute_force.hpp"

using namespace cayley;

namespace {
AdjacencyPredicate pred(const CayleyGraph& g) {
  return [&g](std::int64_t u, std::int64_t v) { return g.adjacent(u, v); };
}
}  // namespace

TEST_CASE("exact clique on the closed neighbourhood of 0") {
  const auto t = make_prime_triple(2, 3, 5);
  const CayleyGraph g(t);
  auto vs = g.neighbors(0);
  vs.insert(vs.begin(), 0);
  REQUIRE(vs.size() == 29);
  const auto k = exact_max_clique(vs, pred(g));
  CHECK(k.size() == 5);
  CHECK(pairwise_adjacent(g, k));
  CHECK(brute::max_clique(brute::build(2, 3, 5), vs) == 5);

  const CayleyGraph h(make_prime_triple(3, 5, 7));
  auto hs = h.neighbors(0);
  hs.insert(hs.begin(), 0);
  CHECK(exact_max_clique(hs, pred(h)).size() == 7);
}

TEST_CASE("exact clique edge cases") {
  const auto t = make_prime_triple(2, 3, 5);
  const CayleyGraph g(t);
  const auto block = block_member_exponents({0, 1, 2}, t);
  CHECK(exact_max_clique(block, pred(g)).size() == 1);
  const std::vector<std::int64_t> k5{0, 36, 72, 108, 144};
  CHECK(exact_max_clique(k5, pred(g)) == k5);
  CHECK(exact_max_clique(std::vector<std::int64_t>{}, pred(g)).empty());
  OracleBudget tiny;
  tiny.max_clique_vertices = 4;
  CHECK_THROWS_AS(exact_max_clique(k5, pred(g), tiny), Error);
}

TEST_CASE("exact clique against subset search on random graphs") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 30; ++round) {
    const int n = 6 + round % 12;
    std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) m[i][j] = m[j][i] = (rng() % 100) < 55;
    std::vector<std::int64_t> vs(n);
    std::iota(vs.begin(), vs.end(), 0);
    auto adj = [&](std::int64_t a, std::int64_t b) { return m[a][b]; };
    std::size_t best = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      bool ok = true;
      for (int i = 0; i < n && ok; ++i)
        for (int j = i + 1; j < n && ok; ++j)
          if ((mask >> i & 1) && (mask >> j & 1) && !m[i][j]) ok = false;
      if (ok) best = std::max<std::size_t>(best, std::popcount(mask));
    }
    CHECK(exact_max_clique(vs, adj).size() == best);
  }
}

TEST_CASE("exact independent set of the index graph") {
  const IndexGraph a(make_prime_triple(2, 3, 5));
  const auto sa = exact_max_independent_index(a);
  CHECK(sa.size() == 6);
  for (std::size_t x = 0; x < sa.size(); ++x)
    for (std::size_t y = x + 1; y < sa.size(); ++y) CHECK_FALSE(IndexGraph::adjacent(sa[x], sa[y]));
  CHECK(exact_max_independent_index(IndexGraph(make_prime_triple(3, 5, 7))).size() == 15);
  CHECK_THROWS_AS(exact_max_independent_index(IndexGraph(make_prime_triple(5, 7, 11))), Error);
}

TEST_CASE("distance sweep") {
  const CayleyGraph g(make_prime_triple(2, 3, 5));
  OracleBudget all;
  all.bfs_sources = 899;
  const auto r = distance_sweep(g, all);
  CHECK(r.sources.size() == 900);
  CHECK(r.pairs_compared == 810'000);
  CHECK(r.max_distance == 6);
  CHECK(r.mismatches == 0);
  CHECK(r.eccentricity_uniform);
  CHECK(r.eccentricity_source0 == 6);
  CHECK(std::accumulate(r.histogram_source0.begin(), r.histogram_source0.end(), std::int64_t{0}) == 900);
  CHECK(r.histogram_source0[1] == 28);

  const CayleyGraph h(make_prime_triple(3, 5, 7));
  const auto s = distance_sweep(h);
  CHECK(s.sources.size() == 51);
  CHECK(s.sources.front() == 0);
  CHECK(s.pairs_compared >= 100'000);
  CHECK(s.mismatches == 0);
  CHECK(s.max_distance == 6);
  CHECK(s.eccentricity_source0 == 6);
}

TEST_CASE("sweep is deterministic across worker counts") {
  const CayleyGraph h(make_prime_triple(2, 3, 7));
  OracleBudget one;
  one.bfs_sources = 20;
  one.seed = 5;
  OracleBudget four = one;
  four.workers = 4;
  const auto a = distance_sweep(h, one);
  const auto b = distance_sweep(h, four);
  CHECK(a.sources == b.sources);
  CHECK(a.pairs_compared == b.pairs_compared);
  CHECK(a.histogram_source0 == b.histogram_source0);
  CHECK(a.mismatches == b.mismatches);
  CHECK(sample_sources(1000, 20, 5) == sample_sources(1000, 20, 5));
  CHECK(sample_sources(1000, 20, 5) != sample_sources(1000, 20, 6));
  CHECK(sample_sources(10, 50, 1).size() == 10);
}

TEST_CASE("triangle search") {
  const CayleyGraph g(make_prime_triple(2, 3, 5));
  const auto tri = find_triangle(g);
  REQUIRE(tri.has_value());
  CHECK(pairwise_adjacent(g, {tri->begin(), tri->end()}));
  CHECK((*tri)[0] == 0);

  const auto block = block_member_exponents({1, 1, 1}, g.triple());
  CHECK_FALSE(find_triangle_in(block, pred(g)).has_value());
  const std::vector<std::int64_t> k{0, 36, 72};
  CHECK(find_triangle_in(k, pred(g)).has_value());
}
