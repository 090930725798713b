// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.
#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "cayley/hamiltonian.hpp"
#include "cayley/oracles.hpp"
#include "cayley/parameters.hpp"
#include "cayley/structure.hpp"
#include "support/brute_force.hpp"

using namespace cayley;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double limit_s;
  std::function<Outcome()> body;
};

std::string capture(const std::string& args) {
  const std::string cmd = std::string(CAYLEYP2_BIN) + " " + args;
  std::string out;
  FILE* p = ::popen(cmd.c_str(), "r");
  if (!p) return out;
  char buf[4096];
  std::size_t got = 0;
  while ((got = std::fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, got);
  const int status = ::pclose(p);
  if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) out += "\n<exit " + std::to_string(status) + ">";
  return out;
}

AdjacencyPredicate pred(const CayleyGraph& g) {
  return [&g](std::int64_t u, std::int64_t v) { return g.adjacent(u, v); };
}

Outcome connecting_set_count() {
  const auto t1 = make_prime_triple(2, 3, 5);
  const auto t2 = make_prime_triple(3, 5, 7);
  const auto c1 = enumerate_c(t1);
  std::vector<Exponent> scan;
  for (Exponent k = 0; k < t1.n(); ++k) {
    const auto o = element_order(k, t1);
    if (o == 4 || o == 9 || o == 25) scan.push_back(k);
  }
  const auto c2 = enumerate_c(t2);
  std::ostringstream d;
  d << "|C(2,3,5)|=" << c1.size() << " scan=" << scan.size() << " |C(3,5,7)|=" << c2.size();
  return {c1.size() == 28 && c1.members == scan && c2.size() == 68 &&
              c2.members == brute::connectors(3, 5, 7),
          d.str()};
}

Outcome regularity() {
  const CayleyGraph g(make_prime_triple(2, 3, 5));
  bool all28 = true;
  for (Exponent u = 0; u < g.vertex_count(); ++u) {
    std::int64_t deg = 0;
    for (Exponent v = 0; v < g.vertex_count(); ++v) deg += g.adjacent(u, v);
    all28 = all28 && deg == 28;
  }
  const auto conn = is_connected(g);
  std::ostringstream d;
  d << "degree 28 everywhere=" << all28 << " bezout=" << conn.bezout_holds << " reached=" << conn.bfs_reached;
  return {all28 && g.degree() % 2 == 0 && conn.bezout_holds && conn.bfs_reached == 900 && is_eulerian(g),
          d.str()};
}

Outcome girth_nonplanar() {
  bool ok = true;
  std::ostringstream d;
  for (auto p : {std::array<std::int64_t, 3>{2, 3, 5}, {2, 3, 7}}) {
    const CayleyGraph g(make_prime_triple(p[0], p[1], p[2]));
    const auto tri = girth_certificate(g);
    const auto k5 = nonplanarity_certificate(g);
    const bool a = pairwise_adjacent(g, {tri.begin(), tri.end()});
    const bool b = pairwise_adjacent(g, {k5.begin(), k5.end()});
    ok = ok && a && b;
    d << g.triple().to_string() << " triangle=" << a << " K5=" << b << " ";
  }
  return {ok, d.str()};
}

Outcome clique() {
  const auto t = make_prime_triple(2, 3, 5);
  const CayleyGraph g(t);
  auto vs = g.neighbors(0);
  vs.insert(vs.begin(), 0);
  const auto k = exact_max_clique(vs, pred(g));
  const bool cert = pairwise_adjacent(g, clique_certificate(t));
  std::ostringstream d;
  d << "closed neighbourhood " << vs.size() << " vertices, max clique " << k.size() << ", certificate " << cert;
  return {vs.size() == 29 && k.size() == 5 && cert, d.str()};
}

Outcome chromatic() {
  const CayleyGraph g(make_prime_triple(2, 3, 5));
  const auto v = verify_coloring(g);
  std::ostringstream d;
  d << "edges " << v.edges_checked << " monochromatic " << v.monochromatic << " chi " << v.chromatic;
  return {v.proper && !v.sampled && v.edges_checked == 12'600 && v.monochromatic == 0 && v.chromatic == 5,
          d.str()};
}

Outcome independence() {
  const auto t = make_prime_triple(2, 3, 5);
  const CayleyGraph g(t);
  const auto cert = independence_certificate(t);
  const auto scan = count_internal_edges(g, cert.vertices);
  const auto m1 = exact_max_independent_index(IndexGraph(t)).size();
  const auto m2 = exact_max_independent_index(IndexGraph(make_prime_triple(3, 5, 7))).size();
  std::ostringstream d;
  d << "size " << cert.size() << " pairs " << scan.pairs_checked << " internal " << scan.internal_edges
    << " MIS " << m1 << "/" << m2;
  return {cert.size() == 180 && scan.pairs_checked == 16'110 && scan.internal_edges == 0 && m1 == 6 && m2 == 15,
          d.str()};
}

Outcome structure() {
  const CayleyGraph g(make_prime_triple(2, 3, 5));
  const auto p = verify_prop23(g);
  const bool part = verify_partition(g.triple()) && verify_blocks_independent(g);
  const auto adj = verify_block_adjacency(g);
  std::ostringstream d;
  d << "fiber items ";
  for (bool b : p.items) d << (b ? '1' : '0');
  d << " partition " << part << " blockAdjacency " << adj.consistent;
  return {p.all() && part && adj.consistent, d.str()};
}

Outcome diameter_check() {
  const CayleyGraph g(make_prime_triple(2, 3, 5));
  OracleBudget all;
  all.bfs_sources = g.vertex_count() - 1;
  const auto a = distance_sweep(g, all);
  const CayleyGraph h(make_prime_triple(3, 5, 7));
  const auto b = distance_sweep(h);
  std::ostringstream d;
  d << "(2,3,5) pairs " << a.pairs_compared << " mismatches " << a.mismatches << " max " << a.max_distance
    << "; (3,5,7) ecc0 " << b.eccentricity_source0 << " pairs " << b.pairs_compared << " mismatches "
    << b.mismatches;
  return {a.pairs_compared == 810'000 && a.mismatches == 0 && a.max_distance == 6 &&
              b.eccentricity_source0 == 6 && b.pairs_compared >= 100'000 && b.mismatches == 0,
          d.str()};
}

Outcome hamiltonicity() {
  const auto t1 = make_prime_triple(2, 3, 5);
  const auto t2 = make_prime_triple(3, 5, 7);
  const auto w1 = snake_walk(t1);
  const auto w2 = snake_walk(t2);
  const bool v1 = verify_walk(w1, CayleyGraph(t1));
  const bool v2 = verify_walk(w2, CayleyGraph(t2));
  const auto s = crt_components(w2.vertices.front(), t2);
  const auto e = crt_components(w2.vertices.back(), t2);
  const bool differ = s.a != e.a && s.b != e.b && s.c != e.c;
  std::ostringstream d;
  d << "(2,3,5) " << (w1.kind == WalkKind::Cycle ? "cycle " : "path ") << w1.vertices.size() << " verified "
    << v1 << "; (3,5,7) " << (w2.kind == WalkKind::Cycle ? "cycle " : "path ") << w2.vertices.size()
    << " verified " << v2 << " endpoints differ " << differ;
  return {w1.kind == WalkKind::Cycle && w1.vertices.size() == 900 && v1 && w2.kind == WalkKind::Path &&
              w2.vertices.size() == 11'025 && v2 && differ,
          d.str()};
}

Outcome determinism() {
  const auto a = capture("params --primes 2,3,5 --seed 7");
  const auto b = capture("params --primes 2,3,5 --seed 7");
  std::ostringstream d;
  d << a.size() << " bytes, identical " << (a == b);
  return {!a.empty() && a.front() == '{' && a == b, d.str()};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "connecting-set count", 1, connecting_set_count},
      {2, "regularity and eulerian", 1, regularity},
      {3, "girth and non-planarity certificates", 1, girth_nonplanar},
      {4, "clique number", 5, clique},
      {5, "chromatic number", 1, chromatic},
      {6, "independence number", 10, independence},
      {7, "structure lemmas", 10, structure},
      {8, "diameter", 60, diameter_check},
      {9, "hamiltonicity", 5, hamiltonicity},
      {10, "determinism", 60, determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = o.ok && secs <= c.limit_s;
    failed += !pass;
    std::printf("%s criterion %2d  %-38s %7.3fs (limit %gs)  %s\n", pass ? "PASS" : "FAIL", c.id, c.name, secs,
                c.limit_s, o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
