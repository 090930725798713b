#include "cayley/parameters.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace cayley {

namespace {

int component_cost(std::int64_t x, std::int64_t y, std::int64_t p) {
  if (x == y) return 0;
  return (x - y) % p == 0 ? 2 : 1;
}

bool projection_injective(const std::vector<BlockId>& ids) {
  std::set<std::pair<std::int64_t, std::int64_t>> seen;
  for (const auto& b : ids) {
    if (!seen.insert({b.i, b.j}).second) return false;
  }
  return true;
}

bool agreement_free(const std::vector<BlockId>& ids) {
  for (std::size_t x = 0; x < ids.size(); ++x)
    for (std::size_t y = x + 1; y < ids.size(); ++y)
      if (IndexGraph::adjacent(ids[x], ids[y])) return false;
  return true;
}

}  // namespace

std::vector<Exponent> clique_certificate(const PrimeTriple& t) {
  std::vector<Exponent> out;
  const std::int64_t step = t.mod_a() * t.mod_b();
  for (std::int64_t k = 0; k < t.gamma(); ++k) out.push_back(k * step % t.n());
  return out;
}

std::int64_t zeta_color(Exponent v, const PrimeTriple& t) {
  const Components c = crt_components(v, t);
  return (c.a % t.alpha() + c.b % t.beta() + c.c) % t.gamma();
}

ColoringVerdict verify_coloring(const CayleyGraph& g, const ColoringOptions& opts) {
  const auto& t = g.triple();
  ColoringVerdict out;
  out.clique_certified = pairwise_adjacent(g, clique_certificate(t));

  if (t.n() <= opts.exhaustive_cap) {
    std::vector<std::int64_t> color(static_cast<std::size_t>(t.n()));
    for (Exponent v = 0; v < t.n(); ++v) color[static_cast<std::size_t>(v)] = zeta_color(v, t);
    for (Exponent u = 0; u < t.n(); ++u) {
      g.for_each_neighbor(u, [&](Exponent v) {
        if (v <= u) return;
        ++out.edges_checked;
        out.monochromatic += color[static_cast<std::size_t>(u)] == color[static_cast<std::size_t>(v)];
      });
    }
  } else {
    out.sampled = true;
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<Exponent> pick_vertex(0, t.n() - 1);
    std::uniform_int_distribution<std::size_t> pick_conn(0, g.cset().members.size() - 1);
    for (std::int64_t i = 0; i < opts.sample_edges; ++i) {
      const Exponent u = pick_vertex(rng);
      const Exponent v = (u + g.cset().members[pick_conn(rng)]) % t.n();
      ++out.edges_checked;
      out.monochromatic += zeta_color(u, t) == zeta_color(v, t);
    }
  }
  out.proper = out.monochromatic == 0;
  out.chromatic = out.proper && out.clique_certified ? t.gamma() : 0;
  return out;
}

IndependenceCertificate independence_certificate(const PrimeTriple& t) {
  IndependenceCertificate cert;
  for (std::int64_t i = 0; i < t.alpha(); ++i)
    for (std::int64_t j = 0; j < t.beta(); ++j) cert.index_set.push_back({i, j, (i + j) % t.gamma()});
  std::sort(cert.index_set.begin(), cert.index_set.end());
  for (const auto& b : cert.index_set) {
    const auto members = block_member_exponents(b, t);
    cert.vertices.insert(cert.vertices.end(), members.begin(), members.end());
  }
  std::sort(cert.vertices.begin(), cert.vertices.end());
  return cert;
}

InternalEdgeScan count_internal_edges(const CayleyGraph& g, const std::vector<Exponent>& vertices) {
  InternalEdgeScan scan;
  for (std::size_t x = 0; x < vertices.size(); ++x)
    for (std::size_t y = x + 1; y < vertices.size(); ++y) {
      ++scan.pairs_checked;
      scan.internal_edges += g.adjacent(vertices[x], vertices[y]);
    }
  return scan;
}

InternalEdgeScan count_internal_edges_by_neighbors(const CayleyGraph& g,
                                                   const std::vector<Exponent>& vertices) {
  std::vector<std::uint8_t> member(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Exponent v : vertices) member[static_cast<std::size_t>(v)] = 1;
  InternalEdgeScan scan;
  for (Exponent u : vertices) {
    g.for_each_neighbor(u, [&](Exponent v) {
      ++scan.pairs_checked;
      if (v > u && member[static_cast<std::size_t>(v)]) ++scan.internal_edges;
    });
  }
  return scan;
}

IndexLemmaChecklist verify_index_lemmas(const PrimeTriple& t, const OracleBudget& budget) {
  const IndexGraph ig(t);
  const auto cert = independence_certificate(t);
  const auto best = exact_max_independent_index(ig, budget);

  IndexLemmaChecklist out;
  out.certificate_projection_injective = projection_injective(cert.index_set);
  out.oracle_projection_injective = projection_injective(best) && agreement_free(best);
  out.certificate_agreement_free = agreement_free(cert.index_set);
  out.max_independent = static_cast<std::int64_t>(best.size());
  out.max_equals_ab = out.max_independent == t.alpha() * t.beta() &&
                      static_cast<std::int64_t>(cert.index_set.size()) == out.max_independent;
  out.counting_bound = out.max_independent * t.alpha() * t.beta() * t.gamma() ==
                       t.mod_a() * t.mod_b() * t.gamma();
  return out;
}

DistanceProfile distance_profile(Exponent u, Exponent v, const PrimeTriple& t) {
  const Components a = crt_components(u, t);
  const Components b = crt_components(v, t);
  return {{component_cost(a.a, b.a, t.alpha()), component_cost(a.b, b.b, t.beta()),
           component_cost(a.c, b.c, t.gamma())}};
}

std::int64_t closed_form_distance(Exponent u, Exponent v, const PrimeTriple& t) {
  return distance_profile(u, v, t).total();
}

std::int64_t two_prime_distance(std::int64_t a, std::int64_t b, std::int64_t x, std::int64_t y,
                                std::int64_t alpha, std::int64_t beta) {
  const std::int64_t ma = alpha * alpha, mb = beta * beta;
  if (a < 0 || a >= ma || x < 0 || x >= ma || b < 0 || b >= mb || y < 0 || y >= mb) {
    throw Error(ErrorCode::ComponentOutOfRange, "two-prime component out of range");
  }
  return component_cost(a, x, alpha) + component_cost(b, y, beta);
}

DiameterCertificate diameter(const CayleyGraph& g) {
  const auto& t = g.triple();
  DiameterCertificate cert;
  cert.witness_u = 0;
  cert.witness_v = crt_combine({t.alpha(), t.beta(), t.gamma()}, t);
  cert.witness_distance = closed_form_distance(cert.witness_u, cert.witness_v, t);
  cert.bfs_eccentricity = eccentricity(g.bfs(0));
  return cert;
}

}  // namespace cayley
