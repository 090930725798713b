#include "cayley/oracles.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <thread>

#include "cayley/kernels/kernels.hpp"

namespace cayley {

namespace {

using Bits = std::vector<std::uint64_t>;

class CliqueSearch {
public:
  CliqueSearch(std::size_t n, std::vector<Bits> adj) : n_(n), words_((n + 63) / 64), adj_(std::move(adj)) {}

  std::vector<std::size_t> run() {
    Bits all(words_, 0);
    for (std::size_t v = 0; v < n_; ++v) all[v / 64] |= std::uint64_t{1} << (v % 64);
    std::vector<std::size_t> current;
    expand(current, all);
    return best_;
  }

private:
  // Greedy sequential coloring of P; returns vertices in color order with
  // their color numbers (colors ascending).
  void color_sort(const Bits& p, std::vector<std::size_t>& order, std::vector<std::size_t>& colors) const {
    Bits uncolored = p;
    std::size_t color = 0;
    while (std::any_of(uncolored.begin(), uncolored.end(), [](std::uint64_t w) { return w != 0; })) {
      ++color;
      Bits q = uncolored;
      for (std::size_t w = 0; w < words_; ++w) {
        while (q[w] != 0) {
          const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(q[w]));
          q[w] &= q[w] - 1;
          uncolored[v / 64] &= ~(std::uint64_t{1} << (v % 64));
          for (std::size_t x = 0; x < words_; ++x) q[x] &= ~adj_[v][x];
          order.push_back(v);
          colors.push_back(color);
        }
      }
    }
  }

  void expand(std::vector<std::size_t>& current, Bits p) {
    std::vector<std::size_t> order, colors;
    color_sort(p, order, colors);
    for (std::size_t idx = order.size(); idx-- > 0;) {
      if (current.size() + colors[idx] <= best_.size()) return;
      const std::size_t v = order[idx];
      current.push_back(v);
      Bits next(words_);
      bool empty = true;
      for (std::size_t w = 0; w < words_; ++w) {
        next[w] = p[w] & adj_[v][w];
        empty = empty && next[w] == 0;
      }
      if (empty) {
        if (current.size() > best_.size()) best_ = current;
      } else {
        expand(current, std::move(next));
      }
      current.pop_back();
      p[v / 64] &= ~(std::uint64_t{1} << (v % 64));
    }
  }

  std::size_t n_;
  std::size_t words_;
  std::vector<Bits> adj_;
  std::vector<std::size_t> best_;
};

std::vector<std::size_t> max_clique_indices(std::size_t n,
                                            const std::function<bool(std::size_t, std::size_t)>& adj) {
  // order by degree, highest first, ties by input position
  std::vector<std::size_t> deg(n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (x != y && adj(x, y)) ++deg[x];
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return deg[a] > deg[b]; });

  const std::size_t words = (n + 63) / 64;
  std::vector<Bits> bits(n, Bits(words, 0));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (x != y && adj(perm[x], perm[y])) bits[x][y / 64] |= std::uint64_t{1} << (y % 64);

  auto found = CliqueSearch(n, std::move(bits)).run();
  for (auto& v : found) v = perm[v];
  std::sort(found.begin(), found.end());
  return found;
}

}  // namespace

std::vector<std::int64_t> exact_max_clique(std::span<const std::int64_t> vertices,
                                           const AdjacencyPredicate& adjacent,
                                           const OracleBudget& budget) {
  if (static_cast<std::int64_t>(vertices.size()) > budget.max_clique_vertices) {
    throw Error(ErrorCode::BudgetExceeded, "clique search on " + std::to_string(vertices.size()) +
                                               " vertices exceeds budget " +
                                               std::to_string(budget.max_clique_vertices));
  }
  const auto idx = max_clique_indices(
      vertices.size(), [&](std::size_t x, std::size_t y) { return adjacent(vertices[x], vertices[y]); });
  std::vector<std::int64_t> out;
  for (auto i : idx) out.push_back(vertices[i]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BlockId> exact_max_independent_index(const IndexGraph& ig, const OracleBudget& budget) {
  if (ig.size() > budget.max_index_ids) {
    throw Error(ErrorCode::BudgetExceeded, "index graph has " + std::to_string(ig.size()) +
                                               " ids, budget " + std::to_string(budget.max_index_ids));
  }
  const auto idx = max_clique_indices(static_cast<std::size_t>(ig.size()), [&](std::size_t x, std::size_t y) {
    return !IndexGraph::adjacent(ig.ids()[x], ig.ids()[y]);
  });
  std::vector<BlockId> out;
  for (auto i : idx) out.push_back(ig.ids()[i]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Exponent> sample_sources(std::int64_t n, std::int64_t extra, std::uint64_t seed) {
  std::vector<Exponent> out;
  if (extra + 1 >= n) {
    out.resize(static_cast<std::size_t>(n));
    std::iota(out.begin(), out.end(), Exponent{0});
    return out;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Exponent> pick(1, n - 1);
  std::vector<Exponent> chosen{0};
  while (static_cast<std::int64_t>(chosen.size()) < extra + 1) {
    const Exponent s = pick(rng);
    if (std::find(chosen.begin(), chosen.end(), s) == chosen.end()) chosen.push_back(s);
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

DistanceSweepReport distance_sweep(const CayleyGraph& g, const OracleBudget& budget) {
  const auto& t = g.triple();
  const kernels::ComponentTable table(t);
  DistanceSweepReport report;
  report.sources = sample_sources(t.n(), budget.bfs_sources, budget.seed);

  struct Row {
    kernels::RowComparison cmp;
    std::int32_t ecc = 0;
    std::int64_t reached = 0;
  };
  std::vector<Row> rows(report.sources.size());
  DistanceTable row0;

  const unsigned workers = std::max(1u, std::min<unsigned>(budget.workers,
                                                           static_cast<unsigned>(rows.size())));
  auto work = [&](unsigned w) {
    std::vector<std::int32_t> closed(static_cast<std::size_t>(t.n()));
    for (std::size_t i = w; i < rows.size(); i += workers) {
      const Exponent s = report.sources[i];
      DistanceTable bfs = g.bfs(s);
      kernels::distance_row(table, static_cast<std::size_t>(s), closed);
      rows[i].cmp = kernels::compare_rows(closed, bfs);
      rows[i].ecc = eccentricity(bfs);
      rows[i].reached = reached_count(bfs);
      if (s == 0) row0 = std::move(bfs);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }

  report.eccentricity_source0 = rows.front().ecc;
  for (const Row& r : rows) {
    report.pairs_compared += static_cast<std::int64_t>(t.n());
    report.mismatches += static_cast<std::int64_t>(r.cmp.mismatches);
    // an unreachable entry (-1) is always a mismatch
    report.max_distance = std::max(report.max_distance, r.cmp.max_observed);
    report.eccentricity_uniform = report.eccentricity_uniform && r.ecc == report.eccentricity_source0 &&
                                  r.reached == t.n();
  }
  report.histogram_source0.assign(static_cast<std::size_t>(report.eccentricity_source0) + 1, 0);
  for (auto d : row0) {
    if (d != kUnreachable) ++report.histogram_source0[static_cast<std::size_t>(d)];
  }
  return report;
}

std::optional<std::array<Exponent, 3>> find_triangle(const CayleyGraph& g) {
  const auto& c = g.cset().members;
  const std::int64_t n = g.vertex_count();
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      if (is_connector_unchecked((c[j] - c[i] + n) % n, g.triple())) {
        return std::array<Exponent, 3>{0, c[i], c[j]};
      }
    }
  }
  return std::nullopt;
}

std::optional<std::array<std::int64_t, 3>> find_triangle_in(std::span<const std::int64_t> vertices,
                                                            const AdjacencyPredicate& adjacent) {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (!adjacent(vertices[i], vertices[j])) continue;
      for (std::size_t k = j + 1; k < vertices.size(); ++k) {
        if (adjacent(vertices[i], vertices[k]) && adjacent(vertices[j], vertices[k])) {
          return std::array<std::int64_t, 3>{vertices[i], vertices[j], vertices[k]};
        }
      }
    }
  return std::nullopt;
}

}  // namespace cayley
