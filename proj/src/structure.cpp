#include "cayley/structure.hpp"

#include <algorithm>
#include <set>

namespace cayley {

namespace {

void check_cap(std::int64_t n, std::int64_t cap) {
  if (n > cap) {
    throw Error(ErrorCode::TooLarge,
                "exhaustive check needs n <= " + std::to_string(cap) + ", got " + std::to_string(n));
  }
}

bool in_fiber_pair(Exponent e, std::int64_t r, std::int64_t s, const PrimeTriple& t) {
  const auto d = fiber_digits(e, t);
  return d.r == r && d.s == s;
}

}  // namespace

FiberDigits fiber_digits(Exponent e, const PrimeTriple& t) noexcept {
  return {e % t.mod_a(), (e / t.mod_a()) % t.mod_b(), e / (t.mod_a() * t.mod_b())};
}

std::vector<Exponent> fiber_members(const FiberId& f, const PrimeTriple& t) {
  const std::int64_t ma = t.mod_a(), mb = t.mod_b(), mc = t.mod_c();
  const std::int64_t limit = f.kind == FiberKind::R ? ma : f.kind == FiberKind::S ? mb : mc;
  if (f.index < 0 || f.index >= limit) {
    throw Error(ErrorCode::IndexOutOfRange, "fiber index " + std::to_string(f.index));
  }
  std::vector<Exponent> out;
  for (std::int64_t x = 0; x < ma; ++x) {
    if (f.kind == FiberKind::R && x != f.index) continue;
    for (std::int64_t y = 0; y < mb; ++y) {
      if (f.kind == FiberKind::S && y != f.index) continue;
      for (std::int64_t z = 0; z < mc; ++z) {
        if (f.kind == FiberKind::T && z != f.index) continue;
        out.push_back(x + y * ma + z * ma * mb);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

BlockId block_of(const Components& c, const PrimeTriple& t) noexcept {
  return {c.a % t.alpha(), c.b % t.beta(), c.c % t.gamma()};
}

std::vector<Components> block_members(const BlockId& b, const PrimeTriple& t) {
  if (b.i < 0 || b.i >= t.alpha() || b.j < 0 || b.j >= t.beta() || b.k < 0 || b.k >= t.gamma()) {
    throw Error(ErrorCode::IndexOutOfRange, "block id out of range");
  }
  std::vector<Components> out;
  out.reserve(static_cast<std::size_t>(t.alpha() * t.beta() * t.gamma()));
  for (std::int64_t x = 0; x < t.alpha(); ++x)
    for (std::int64_t y = 0; y < t.beta(); ++y)
      for (std::int64_t z = 0; z < t.gamma(); ++z)
        out.push_back({b.i + t.alpha() * x, b.j + t.beta() * y, b.k + t.gamma() * z});
  return out;
}

std::vector<Exponent> block_member_exponents(const BlockId& b, const PrimeTriple& t) {
  std::vector<Exponent> out;
  for (const auto& c : block_members(b, t)) out.push_back(crt_combine(c, t));
  std::sort(out.begin(), out.end());
  return out;
}

bool verify_partition(const PrimeTriple& t, std::int64_t cap) {
  check_cap(t.n(), cap);
  std::vector<std::uint8_t> hits(static_cast<std::size_t>(t.n()), 0);
  std::int64_t blocks = 0;
  for (std::int64_t i = 0; i < t.alpha(); ++i)
    for (std::int64_t j = 0; j < t.beta(); ++j)
      for (std::int64_t k = 0; k < t.gamma(); ++k) {
        ++blocks;
        for (Exponent e : block_member_exponents({i, j, k}, t)) {
          if (hits[static_cast<std::size_t>(e)]++ != 0) return false;
        }
      }
  if (blocks != t.alpha() * t.beta() * t.gamma()) return false;
  return std::all_of(hits.begin(), hits.end(), [](std::uint8_t h) { return h == 1; });
}

bool verify_blocks_independent(const CayleyGraph& g, std::int64_t cap) {
  const auto& t = g.triple();
  check_cap(t.n(), cap);
  const IndexGraph ig(t);
  for (const BlockId& b : ig.ids()) {
    const auto members = block_member_exponents(b, t);
    for (std::size_t x = 0; x < members.size(); ++x)
      for (std::size_t y = x + 1; y < members.size(); ++y)
        if (g.adjacent_unchecked(members[x], members[y])) return false;
  }
  return true;
}

IndexGraph::IndexGraph(const PrimeTriple& t) : dims_{t.alpha(), t.beta(), t.gamma()} {
  ids_.reserve(static_cast<std::size_t>(dims_[0] * dims_[1] * dims_[2]));
  for (std::int64_t i = 0; i < dims_[0]; ++i)
    for (std::int64_t j = 0; j < dims_[1]; ++j)
      for (std::int64_t k = 0; k < dims_[2]; ++k) ids_.push_back({i, j, k});
}

std::int64_t IndexGraph::index_of(const BlockId& b) const {
  if (b.i < 0 || b.i >= dims_[0] || b.j < 0 || b.j >= dims_[1] || b.k < 0 || b.k >= dims_[2]) {
    throw Error(ErrorCode::IndexOutOfRange, "block id out of range");
  }
  return (b.i * dims_[1] + b.j) * dims_[2] + b.k;
}

BlockAdjacencyCheck verify_block_adjacency(const CayleyGraph& g, std::int64_t cap) {
  const auto& t = g.triple();
  check_cap(t.n(), cap);
  const IndexGraph ig(t);
  const auto B = static_cast<std::size_t>(ig.size());

  std::vector<std::int64_t> block_index(static_cast<std::size_t>(t.n()));
  for (Exponent e = 0; e < t.n(); ++e) {
    block_index[static_cast<std::size_t>(e)] = ig.index_of(block_of(crt_components(e, t), t));
  }

  BlockAdjacencyCheck out;
  std::vector<std::uint8_t> touched(B * B, 0);
  for (Exponent u = 0; u < t.n(); ++u) {
    const auto bu = static_cast<std::size_t>(block_index[static_cast<std::size_t>(u)]);
    g.for_each_neighbor(u, [&](Exponent v) {
      if (v <= u) return;
      const auto bv = static_cast<std::size_t>(block_index[static_cast<std::size_t>(v)]);
      if (bu == bv) {
        ++out.internal_edges;
      } else {
        touched[bu * B + bv] = touched[bv * B + bu] = 1;
      }
    });
  }
  for (std::size_t x = 0; x < B; ++x) {
    for (std::size_t y = x + 1; y < B; ++y) {
      ++out.block_pairs;
      const bool has_edge = touched[x * B + y] != 0;
      out.adjacent_pairs += has_edge;
      if (has_edge != ig.adjacent(static_cast<std::int64_t>(x), static_cast<std::int64_t>(y))) {
        ++out.mismatches;
      }
    }
  }
  out.consistent = out.mismatches == 0 && out.internal_edges == 0;
  return out;
}

bool is_cycle(const CayleyGraph& g, const std::vector<Exponent>& seq) {
  if (seq.size() < 3) return false;
  std::set<Exponent> seen(seq.begin(), seq.end());
  if (seen.size() != seq.size()) return false;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (!g.adjacent(seq[i], seq[(i + 1) % seq.size()])) return false;
  }
  return true;
}

std::vector<Exponent> fiber_pair_cycle(std::int64_t r, std::int64_t s, const PrimeTriple& t) {
  std::vector<Exponent> seq;
  const std::int64_t step = t.mod_a() * t.mod_b();
  for (std::int64_t k = 0; k < t.mod_c(); ++k) seq.push_back(r + s * t.mod_a() + k * step);
  return seq;
}

std::vector<Exponent> alpha_class_cycle(const PrimeTriple& t) {
  std::vector<Exponent> seq;
  const std::int64_t gen = t.mod_b() * t.mod_c();
  for (std::int64_t l = 0; l < t.mod_a(); ++l) seq.push_back(l * gen);
  return seq;
}

std::vector<Exponent> row_representative_cycle(std::int64_t r, const PrimeTriple& t) {
  const std::int64_t gen_a = t.mod_b() * t.mod_c();
  const std::int64_t gen_b = t.mod_a() * t.mod_c();
  std::int64_t k_r = -1;
  for (std::int64_t l = 0; l < t.mod_a(); ++l) {
    if (fiber_digits(l * gen_a, t).r == r) {
      k_r = l;
      break;
    }
  }
  if (k_r < 0) throw Error(ErrorCode::IndexOutOfRange, "no alpha-class representative");
  std::vector<Exponent> seq;
  for (std::int64_t l = 0; l < t.mod_b(); ++l) seq.push_back((k_r * gen_a + l * gen_b) % t.n());
  return seq;
}

Prop23Checklist verify_prop23(const CayleyGraph& g, std::int64_t cap) {
  const auto& t = g.triple();
  check_cap(t.n(), cap);
  const std::int64_t ma = t.mod_a(), mb = t.mod_b(), mc = t.mod_c(), n = t.n();
  const std::int64_t ab = ma * mb;
  Prop23Checklist out;

  // (i) every T_t is independent
  {
    bool ok = true;
    for (std::int64_t tt = 0; tt < mc && ok; ++tt) {
      const auto members = fiber_members({FiberKind::T, tt}, t);
      for (std::size_t x = 0; x < members.size() && ok; ++x)
        for (std::size_t y = x + 1; y < members.size() && ok; ++y)
          ok = !g.adjacent_unchecked(members[x], members[y]);
    }
    out.items[0] = ok;
  }

  // (ii) inside R_r cap S_s, adjacency iff k != k' (mod gamma)
  {
    bool ok = true;
    for (std::int64_t r = 0; r < ma && ok; ++r)
      for (std::int64_t s = 0; s < mb && ok; ++s)
        for (std::int64_t k = 0; k < mc && ok; ++k)
          for (std::int64_t k2 = k + 1; k2 < mc && ok; ++k2) {
            const bool adj = g.adjacent_unchecked(r + s * ma + k * ab, r + s * ma + k2 * ab);
            ok = adj == (k % t.gamma() != k2 % t.gamma());
          }
    out.items[1] = ok;
  }

  // (iii) R_r cap S_s carries a cycle
  {
    bool ok = true;
    for (std::int64_t r = 0; r < ma && ok; ++r)
      for (std::int64_t s = 0; s < mb && ok; ++s) {
        const auto seq = fiber_pair_cycle(r, s, t);
        ok = is_cycle(g, seq) &&
             std::all_of(seq.begin(), seq.end(), [&](Exponent e) { return in_fiber_pair(e, r, s, t); });
      }
    out.items[2] = ok;
  }

  // (iv) for (r,s) != (0,0), exactly one k gamma^2 with 1 <= k < alpha^2 beta^2 lies in R_r cap S_s
  {
    std::vector<std::int64_t> bucket(static_cast<std::size_t>(ab), 0);
    for (std::int64_t k = 1; k < ab; ++k) {
      const auto d = fiber_digits(k * mc % n, t);
      ++bucket[static_cast<std::size_t>(d.r + d.s * ma)];
    }
    out.identity_bucket = bucket[0];
    out.items[3] = std::all_of(bucket.begin() + 1, bucket.end(), [](std::int64_t c) { return c == 1; });
  }

  // (v) k alpha^2 gamma^2 + r gamma^2 lies in R_r
  {
    bool ok = true;
    for (std::int64_t r = 0; r < ma && ok; ++r)
      for (std::int64_t k = 0; k < mb && ok; ++k)
        ok = fiber_digits((k * ma * mc + r * mc) % n, t).r == r;
    out.items[4] = ok;
  }

  // (vi) |R_r cap {l beta^2 gamma^2 : 0 <= l < alpha^2}| = 1
  {
    std::vector<std::int64_t> count(static_cast<std::size_t>(ma), 0);
    for (std::int64_t l = 0; l < ma; ++l) ++count[static_cast<std::size_t>(fiber_digits(l * mb * mc, t).r)];
    out.items[5] = std::all_of(count.begin(), count.end(), [](std::int64_t c) { return c == 1; });
  }

  // (vii) one representative per R_r, together forming a cycle
  {
    const auto seq = alpha_class_cycle(t);
    std::set<std::int64_t> rows;
    for (Exponent e : seq) rows.insert(fiber_digits(e, t).r);
    out.items[6] = is_cycle(g, seq) && seq.size() == static_cast<std::size_t>(ma) &&
                   rows.size() == static_cast<std::size_t>(ma);
  }

  // (viii) per r, one representative per S_s inside R_r, forming a cycle
  {
    bool ok = true;
    for (std::int64_t r = 0; r < ma && ok; ++r) {
      const auto seq = row_representative_cycle(r, t);
      std::vector<std::int64_t> per_s(static_cast<std::size_t>(mb), 0);
      for (Exponent e : seq) {
        const auto d = fiber_digits(e, t);
        if (d.r != r) ok = false;
        ++per_s[static_cast<std::size_t>(d.s)];
      }
      ok = ok && is_cycle(g, seq) &&
           std::all_of(per_s.begin(), per_s.end(), [](std::int64_t c) { return c == 1; });
    }
    out.items[7] = ok;
  }
  return out;
}

}  // namespace cayley
