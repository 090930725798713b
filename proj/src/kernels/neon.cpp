// NEON kernels, 4 x int32 lanes. NEON is architectural on AArch64, so no
// runtime probe is needed.
#include <arm_neon.h>

#include <algorithm>

#include "cayley/kernels/kernels.hpp"

namespace cayley::kernels {

namespace {

inline int32x4_t component_cost(int32x4_t x, int32x4_t sx, int32x4_t rx, int32x4_t srx) {
  const uint32x4_t one = vdupq_n_u32(1);
  const uint32x4_t differs = vandq_u32(vmvnq_u32(vceqq_s32(x, sx)), one);
  const uint32x4_t congruent = vandq_u32(vceqq_s32(rx, srx), one);
  return vreinterpretq_s32_u32(vaddq_u32(differs, vandq_u32(differs, congruent)));
}

void distance_row_neon(const ComponentView& v, std::size_t s, std::int32_t* out) {
  const int32x4_t sa = vdupq_n_s32(v.a[s]), sb = vdupq_n_s32(v.b[s]), sc = vdupq_n_s32(v.c[s]);
  const int32x4_t sra = vdupq_n_s32(v.ra[s]), srb = vdupq_n_s32(v.rb[s]), src = vdupq_n_s32(v.rc[s]);
  std::size_t i = 0;
  for (; i + 4 <= v.n; i += 4) {
    int32x4_t d = component_cost(vld1q_s32(v.a + i), sa, vld1q_s32(v.ra + i), sra);
    d = vaddq_s32(d, component_cost(vld1q_s32(v.b + i), sb, vld1q_s32(v.rb + i), srb));
    d = vaddq_s32(d, component_cost(vld1q_s32(v.c + i), sc, vld1q_s32(v.rc + i), src));
    vst1q_s32(out + i, d);
  }
  for (; i < v.n; ++i) {
    std::int32_t d = 0;
    if (v.a[i] != v.a[s]) d += v.ra[i] == v.ra[s] ? 2 : 1;
    if (v.b[i] != v.b[s]) d += v.rb[i] == v.rb[s] ? 2 : 1;
    if (v.c[i] != v.c[s]) d += v.rc[i] == v.rc[s] ? 2 : 1;
    out[i] = d;
  }
}

RowComparison compare_rows_neon(const std::int32_t* expected, const std::int32_t* observed,
                                std::size_t n) {
  RowComparison r;
  int32x4_t vmax = vdupq_n_s32(0);
  uint32x4_t diff = vdupq_n_u32(0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const int32x4_t o = vld1q_s32(observed + i);
    diff = vaddq_u32(diff, vandq_u32(vmvnq_u32(vceqq_s32(vld1q_s32(expected + i), o)), vdupq_n_u32(1)));
    vmax = vmaxq_s32(vmax, o);
  }
  r.mismatches = vaddvq_u32(diff);
  r.max_observed = std::max(0, vmaxvq_s32(vmax));
  for (; i < n; ++i) {
    r.mismatches += expected[i] != observed[i];
    r.max_observed = std::max(r.max_observed, observed[i]);
  }
  return r;
}

AdjacentMatch adjacent_match_neon(const std::int32_t* row, const std::int32_t* values,
                                  std::int32_t probe, std::size_t n) {
  AdjacentMatch m;
  const int32x4_t one = vdupq_n_s32(1), vprobe = vdupq_n_s32(probe);
  uint32x4_t adj_acc = vdupq_n_u32(0), same_acc = vdupq_n_u32(0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const uint32x4_t adj = vceqq_s32(vld1q_s32(row + i), one);
    const uint32x4_t same = vandq_u32(adj, vceqq_s32(vld1q_s32(values + i), vprobe));
    adj_acc = vaddq_u32(adj_acc, vandq_u32(adj, vdupq_n_u32(1)));
    same_acc = vaddq_u32(same_acc, vandq_u32(same, vdupq_n_u32(1)));
  }
  m.adjacent = vaddvq_u32(adj_acc);
  m.matching = vaddvq_u32(same_acc);
  for (; i < n; ++i) {
    if (row[i] != 1) continue;
    ++m.adjacent;
    m.matching += values[i] == probe;
  }
  return m;
}

constexpr KernelTable kNeon{Isa::Neon, distance_row_neon, compare_rows_neon, adjacent_match_neon};

}  // namespace

namespace detail {
const KernelTable* neon_table() noexcept { return &kNeon; }
}  // namespace detail

}  // namespace cayley::kernels
