// AVX2 kernels, 8 x int32 lanes. Compiled with -mavx2 and only entered after
// a runtime CPUID check.
#include <immintrin.h>

#include <algorithm>
#include <bit>

#include "cayley/kernels/kernels.hpp"

namespace cayley::kernels {

namespace {

inline __m256i load(const std::int32_t* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

inline unsigned lane_mask(__m256i m) {
  return static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(m)));
}

// 0 / 1 / 2 per lane, see component_cost in scalar.cpp
inline __m256i component_cost(__m256i x, __m256i sx, __m256i rx, __m256i srx) {
  const __m256i one = _mm256_set1_epi32(1);
  const __m256i differs = _mm256_andnot_si256(_mm256_cmpeq_epi32(x, sx), one);
  const __m256i congruent = _mm256_and_si256(_mm256_cmpeq_epi32(rx, srx), one);
  return _mm256_add_epi32(differs, _mm256_and_si256(differs, congruent));
}

void distance_row_avx2(const ComponentView& v, std::size_t s, std::int32_t* out) {
  const __m256i sa = _mm256_set1_epi32(v.a[s]), sb = _mm256_set1_epi32(v.b[s]),
                sc = _mm256_set1_epi32(v.c[s]);
  const __m256i sra = _mm256_set1_epi32(v.ra[s]), srb = _mm256_set1_epi32(v.rb[s]),
                src = _mm256_set1_epi32(v.rc[s]);
  std::size_t i = 0;
  for (; i + 8 <= v.n; i += 8) {
    __m256i d = component_cost(load(v.a + i), sa, load(v.ra + i), sra);
    d = _mm256_add_epi32(d, component_cost(load(v.b + i), sb, load(v.rb + i), srb));
    d = _mm256_add_epi32(d, component_cost(load(v.c + i), sc, load(v.rc + i), src));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), d);
  }
  for (; i < v.n; ++i) {
    std::int32_t d = 0;
    if (v.a[i] != v.a[s]) d += v.ra[i] == v.ra[s] ? 2 : 1;
    if (v.b[i] != v.b[s]) d += v.rb[i] == v.rb[s] ? 2 : 1;
    if (v.c[i] != v.c[s]) d += v.rc[i] == v.rc[s] ? 2 : 1;
    out[i] = d;
  }
}

RowComparison compare_rows_avx2(const std::int32_t* expected, const std::int32_t* observed,
                                std::size_t n) {
  RowComparison r;
  __m256i vmax = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i o = load(observed + i);
    const unsigned eq = lane_mask(_mm256_cmpeq_epi32(load(expected + i), o));
    r.mismatches += 8 - static_cast<std::size_t>(std::popcount(eq));
    vmax = _mm256_max_epi32(vmax, o);
  }
  alignas(32) std::int32_t lanes[8];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), vmax);
  for (std::int32_t x : lanes) r.max_observed = std::max(r.max_observed, x);
  for (; i < n; ++i) {
    r.mismatches += expected[i] != observed[i];
    r.max_observed = std::max(r.max_observed, observed[i]);
  }
  return r;
}

AdjacentMatch adjacent_match_avx2(const std::int32_t* row, const std::int32_t* values,
                                  std::int32_t probe, std::size_t n) {
  AdjacentMatch m;
  const __m256i one = _mm256_set1_epi32(1);
  const __m256i vprobe = _mm256_set1_epi32(probe);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i adj = _mm256_cmpeq_epi32(load(row + i), one);
    const __m256i same = _mm256_and_si256(adj, _mm256_cmpeq_epi32(load(values + i), vprobe));
    m.adjacent += static_cast<std::size_t>(std::popcount(lane_mask(adj)));
    m.matching += static_cast<std::size_t>(std::popcount(lane_mask(same)));
  }
  for (; i < n; ++i) {
    if (row[i] != 1) continue;
    ++m.adjacent;
    m.matching += values[i] == probe;
  }
  return m;
}

constexpr KernelTable kAvx2{Isa::Avx2, distance_row_avx2, compare_rows_avx2, adjacent_match_avx2};

}  // namespace

namespace detail {
const KernelTable* avx2_table() noexcept { return &kAvx2; }
}  // namespace detail

}  // namespace cayley::kernels
