// Scalar reference kernels.
#include <algorithm>

#include "cayley/kernels/kernels.hpp"

namespace cayley::kernels {

namespace {

inline std::int32_t component_cost(std::int32_t x, std::int32_t y, std::int32_t rx, std::int32_t ry) {
  if (x == y) return 0;
  return rx == ry ? 2 : 1;
}

void distance_row_scalar(const ComponentView& v, std::size_t s, std::int32_t* out) {
  const std::int32_t sa = v.a[s], sb = v.b[s], sc = v.c[s];
  const std::int32_t sra = v.ra[s], srb = v.rb[s], src = v.rc[s];
  for (std::size_t i = 0; i < v.n; ++i) {
    out[i] = component_cost(v.a[i], sa, v.ra[i], sra) + component_cost(v.b[i], sb, v.rb[i], srb) +
             component_cost(v.c[i], sc, v.rc[i], src);
  }
}

RowComparison compare_rows_scalar(const std::int32_t* expected, const std::int32_t* observed,
                                  std::size_t n) {
  RowComparison r;
  for (std::size_t i = 0; i < n; ++i) {
    r.mismatches += expected[i] != observed[i];
    r.max_observed = std::max(r.max_observed, observed[i]);
  }
  return r;
}

AdjacentMatch adjacent_match_scalar(const std::int32_t* row, const std::int32_t* values,
                                    std::int32_t probe, std::size_t n) {
  AdjacentMatch m;
  for (std::size_t i = 0; i < n; ++i) {
    if (row[i] != 1) continue;
    ++m.adjacent;
    m.matching += values[i] == probe;
  }
  return m;
}

constexpr KernelTable kScalar{Isa::Scalar, distance_row_scalar, compare_rows_scalar,
                              adjacent_match_scalar};

}  // namespace

const KernelTable& scalar_table() noexcept { return kScalar; }

}  // namespace cayley::kernels
