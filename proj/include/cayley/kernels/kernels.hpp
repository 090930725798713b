// kernels.hpp - data-parallel row kernels with runtime ISA selection.
//
// Every kernel has a scalar reference in scalar.cpp. Vector variants (AVX2 on
// x86-64, NEON on AArch64) must agree with it bit for bit; see
// tests/test_kernels.cpp. The active table is chosen once, on first use:
// the CAYLEY_ISA environment variable (scalar|avx2|neon) wins if that ISA is
// usable, otherwise the widest supported ISA is taken.
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

#include "cayley/kernels/component_table.hpp"

namespace cayley::kernels {

enum class Isa { Scalar, Avx2, Neon };

std::string_view isa_name(Isa isa) noexcept;

struct RowComparison {
  std::size_t mismatches = 0;
  std::int32_t max_observed = 0;

  friend bool operator==(const RowComparison&, const RowComparison&) = default;
};

struct AdjacentMatch {
  std::size_t adjacent = 0;   // entries with distance exactly 1
  std::size_t matching = 0;   // of those, entries whose value equals the probe

  friend bool operator==(const AdjacentMatch&, const AdjacentMatch&) = default;
};

// out[v] = sum over the three components of 0 (equal), 1 (different residue
// mod p) or 2 (same residue mod p, different component).
using DistanceRowFn = void (*)(const ComponentView& view, std::size_t source, std::int32_t* out);
using CompareRowsFn = RowComparison (*)(const std::int32_t* expected, const std::int32_t* observed,
                                        std::size_t n);
using AdjacentMatchFn = AdjacentMatch (*)(const std::int32_t* dist_row, const std::int32_t* values,
                                          std::int32_t probe, std::size_t n);

struct KernelTable {
  Isa isa;
  DistanceRowFn distance_row;
  CompareRowsFn compare_rows;
  AdjacentMatchFn adjacent_match;
};

const KernelTable& scalar_table() noexcept;

bool isa_supported(Isa isa) noexcept;

/// Throws Error(OutOfRange) when the ISA is not compiled in or not supported.
const KernelTable& table_for(Isa isa);

const KernelTable& active() noexcept;

// Convenience wrappers over the active table.

void distance_row(const ComponentTable& table, std::size_t source, std::span<std::int32_t> out);

RowComparison compare_rows(std::span<const std::int32_t> expected,
                           std::span<const std::int32_t> observed);

AdjacentMatch adjacent_match(std::span<const std::int32_t> dist_row,
                             std::span<const std::int32_t> values, std::int32_t probe);

namespace detail {
// Defined in the per-ISA translation units.
const KernelTable* avx2_table() noexcept;
const KernelTable* neon_table() noexcept;
}  // namespace detail

}  // namespace cayley::kernels
