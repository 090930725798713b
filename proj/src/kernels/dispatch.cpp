#include <cstdlib>
#include <string>

#include "cayley/error.hpp"
#include "cayley/kernels/kernels.hpp"

namespace cayley::kernels {

namespace detail {
#ifndef CAYLEY_HAVE_AVX2
const KernelTable* avx2_table() noexcept { return nullptr; }
#endif
#ifndef CAYLEY_HAVE_NEON
const KernelTable* neon_table() noexcept { return nullptr; }
#endif
}  // namespace detail

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "unknown";
}

bool isa_supported(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(CAYLEY_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::Neon:
      return detail::neon_table() != nullptr;
  }
  return false;
}

const KernelTable& table_for(Isa isa) {
  if (!isa_supported(isa)) {
    throw Error(ErrorCode::OutOfRange, "ISA " + std::string(isa_name(isa)) + " not available");
  }
  switch (isa) {
    case Isa::Avx2: return *detail::avx2_table();
    case Isa::Neon: return *detail::neon_table();
    case Isa::Scalar: break;
  }
  return scalar_table();
}

namespace {

const KernelTable& select() noexcept {
  if (const char* forced = std::getenv("CAYLEY_ISA")) {
    const std::string_view want(forced);
    for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon}) {
      if (want == isa_name(isa) && isa_supported(isa)) return table_for(isa);
    }
  }
  for (Isa isa : {Isa::Avx2, Isa::Neon}) {
    if (isa_supported(isa)) return table_for(isa);
  }
  return scalar_table();
}

}  // namespace

const KernelTable& active() noexcept {
  static const KernelTable& table = select();
  return table;
}

void distance_row(const ComponentTable& table, std::size_t source, std::span<std::int32_t> out) {
  if (out.size() != table.size() || source >= table.size()) {
    throw Error(ErrorCode::LengthMismatch, "distance row size mismatch");
  }
  active().distance_row(table.view(), source, out.data());
}

RowComparison compare_rows(std::span<const std::int32_t> expected,
                           std::span<const std::int32_t> observed) {
  if (expected.size() != observed.size()) {
    throw Error(ErrorCode::LengthMismatch, "row length mismatch");
  }
  return active().compare_rows(expected.data(), observed.data(), expected.size());
}

AdjacentMatch adjacent_match(std::span<const std::int32_t> dist_row,
                             std::span<const std::int32_t> values, std::int32_t probe) {
  if (dist_row.size() != values.size()) {
    throw Error(ErrorCode::LengthMismatch, "row length mismatch");
  }
  return active().adjacent_match(dist_row.data(), values.data(), probe, dist_row.size());
}

}  // namespace cayley::kernels
