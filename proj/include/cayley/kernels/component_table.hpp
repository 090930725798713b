#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cayley/group.hpp"

namespace cayley::kernels {

/// Read-only struct-of-arrays view consumed by the row kernels. For every
/// vertex: its three CRT components and their residues modulo the primes.
struct ComponentView {
  const std::int32_t* a = nullptr;
  const std::int32_t* b = nullptr;
  const std::int32_t* c = nullptr;
  const std::int32_t* ra = nullptr;
  const std::int32_t* rb = nullptr;
  const std::int32_t* rc = nullptr;
  std::size_t n = 0;
};

/// Per-vertex component arrays for one triple. Requires n < 2^31.
class ComponentTable {
public:
  explicit ComponentTable(const PrimeTriple& t);

  std::size_t size() const noexcept { return a_.size(); }
  ComponentView view() const noexcept {
    return {a_.data(), b_.data(), c_.data(), ra_.data(), rb_.data(), rc_.data(), a_.size()};
  }

private:
  std::vector<std::int32_t> a_, b_, c_, ra_, rb_, rc_;
};

}  // namespace cayley::kernels
