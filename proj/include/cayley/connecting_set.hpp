#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "cayley/group.hpp"

namespace cayley {

/// Order classes of connectors: elements of order alpha^2, beta^2, gamma^2.
enum class OrderClass : std::uint8_t { Alpha = 0, Beta = 1, Gamma = 2 };

/// The connecting set C: all elements whose order is alpha^2, beta^2 or gamma^2.
/// Immutable after construction.
struct ConnectingSet {
  std::vector<Exponent> members;                    // ascending
  std::array<std::vector<Exponent>, 3> by_class;    // ascending, keyed by OrderClass
  std::int64_t size() const noexcept { return static_cast<std::int64_t>(members.size()); }
};

/// Builds C from the three generator families k*beta^2 gamma^2 (alpha !| k), ...
ConnectingSet enumerate_c(const PrimeTriple& t);

/// alpha^2 + beta^2 + gamma^2 - alpha - beta - gamma.
std::int64_t c_size_formula(const PrimeTriple& t) noexcept;

/// O(1) membership through the CRT components: m is a connector iff two
/// components vanish and the third is not divisible by its prime.
bool is_connector(Exponent m, const PrimeTriple& t);

/// Same test without range checking, for inner loops. m must lie in [0, n).
inline bool is_connector_unchecked(Exponent m, const PrimeTriple& t) noexcept {
  const std::int64_t a = m % t.mod_a();
  const std::int64_t b = m % t.mod_b();
  const std::int64_t c = m % t.mod_c();
  const int zeros = (a == 0) + (b == 0) + (c == 0);
  if (zeros != 2) return false;
  if (a != 0) return a % t.alpha() != 0;
  if (b != 0) return b % t.beta() != 0;
  return c % t.gamma() != 0;
}

}  // namespace cayley
