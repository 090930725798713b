#include "cayley/connecting_set.hpp"

#include <algorithm>

namespace cayley {

ConnectingSet enumerate_c(const PrimeTriple& t) {
  ConnectingSet cs;
  const std::array<std::int64_t, 3> cofactor{
      t.mod_b() * t.mod_c(), t.mod_a() * t.mod_c(), t.mod_a() * t.mod_b()};
  for (std::size_t cls = 0; cls < 3; ++cls) {
    const std::int64_t p = t.primes()[cls];
    auto& out = cs.by_class[cls];
    for (std::int64_t k = 1; k < p * p; ++k) {
      if (k % p == 0) continue;
      out.push_back(k * cofactor[cls] % t.n());
    }
    std::sort(out.begin(), out.end());
    cs.members.insert(cs.members.end(), out.begin(), out.end());
  }
  std::sort(cs.members.begin(), cs.members.end());
  return cs;
}

std::int64_t c_size_formula(const PrimeTriple& t) noexcept {
  return t.mod_a() + t.mod_b() + t.mod_c() - t.alpha() - t.beta() - t.gamma();
}

bool is_connector(Exponent m, const PrimeTriple& t) {
  if (m < 0 || m >= t.n()) {
    throw Error(ErrorCode::OutOfRange, "exponent " + std::to_string(m) + " outside group");
  }
  return is_connector_unchecked(m, t);
}

}  // namespace cayley
