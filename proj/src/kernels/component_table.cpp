#include "cayley/kernels/component_table.hpp"

#include <limits>

namespace cayley::kernels {

ComponentTable::ComponentTable(const PrimeTriple& t) {
  if (t.n() > std::numeric_limits<std::int32_t>::max()) {
    throw Error(ErrorCode::TooLarge, "component table needs n < 2^31");
  }
  const auto n = static_cast<std::size_t>(t.n());
  for (auto* v : {&a_, &b_, &c_, &ra_, &rb_, &rc_}) v->resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto e = static_cast<std::int64_t>(k);
    a_[k] = static_cast<std::int32_t>(e % t.mod_a());
    b_[k] = static_cast<std::int32_t>(e % t.mod_b());
    c_[k] = static_cast<std::int32_t>(e % t.mod_c());
    ra_[k] = static_cast<std::int32_t>(a_[k] % t.alpha());
    rb_[k] = static_cast<std::int32_t>(b_[k] % t.beta());
    rc_[k] = static_cast<std::int32_t>(c_[k] % t.gamma());
  }
}

}  // namespace cayley::kernels
