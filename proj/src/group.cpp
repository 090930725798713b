#include "cayley/group.hpp"

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

namespace cayley {

__extension__ using i128 = __int128;

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonPrime: return "NonPrime";
    case ErrorCode::NotDistinct: return "NotDistinct";
    case ErrorCode::NotAscending: return "NotAscending";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::ComponentOutOfRange: return "ComponentOutOfRange";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::SinkFailure: return "SinkFailure";
    case ErrorCode::BadConfig: return "BadConfig";
  }
  return "Unknown";
}

bool is_prime(std::int64_t x) noexcept {
  if (x < 2) return false;
  if (x < 4) return true;
  if (x % 2 == 0) return false;
  for (std::int64_t d = 3; d <= x / d; d += 2) {
    if (x % d == 0) return false;
  }
  return true;
}

PrimeTriple PrimeTriple::make(std::int64_t alpha, std::int64_t beta, std::int64_t gamma) {
  for (std::int64_t p : {alpha, beta, gamma}) {
    if (!is_prime(p)) throw Error(ErrorCode::NonPrime, std::to_string(p) + " is not prime");
  }
  if (alpha == beta || beta == gamma || alpha == gamma) {
    throw Error(ErrorCode::NotDistinct, "primes must be pairwise distinct");
  }
  if (!(alpha < beta && beta < gamma)) {
    throw Error(ErrorCode::NotAscending, "primes must satisfy alpha < beta < gamma");
  }

  PrimeTriple t;
  t.p_ = {alpha, beta, gamma};
  std::int64_t n = 1;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::int64_t p = t.p_[i];
    if (__builtin_mul_overflow(p, p, &t.m_[i]) || __builtin_mul_overflow(n, t.m_[i], &n)) {
      throw Error(ErrorCode::Overflow, "group order exceeds 64-bit range");
    }
  }
  t.n_ = n;
  return t;
}

std::string PrimeTriple::to_string() const {
  return "(" + std::to_string(p_[0]) + "," + std::to_string(p_[1]) + "," + std::to_string(p_[2]) + ")";
}

namespace {

void check_exponent(Exponent k, const PrimeTriple& t) {
  if (k < 0 || k >= t.n()) {
    throw Error(ErrorCode::OutOfRange,
                "exponent " + std::to_string(k) + " outside [0," + std::to_string(t.n()) + ")");
  }
}

// (a * b) mod m without overflow; a, b in [0, m).
std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>(static_cast<i128>(a) * b % m);
}

}  // namespace

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  // extended Euclid on (a mod m, m)
  std::int64_t old_r = mod_floor(a, m), r = m;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
  }
  if (old_r != 1) throw Error(ErrorCode::OutOfRange, "value not invertible");
  return mod_floor(old_s, m);
}

GroupElement make_element(Exponent k, const PrimeTriple& t) {
  return {k, crt_components(k, t)};
}

std::int64_t element_order(Exponent k, const PrimeTriple& t) {
  check_exponent(k, t);
  return t.n() / std::gcd(t.n(), k);
}

Components crt_components(Exponent k, const PrimeTriple& t) {
  check_exponent(k, t);
  return {k % t.mod_a(), k % t.mod_b(), k % t.mod_c()};
}

Exponent crt_combine(const Components& comps, const PrimeTriple& t) {
  const std::array<std::int64_t, 3> r{comps.a, comps.b, comps.c};
  const auto& m = t.moduli();
  std::int64_t k = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    if (r[i] < 0 || r[i] >= m[i]) {
      throw Error(ErrorCode::ComponentOutOfRange,
                  "component " + std::to_string(r[i]) + " outside [0," + std::to_string(m[i]) + ")");
    }
    const std::int64_t cofactor = t.n() / m[i];
    const std::int64_t basis = mul_mod(cofactor, mod_inverse(cofactor % m[i], m[i]), t.n());
    k = (k + mul_mod(basis, r[i], t.n())) % t.n();
  }
  return k;
}

BezoutWitness bezout_witness(const PrimeTriple& t) {
  const std::int64_t P = t.mod_b() * t.mod_c();
  const std::int64_t Q = t.mod_a() * t.mod_c();
  const std::int64_t R = t.mod_a() * t.mod_b();
  const std::int64_t u = mod_inverse(P % t.mod_a(), t.mod_a());
  const std::int64_t v0 = mod_inverse(Q % t.mod_b(), t.mod_b());

  std::vector<std::int64_t> candidates;
  for (std::int64_t j = -2; j <= 2; ++j) candidates.push_back(v0 + j * t.mod_b());
  std::sort(candidates.begin(), candidates.end(), [](std::int64_t x, std::int64_t y) {
    const auto ax = x < 0 ? -x : x;
    const auto ay = y < 0 ? -y : y;
    return ax != ay ? ax < ay : x > y;
  });

  for (std::int64_t v : candidates) {
    const i128 rest = static_cast<i128>(1) - static_cast<i128>(u) * P -
                          static_cast<i128>(v) * Q;
    if (rest % R != 0) continue;
    const auto w = static_cast<std::int64_t>(rest / R);
    if ((w < 0 ? -w : w) < t.mod_c()) return {u, v, w};
  }
  // unreachable for a valid triple: v in (-beta^2, 0] always bounds |w|
  throw Error(ErrorCode::Overflow, "no bounded Bezout witness");
}

bool bezout_identity_holds(const BezoutWitness& w, const PrimeTriple& t) {
  const i128 P = static_cast<i128>(t.mod_b()) * t.mod_c();
  const i128 Q = static_cast<i128>(t.mod_a()) * t.mod_c();
  const i128 R = static_cast<i128>(t.mod_a()) * t.mod_b();
  return w.u * P + w.v * Q + w.w * R == 1;
}

Exponent replay_bezout_word(const BezoutWitness& w, const PrimeTriple& t) {
  const std::int64_t n = t.n();
  const std::array<std::pair<std::int64_t, std::int64_t>, 3> letters{{
      {w.u, t.mod_b() * t.mod_c()},
      {w.v, t.mod_a() * t.mod_c()},
      {w.w, t.mod_a() * t.mod_b()},
  }};
  Exponent at = 0;
  for (auto [count, gen] : letters) {
    const std::int64_t step = count >= 0 ? gen % n : n - gen % n;
    for (std::int64_t i = 0; i < (count < 0 ? -count : count); ++i) at = (at + step) % n;
  }
  return at;
}

}  // namespace cayley
