// group.hpp - arithmetic of the cyclic group Z_n, n = (alpha*beta*gamma)^2.
//
// Vertices are exponents k in [0, n). The CRT map sends k to its residues
// modulo alpha^2, beta^2 and gamma^2; all graph structure is read off those
// three components.
#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "cayley/error.hpp"

namespace cayley {

using Exponent = std::int64_t;

/// Residues of an exponent modulo (alpha^2, beta^2, gamma^2).
struct Components {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;

  friend bool operator==(const Components&, const Components&) = default;
};

/// A validated triple of distinct primes alpha < beta < gamma.
class PrimeTriple {
public:
  /// Validates and builds the triple; throws Error (NonPrime, NotDistinct,
  /// NotAscending, Overflow).
  static PrimeTriple make(std::int64_t alpha, std::int64_t beta, std::int64_t gamma);

  std::int64_t alpha() const noexcept { return p_[0]; }
  std::int64_t beta() const noexcept { return p_[1]; }
  std::int64_t gamma() const noexcept { return p_[2]; }
  const std::array<std::int64_t, 3>& primes() const noexcept { return p_; }

  std::int64_t mod_a() const noexcept { return m_[0]; }
  std::int64_t mod_b() const noexcept { return m_[1]; }
  std::int64_t mod_c() const noexcept { return m_[2]; }
  const std::array<std::int64_t, 3>& moduli() const noexcept { return m_; }

  /// Group order alpha^2 beta^2 gamma^2.
  std::int64_t n() const noexcept { return n_; }

  std::string to_string() const;

  friend bool operator==(const PrimeTriple&, const PrimeTriple&) = default;

private:
  PrimeTriple() = default;
  std::array<std::int64_t, 3> p_{};
  std::array<std::int64_t, 3> m_{};
  std::int64_t n_ = 0;
};

inline PrimeTriple make_prime_triple(std::int64_t a, std::int64_t b, std::int64_t c) {
  return PrimeTriple::make(a, b, c);
}

/// Deterministic trial-division primality test.
bool is_prime(std::int64_t x) noexcept;

/// Least nonnegative residue of x modulo m (m > 0).
constexpr std::int64_t mod_floor(std::int64_t x, std::int64_t m) noexcept {
  const std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

/// A vertex together with its CRT components.
struct GroupElement {
  Exponent k = 0;
  Components comps;
};

GroupElement make_element(Exponent k, const PrimeTriple& t);

/// n / gcd(n, k); throws OutOfRange unless 0 <= k < n.
std::int64_t element_order(Exponent k, const PrimeTriple& t);

Components crt_components(Exponent k, const PrimeTriple& t);

/// Inverse of crt_components; throws ComponentOutOfRange.
Exponent crt_combine(const Components& comps, const PrimeTriple& t);

/// Integers (u, v, w) with u*beta^2*gamma^2 + v*alpha^2*gamma^2 + w*alpha^2*beta^2 = 1.
struct BezoutWitness {
  std::int64_t u = 0;
  std::int64_t v = 0;
  std::int64_t w = 0;

  friend bool operator==(const BezoutWitness&, const BezoutWitness&) = default;
};

/// Canonical witness: u is the least nonnegative residue, then |v| is
/// minimal subject to |w| < gamma^2 (ties prefer the positive v).
BezoutWitness bezout_witness(const PrimeTriple& t);

/// Exact evaluation of the Bezout combination (128-bit intermediate).
bool bezout_identity_holds(const BezoutWitness& w, const PrimeTriple& t);

/// Exponent reached by the word with |u| copies of +-beta^2 gamma^2, |v| of
/// +-alpha^2 gamma^2 and |w| of +-alpha^2 beta^2; equals 1 for a valid witness.
Exponent replay_bezout_word(const BezoutWitness& w, const PrimeTriple& t);

/// Multiplicative inverse of a modulo m, gcd(a, m) = 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);

}  // namespace cayley
