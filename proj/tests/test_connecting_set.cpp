#include <doctest.h>

#include "cayley/connecting_set.hpp"
#include "support/brute_force.hpp"

using namespace cayley;

TEST_CASE("connecting set at (2,3,5)") {
  const auto t = make_prime_triple(2, 3, 5);
  const auto c = enumerate_c(t);
  CHECK(c.size() == 28);
  CHECK(c_size_formula(t) == 28);
  CHECK(c.by_class[0] == std::vector<Exponent>{225, 675});
  CHECK(c.by_class[1].size() == 6);
  CHECK(c.by_class[2].size() == 20);
  CHECK(c.members == brute::connectors(2, 3, 5));
  CHECK(std::is_sorted(c.members.begin(), c.members.end()));
}

TEST_CASE("connecting set at (3,5,7)") {
  const auto t = make_prime_triple(3, 5, 7);
  const auto c = enumerate_c(t);
  CHECK(c.size() == 68);
  CHECK(c.members == brute::connectors(3, 5, 7));
}

TEST_CASE("size formula across small triples") {
  for (const auto& p : brute::small_triples(1'000'000)) {
    const auto t = make_prime_triple(p[0], p[1], p[2]);
    const auto c = enumerate_c(t);
    CHECK(c.size() == c_size_formula(t));
    CHECK(c.size() % 2 == 0);
    for (auto m : c.members) CHECK(is_connector(t.n() - m, t));
  }
}

TEST_CASE("membership test") {
  const auto t = make_prime_triple(2, 3, 5);
  const auto ref = brute::connectors(2, 3, 5);
  std::vector<Exponent> scan;
  for (Exponent k = 0; k < t.n(); ++k)
    if (is_connector(k, t)) scan.push_back(k);
  CHECK(scan == ref);
  CHECK_FALSE(is_connector(0, t));
  CHECK(is_connector(450, t) == false);  // order 2, not 4
  CHECK(is_connector(225, t));
  CHECK_THROWS_AS(is_connector(900, t), Error);
}
