#include <doctest.h>

#include <random>

#include "cayley/kernels/kernels.hpp"
#include "cayley/parameters.hpp"

using namespace cayley;
namespace k = cayley::kernels;

namespace {

std::vector<k::Isa> available() {
  std::vector<k::Isa> out;
  for (auto isa : {k::Isa::Avx2, k::Isa::Neon})
    if (k::isa_supported(isa)) out.push_back(isa);
  return out;
}

}  // namespace

TEST_CASE("scalar distance row matches the closed form") {
  for (auto p : {std::array<std::int64_t, 3>{2, 3, 5}, {2, 5, 7}}) {
    const auto t = make_prime_triple(p[0], p[1], p[2]);
    const k::ComponentTable table(t);
    std::vector<std::int32_t> row(table.size());
    for (std::size_t s : {0u, 1u, 30u, 449u}) {
      k::scalar_table().distance_row(table.view(), s, row.data());
      for (Exponent v = 0; v < t.n(); ++v)
        CHECK(row[static_cast<std::size_t>(v)] == closed_form_distance(static_cast<Exponent>(s), v, t));
    }
  }
}

TEST_CASE("scalar table is always available") {
  CHECK(k::isa_supported(k::Isa::Scalar));
  CHECK(k::table_for(k::Isa::Scalar).isa == k::Isa::Scalar);
  CHECK(k::isa_name(k::Isa::Avx2) == "avx2");
  CHECK(k::isa_supported(k::active().isa));
  MESSAGE("active isa: " << k::isa_name(k::active().isa));
}

TEST_CASE("vector kernels agree with scalar") {
  const auto& ref = k::scalar_table();
  const auto isas = available();
  if (isas.empty()) MESSAGE("no vector ISA on this host; equivalence checks skipped");

  std::mt19937_64 rng(42);
  for (auto isa : isas) {
    const auto& vec = k::table_for(isa);
    CAPTURE(k::isa_name(isa));

    // distance rows, including n not a multiple of the vector width
    for (auto p : {std::array<std::int64_t, 3>{2, 3, 5}, {2, 3, 7}, {3, 5, 7}}) {
      const auto t = make_prime_triple(p[0], p[1], p[2]);
      const k::ComponentTable table(t);
      std::vector<std::int32_t> a(table.size()), b(table.size());
      for (int round = 0; round < 20; ++round) {
        const auto s = static_cast<std::size_t>(rng() % table.size());
        ref.distance_row(table.view(), s, a.data());
        vec.distance_row(table.view(), s, b.data());
        CHECK(a == b);
      }
    }

    // row comparison and adjacency matching on random data of odd lengths
    for (std::size_t n : {0u, 1u, 7u, 8u, 9u, 31u, 1000u, 1027u}) {
      std::vector<std::int32_t> x(n), y(n), vals(n);
      for (std::size_t i = 0; i < n; ++i) {
        x[i] = static_cast<std::int32_t>(rng() % 7);
        y[i] = rng() % 5 == 0 ? static_cast<std::int32_t>(rng() % 7) - 1 : x[i];
        vals[i] = static_cast<std::int32_t>(rng() % 4);
      }
      CHECK(ref.compare_rows(x.data(), y.data(), n) == vec.compare_rows(x.data(), y.data(), n));
      for (std::int32_t probe = 0; probe < 4; ++probe)
        CHECK(ref.adjacent_match(x.data(), vals.data(), probe, n) ==
              vec.adjacent_match(x.data(), vals.data(), probe, n));
    }
  }
}

TEST_CASE("compare rows semantics") {
  const std::vector<std::int32_t> e{0, 1, 2, 6, 3};
  const std::vector<std::int32_t> o{0, 1, kUnreachable, 6, 4};
  const auto r = k::compare_rows(e, o);
  CHECK(r.mismatches == 2);
  CHECK(r.max_observed == 6);
  const std::vector<std::int32_t> shorter{0};
  CHECK_THROWS_AS(k::compare_rows(e, shorter), Error);

  const std::vector<std::int32_t> vals{1, 1, 2, 1, 1};
  const auto m = k::adjacent_match(e, vals, 1);
  CHECK(m.adjacent == 1);
  CHECK(m.matching == 1);
}

TEST_CASE("span wrapper checks length") {
  const auto t = make_prime_triple(2, 3, 5);
  const k::ComponentTable table(t);
  std::vector<std::int32_t> row(10);
  CHECK_THROWS_AS(k::distance_row(table, 0, row), Error);
  row.resize(900);
  k::distance_row(table, 0, row);
  CHECK(row[30] == 6);
}
