#include <doctest.h>

#include <random>

#include "../support.hpp"
#include "duval/errors.hpp"
#include "duval/fundamental_cycle.hpp"

using namespace duval;

namespace {

Cycle cycle_of(std::initializer_list<int> values) {
  std::vector<BigInt> c;
  for (int v : values) c.emplace_back(v);
  return Cycle(std::move(c));
}

bool anti_nef(const Cycle& z, const IntersectionForm& f) {
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (cycle_pairing(z, i, f) > 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("cycle basics") {
  CHECK_THROWS_AS(Cycle({}), ParameterError);
  CHECK_THROWS_AS(cycle_of({1, -1}), ParameterError);
  CHECK(is_reduced(cycle_of({1, 1, 1})));
  CHECK_FALSE(is_reduced(cycle_of({1, 1, 1, 2})));
  CHECK(cycle_of({1, 2, 1, 1}).to_string() == "1 2 1 1");

  const auto a2 = intersection_form(build_dynkin(DynkinType::A, 2));
  CHECK(cycle_pairing(cycle_of({1, 1}), 0, a2) == -1);
  CHECK(cycle_pairing(cycle_of({1}), 0, intersection_form(build_dynkin(DynkinType::A, 1))) == -2);
  const auto d4 = intersection_form(build_dynkin(DynkinType::D, 4));
  CHECK(cycle_pairing(cycle_of({1, 2, 1, 1}), 1, d4) == -1);
}

TEST_CASE("known fundamental cycles in build_dynkin numbering") {
  CHECK(fundamental_cycle(build_dynkin(DynkinType::D, 4)) == cycle_of({1, 2, 1, 1}));
  CHECK(fundamental_cycle(build_dynkin(DynkinType::D, 6)) == cycle_of({1, 2, 2, 2, 1, 1}));
  CHECK(fundamental_cycle(build_dynkin(DynkinType::E, 6)) == cycle_of({1, 2, 3, 2, 1, 2}));
  CHECK(fundamental_cycle(build_dynkin(DynkinType::E, 7)) == cycle_of({2, 3, 4, 3, 2, 1, 2}));
  CHECK(fundamental_cycle(build_dynkin(DynkinType::E, 8)) == cycle_of({2, 4, 6, 5, 4, 3, 2, 3}));
  CHECK(brute_force_fundamental_cycle(build_dynkin(DynkinType::A, 3), 3) == cycle_of({1, 1, 1}));
  CHECK(brute_force_fundamental_cycle(build_dynkin(DynkinType::D, 4), 4) == cycle_of({1, 2, 1, 1}));
  CHECK(brute_force_fundamental_cycle(build_dynkin(DynkinType::A, 1), 1) == cycle_of({1}));
  CHECK_THROWS_AS(brute_force_fundamental_cycle(build_dynkin(DynkinType::D, 4), 1), OracleError);
}

TEST_CASE("reducedness across series") {
  for (int n = 1; n <= 12; ++n) CHECK(is_reduced(fundamental_cycle(build_dynkin(DynkinType::A, n))));
  for (int n = 4; n <= 10; ++n) CHECK_FALSE(is_reduced(fundamental_cycle(build_dynkin(DynkinType::D, n))));
  for (int n = 6; n <= 8; ++n) CHECK_FALSE(is_reduced(fundamental_cycle(build_dynkin(DynkinType::E, n))));
}

TEST_CASE("Laufer agrees with the exhaustive oracle up to 6 vertices") {
  for (const auto& label : testing::ade_labels(6)) {
    CAPTURE(label.to_string());
    const DualGraph g = build_dynkin(label.type, label.index);
    CHECK(fundamental_cycle(g) == brute_force_fundamental_cycle(g, 6));
  }
}

TEST_CASE("property: output is anti-nef and minimal") {
  for (const auto& label : testing::ade_labels(6)) {
    const DualGraph g = build_dynkin(label.type, label.index);
    const auto f = intersection_form(g);
    const Cycle z = fundamental_cycle(g);
    CHECK(anti_nef(z, f));
    for (std::size_t i = 0; i < z.size(); ++i) {
      if (z[i] == 1) continue;
      auto smaller = z.coefficients();
      smaller[i] -= 1;
      CHECK_FALSE(anti_nef(Cycle(smaller), f));
    }
  }
}

TEST_CASE("property: random violator choices give the same cycle") {
  std::mt19937_64 rng(31);
  for (const auto& label : testing::ade_labels(8)) {
    const DualGraph g = build_dynkin(label.type, label.index);
    const Cycle reference = fundamental_cycle(g);
    for (int trial = 0; trial < 20; ++trial) {
      const Cycle z = fundamental_cycle(g, [&](std::span<const std::size_t> violating) {
        std::uniform_int_distribution<std::size_t> pick(0, violating.size() - 1);
        return violating[pick(rng)];
      });
      CHECK(z == reference);
    }
  }
}

TEST_CASE("non-definite and non-ADE graphs") {
  const DualGraph zero_weight_cycle({-1, -1}, {{0, 1, 1}});
  CHECK_THROWS_AS(fundamental_cycle(zero_weight_cycle), NotNegativeDefiniteError);
  const DualGraph chain({-2, -3, -2}, {{0, 1, 1}, {1, 2, 1}});
  CHECK(fundamental_cycle(chain) == cycle_of({1, 1, 1}));
  const DualGraph heavy({-2, -2, -2}, {{0, 1, 1}, {1, 2, 1}});
  CHECK(fundamental_cycle(heavy) == brute_force_fundamental_cycle(heavy, 3));
  const DualGraph star({-5, -2, -2, -2, -2}, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {0, 4, 1}});
  CHECK(fundamental_cycle(star) == brute_force_fundamental_cycle(star, 4));
  CHECK_THROWS_AS(fundamental_cycle(zero_weight_cycle, [](std::span<const std::size_t> v) { return v[0]; }),
                  NotNegativeDefiniteError);
}
