#include <catch_amalgamated.hpp>

#include <cmath>

#include "nvpair/implant.hpp"
#include "nvpair/yield.hpp"

using namespace nvpair;
using namespace nvpair::yield;
using Catch::Approx;

namespace {
const SurveyCounts kCoImplanted{100, 5, 10, 156};
const SurveyCounts kN2Only{62, 1, 0, 156};
const YieldOptions kFloor{kUnresolvableFraction, PairRounding::Floor};
}  // namespace

TEST_CASE("pair-count correction") {
  CHECK(correct_pair_count(0) == 0.0);
  CHECK(correct_pair_count(3, 0.25) == 4.0);
  CHECK(correct_pair_count(5) == Approx(20.0 / 3.0));
  CHECK(rounded_pairs(correct_pair_count(5), PairRounding::Floor) == 6.0);
  CHECK(rounded_pairs(correct_pair_count(3), PairRounding::Floor) == 4.0);
  CHECK_THROWS_AS(correct_pair_count(1, 1.0), ParameterError);
  CHECK_THROWS_AS(correct_pair_count(1, -0.1), ParameterError);
  CHECK_THROWS_AS(correct_pair_count(-1), ParameterError);
}

TEST_CASE("corrected pairs never fall below the observed count") {
  for (double k : {0.0, 1.0, 5.0, 17.0}) {
    for (double f : {0.0, 0.1, 0.25, 0.9}) {
      const double c = correct_pair_count(k, f);
      CHECK(c >= k);
      if (k > 0) CHECK((c == k) == (f == 0.0));
    }
  }
}

TEST_CASE("pair yield per implanted molecule") {
  const double n = implant::molecules_in_area(2.5e7, 625.0);
  CHECK(pair_yield({100, 5, 10, n}).value == Approx(0.0427).margin(5e-4));
  CHECK(pair_yield({62, 1, 0, n}).value == Approx(0.0085).margin(5e-5));
  CHECK(pair_yield(kCoImplanted, kFloor).value == Approx(6.0 / 156.0));
  const auto zero = pair_yield({10, 0, 0, n});
  CHECK(zero.value == 0.0);
  CHECK(zero.uncertainty == Approx(kZeroCountUpperLimit / n));
  CHECK(zero.uncertainty > 0.0);
  const auto e = pair_yield({0, 4, 0, 100});
  CHECK(e.uncertainty == Approx(std::sqrt(4.0 / 0.75) / 100));
}

TEST_CASE("single yield counts pair members as two centres") {
  const auto co = single_yield(kCoImplanted, kFloor);
  const auto n2 = single_yield(kN2Only, kFloor);
  CHECK(co.value == Approx(112.0 / 312.0).epsilon(1e-14));
  CHECK(n2.value == Approx(64.0 / 312.0).epsilon(1e-14));
  CHECK(co.value == Approx(0.359).margin(5e-4));
  CHECK(n2.value == Approx(0.205).margin(5e-4));
  CHECK(co.uncertainty == Approx(std::sqrt(112.0) / 312.0));
  CHECK(single_yield({0, 0, 0, 156}).value == 0.0);
}

TEST_CASE("yields need molecules and non-negative counts") {
  CHECK_THROWS_AS(pair_yield({1, 1, 0, 0}), ParameterError);
  CHECK_THROWS_AS(single_yield({1, 1, 0, 0}), ParameterError);
  CHECK_THROWS_AS(single_yield({-1, 1, 0, 10}), ParameterError);
  CHECK_THROWS_AS(pair_yield({1, -1, 0, 10}), ParameterError);
  CHECK_THROWS_AS(yield_report({1, 1, -2, 10}), ParameterError);
}

TEST_CASE("yields are homogeneous of degree zero") {
  for (double k : {0.5, 2.0, 10.0}) {
    const SurveyCounts scaled{100 * k, 5 * k, 10 * k, 156 * k};
    CHECK(pair_yield(scaled).value == Approx(pair_yield(kCoImplanted).value).epsilon(1e-14));
    CHECK(single_yield(scaled).value == Approx(single_yield(kCoImplanted).value).epsilon(1e-14));
  }
}

TEST_CASE("co-implantation improves both yields") {
  const double single_ratio = single_yield(kCoImplanted, kFloor).value / single_yield(kN2Only, kFloor).value;
  CHECK(single_ratio == Approx(1.75));
  CHECK(pair_yield(kCoImplanted).value / pair_yield(kN2Only).value == Approx(5.0));
  // Floor moves 6.67 -> 6 but 1.33 -> 1, so the rounded ratio is 6.
  CHECK(pair_yield(kCoImplanted, kFloor).value / pair_yield(kN2Only, kFloor).value == Approx(6.0));
}

TEST_CASE("yield report keeps the unrounded count") {
  const auto r = yield_report(kCoImplanted, kFloor, "single 0.09");
  CHECK(r.corrected_pairs == Approx(20.0 / 3.0));
  CHECK(r.reported_pairs == 6.0);
  CHECK(r.external_uncertainty == "single 0.09");
  CHECK(r.pair_yield.value >= 0.0);
  CHECK(r.pair_yield.value <= 1.0);
  CHECK(r.single_yield.value <= 1.0);
}
