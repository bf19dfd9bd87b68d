#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <vector>

#include "nvpair/coupling.hpp"
#include "nvpair/implant.hpp"
#include "oracles/quadrature.hpp"

using namespace nvpair;
using namespace nvpair::coupling;
using Catch::Approx;

TEST_CASE("dipolar constant arithmetic") {
  CHECK(dipolar_constant(10.0) == Approx(52.0).epsilon(1e-12));
  CHECK(dipolar_constant(20.0) == Approx(6.5).epsilon(1e-12));
  CHECK_THROWS_AS(dipolar_constant(0.0), DomainError);
  CHECK_THROWS_AS(dipolar_constant(-1.0), DomainError);
  CHECK_THROWS_AS(coupling_frequency(0.0), DomainError);
  CHECK_THROWS_AS(dipolar_constant(10.0, DipoleConstants{0.0}), ParameterError);
}

TEST_CASE("spherical-average factor matches quadrature") {
  const double q = oracle::spherical_average_factor();
  CHECK(std::abs(kSphericalAverageFactor - q) < 1e-10);
  CHECK(std::abs(angular_factor(AngularModel::spherical_average()) - q) < 1e-10);
}

TEST_CASE("angular models") {
  const double magic = std::acos(1.0 / std::sqrt(3.0));
  for (double r : {3.0, 11.0, 40.0}) {
    CHECK(coupling_frequency(r, AngularModel::fixed_angle(magic)) == Approx(0.0).margin(1e-12));
  }
  CHECK(coupling_frequency(11.0) == Approx(45.1).margin(0.05));
  CHECK(coupling_frequency(11.0, AngularModel::fixed_angle(std::numbers::pi / 2)) == Approx(58.6).margin(0.1));
  CHECK(coupling_frequency(10.0, AngularModel::maximum()) == Approx(3.0 * 52.0).epsilon(1e-12));
  CHECK(coupling_frequency(10.0, AngularModel::fixed_angle(0.0)) == Approx(3.0 * 52.0).epsilon(1e-12));
  CHECK_THROWS_AS(AngularModel::fixed_angle(-0.1), ParameterError);
  CHECK_THROWS_AS(AngularModel::fixed_angle(4.0), ParameterError);
}

TEST_CASE("coupling scales as inverse cube for every model") {
  const std::vector<AngularModel> models{AngularModel::spherical_average(), AngularModel::maximum(),
                                         AngularModel::fixed_angle(0.3), AngularModel::fixed_angle(2.0)};
  for (const auto& m : models) {
    for (double r : {0.5, 4.0, 11.0, 27.0}) {
      CHECK(coupling_frequency(2 * r, m) == Approx(coupling_frequency(r, m) / 8.0).epsilon(1e-13));
      CHECK(coupling_frequency(r, AngularModel::maximum()) >= coupling_frequency(r, AngularModel::spherical_average()));
      CHECK(coupling_frequency(r, AngularModel::spherical_average()) >= 0.0);
    }
  }
}

TEST_CASE("entanglement fidelity values") {
  const double f59 = entanglement_fidelity(59.0, 0.1);
  CHECK(f59 > 0.97);
  CHECK(f59 == Approx(0.9717).margin(1e-4));
  CHECK(entanglement_fidelity(55.0, 0.65) > 0.999);
  CHECK(entanglement_fidelity(1e9, 1e3) == 1.0);
  CHECK_THROWS_AS(entanglement_fidelity(0.0, 1.0), ParameterError);
  CHECK_THROWS_AS(entanglement_fidelity(1.0, -1.0), ParameterError);
}

TEST_CASE("entanglement fidelity is monotone and depends on the product only") {
  for (double nu : {1.0, 10.0, 55.0}) {
    for (double t2 : {0.05, 0.1, 0.65}) {
      const double f = entanglement_fidelity(nu, t2);
      CHECK(f > 0.0);
      CHECK(f <= 1.0);
      CHECK(entanglement_fidelity(nu * 1.1, t2) >= f);
      CHECK(entanglement_fidelity(nu, t2 * 1.1) >= f);
      for (double k : {0.1, 3.0, 17.0}) CHECK(entanglement_fidelity(nu * k, t2 / k) == Approx(f).epsilon(1e-12));
    }
  }
}

TEST_CASE("figure of merit") {
  CHECK(figure_of_merit(0.65, 55.0) == Approx(35.75).epsilon(1e-14));
  CHECK(figure_of_merit(1.0, 1.0) == 1.0);
  CHECK(figure_of_merit(0.1, 0.34) == Approx(0.034).epsilon(1e-14));
  CHECK_THROWS_AS(figure_of_merit(0.0, 1.0), ParameterError);
}

TEST_CASE("fixed separations with the maximum model give a delta distribution") {
  const std::vector<double> r(500, 10.0);
  CouplingOptions opt;
  opt.model = AngularModel::maximum();
  const auto h = coupling_distribution(r, opt, BinSpec{0, 200, 100});
  const auto bin = h.locate(coupling_frequency(10.0, AngularModel::maximum()));
  CHECK(h.counts[bin] == 500);
  CHECK(h.in_range() == 500);
}

TEST_CASE("per-sample angles and the averaged factor agree in the mean") {
  const std::size_t n = 400'000;
  const std::vector<double> r(n, 11.0);
  CouplingOptions per;
  per.seed = 17;
  CouplingOptions avg = per;
  avg.spherical_mode = SphericalMode::AveragedFactor;
  const auto a = sample_couplings(r, per);
  const auto b = sample_couplings(r, avg);
  double s = 0, s2 = 0;
  for (double v : a) {
    s += v;
    s2 += v * v;
  }
  const double mean = s / n;
  const double sd = std::sqrt(s2 / n - mean * mean);
  CHECK(b.front() == Approx(coupling_frequency(11.0)).epsilon(1e-15));
  CHECK(std::abs(mean - b.front()) < 3.0 * sd / std::sqrt(n));
}

TEST_CASE("coupling samples are deterministic across worker counts") {
  const auto r = implant::sample_separations(implant::StragglingParams{}, 100'000, 5, 1);
  CouplingOptions opt;
  opt.seed = 5;
  CHECK(sample_couplings(r, opt, 1) == sample_couplings(r, opt, 4));
}

TEST_CASE("coupling distribution input validation and coincident pairs") {
  CouplingOptions opt;
  CHECK_THROWS_AS(sample_couplings(std::vector<double>{}, opt), ParameterError);
  CHECK_THROWS_AS(coupling_distribution(Histogram::empty(BinSpec{}), opt), ParameterError);
  const auto nu = sample_couplings(std::vector<double>{0.0, 10.0}, opt);
  CHECK(std::isinf(nu[0]));
  CHECK(prob_coupling_above(nu, 1e6).value == 0.5);
}

TEST_CASE("coupling distribution from a separation histogram uses bin centres") {
  auto sep = Histogram::empty(BinSpec{0, 30, 60});
  for (int i = 0; i < 10; ++i) sep.add(10.1);
  CouplingOptions opt;
  opt.spherical_mode = SphericalMode::AveragedFactor;
  const auto h = coupling_distribution(sep, opt, BinSpec{0, 200, 400});
  CHECK(h.total == 10);
  CHECK(h.counts[h.locate(coupling_frequency(10.25))] == 10);
}

TEST_CASE("prob_coupling_above is non-increasing in the threshold") {
  const auto r = implant::sample_separations(implant::StragglingParams{}, 50'000, 8, 1);
  CouplingOptions opt;
  opt.seed = 8;
  const auto nu = sample_couplings(r, opt, 1);
  double prev = 1.0;
  for (double thr = 0.0; thr <= 300.0; thr += 5.0) {
    const double p = prob_coupling_above(nu, thr).value;
    CHECK(p <= prev);
    prev = p;
  }
  CHECK_THROWS_AS(prob_coupling_above(std::vector<double>{}, 1.0), ParameterError);
}

TEST_CASE("fidelity map covers the grid") {
  const std::vector<double> t2{0.1, 0.65};
  const std::vector<double> nu{10.0, 55.0, 59.0};
  const auto m = fidelity_map(t2, nu);
  REQUIRE(m.size() == 6);
  for (const auto& p : m) CHECK(p.fidelity == entanglement_fidelity(p.nu_khz, p.t2_ms));
}
