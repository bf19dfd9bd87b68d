#pragma once

// Creation-efficiency statistics for single NVs and NV pairs.

#include <cmath>
#include <string>

#include "nvpair/errors.hpp"

namespace nvpair::yield {

// Pairs with identical NV orientation cannot be resolved: one in four.
inline constexpr double kUnresolvableFraction = 0.25;

// 68.27 % one-sided Poisson upper limit for zero observed events.
inline constexpr double kZeroCountUpperLimit = 1.1478745;

struct SurveyCounts {
  double n_single_nv15 = 0;
  double n_pairs_observed = 0;
  double n_nv14 = 0;
  double n_molecules = 0;  // may be a fractional expectation

  void validate() const {
    if (!(n_single_nv15 >= 0) || !(n_pairs_observed >= 0) || !(n_nv14 >= 0) || !(n_molecules >= 0)) {
      throw ParameterError("survey counts must be non-negative");
    }
  }
};

// How the corrected pair count enters the yields. Floor reproduces the
// integer pair counts quoted for the survey (5 observed -> 6).
enum class PairRounding { Exact, Floor };

struct YieldOptions {
  double unresolvable_fraction = kUnresolvableFraction;
  PairRounding rounding = PairRounding::Exact;
};

struct Estimate {
  double value = 0.0;
  double uncertainty = 0.0;
};

struct YieldReport {
  Estimate pair_yield;
  Estimate single_yield;
  double corrected_pairs = 0.0;  // unrounded
  double reported_pairs = 0.0;   // after the rounding mode
  std::string external_uncertainty;
};

inline double correct_pair_count(double observed, double unresolvable_fraction = kUnresolvableFraction) {
  if (!(observed >= 0)) throw ParameterError("observed pair count must be >= 0");
  if (!(unresolvable_fraction >= 0.0 && unresolvable_fraction < 1.0)) {
    throw ParameterError("unresolvable fraction must lie in [0, 1)");
  }
  return observed / (1.0 - unresolvable_fraction);
}

inline double rounded_pairs(double corrected, PairRounding mode) {
  // The epsilon keeps exact integers (3 / 0.75 = 4) from flooring down.
  return mode == PairRounding::Floor ? std::floor(corrected + 1e-9) : corrected;
}

// Poisson estimate k / n with uncertainty sqrt(k) / n.
inline Estimate poisson_fraction(double k, double n) {
  if (!(n > 0.0)) throw ParameterError("number of molecules must be > 0");
  const double u = k > 0.0 ? std::sqrt(k) : kZeroCountUpperLimit;
  return {k / n, u / n};
}

inline Estimate pair_yield(const SurveyCounts& c, const YieldOptions& opt = {}) {
  c.validate();
  if (!(c.n_molecules > 0)) throw ParameterError("pair_yield needs n_molecules > 0");
  const double pairs = rounded_pairs(correct_pair_count(c.n_pairs_observed, opt.unresolvable_fraction), opt.rounding);
  return poisson_fraction(pairs, c.n_molecules);
}

// (singles + 2 pairs) / (2 molecules): every molecule delivers two atoms.
inline Estimate single_yield(const SurveyCounts& c, const YieldOptions& opt = {}) {
  c.validate();
  if (!(c.n_molecules > 0)) throw ParameterError("single_yield needs n_molecules > 0");
  const double pairs = rounded_pairs(correct_pair_count(c.n_pairs_observed, opt.unresolvable_fraction), opt.rounding);
  return poisson_fraction(c.n_single_nv15 + 2.0 * pairs, 2.0 * c.n_molecules);
}

inline YieldReport yield_report(const SurveyCounts& c, const YieldOptions& opt = {}, std::string external = {}) {
  YieldReport r;
  r.corrected_pairs = correct_pair_count(c.n_pairs_observed, opt.unresolvable_fraction);
  r.reported_pairs = rounded_pairs(r.corrected_pairs, opt.rounding);
  r.pair_yield = pair_yield(c, opt);
  r.single_yield = single_yield(c, opt);
  r.external_uncertainty = std::move(external);
  return r;
}

}  // namespace nvpair::yield
