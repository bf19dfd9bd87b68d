#pragma once

// Secular dipolar coupling between two NV electron spins and the derived
// two-qubit figures (entanglement fidelity, T2 x J).

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <span>
#include <vector>

#include "nvpair/errors.hpp"
#include "nvpair/histogram.hpp"
#include "nvpair/implant.hpp"
#include "nvpair/parallel.hpp"
#include "nvpair/random.hpp"

namespace nvpair::coupling {

// Orientation of the pair axis relative to the static field.
struct AngularModel {
  enum class Kind { SphericalAverage, FixedAngle, Maximum };

  Kind kind = Kind::SphericalAverage;
  double theta = 0.0;  // radians, FixedAngle only

  static AngularModel spherical_average() { return {}; }
  static AngularModel maximum() { return {Kind::Maximum, 0.0}; }
  static AngularModel fixed_angle(double theta) {
    if (!(theta >= 0.0 && theta <= std::numbers::pi)) throw ParameterError("FixedAngle theta must lie in [0, pi]");
    return {Kind::FixedAngle, theta};
  }
};

// How SphericalAverage is applied when mapping separations to couplings.
enum class SphericalMode {
  PerSampleAngle,  // draw cos(theta) uniformly for every pair
  AveragedFactor,  // apply the mean |3cos^2 - 1| to every pair
};

struct DipoleConstants {
  double d_dip_numerator = 5.2e-23;  // kHz m^3

  void validate() const {
    if (!(d_dip_numerator > 0.0)) throw ParameterError("dipolar numerator must be > 0");
  }
};

// Mean of |3u^2 - 1| for u = cos(theta) uniform on [-1, 1]; equals 4 / (3 sqrt 3).
inline constexpr double kSphericalAverageFactor = 4.0 / (3.0 * std::numbers::sqrt3);

inline double angle_factor(double cos_theta) { return std::abs(3.0 * cos_theta * cos_theta - 1.0); }

inline double angular_factor(const AngularModel& model) {
  switch (model.kind) {
    case AngularModel::Kind::SphericalAverage:
      return kSphericalAverageFactor;
    case AngularModel::Kind::FixedAngle:
      return angle_factor(std::cos(model.theta));
    case AngularModel::Kind::Maximum:
      return 2.0;
  }
  return 0.0;
}

// D_dip in kHz for a separation in nm.
inline double dipolar_constant(double r_nm, const DipoleConstants& constants = {}) {
  if (!(r_nm > 0.0)) throw DomainError("dipolar_constant: separation must be > 0");
  constants.validate();
  const double r_m = r_nm * 1e-9;
  return constants.d_dip_numerator / (r_m * r_m * r_m);
}

// nu_dip = 3/2 D_dip(r) * angular factor, in kHz.
inline double coupling_frequency(double r_nm, const AngularModel& model = {},
                                 const DipoleConstants& constants = {}) {
  return 1.5 * dipolar_constant(r_nm, constants) * angular_factor(model);
}

// exp[-(1 / (nu T2))^2] with nu in kHz and T2 in ms (kHz * ms is dimensionless).
inline double entanglement_fidelity(double nu_khz, double t2_ms) {
  if (!(nu_khz > 0.0) || !(t2_ms > 0.0)) throw ParameterError("entanglement_fidelity needs positive nu and T2");
  const double x = 1.0 / (nu_khz * t2_ms);
  return std::exp(-x * x);
}

// T2 x J with T2 in ms and J in kHz.
inline double figure_of_merit(double t2_ms, double nu_khz) {
  if (!(t2_ms > 0.0) || !(nu_khz > 0.0)) throw ParameterError("figure_of_merit needs positive inputs");
  return t2_ms * nu_khz;
}

struct CouplingOptions {
  AngularModel model{};
  DipoleConstants constants{};
  SphericalMode spherical_mode = SphericalMode::PerSampleAngle;
  std::uint64_t seed = 0;
};

// Coupling for the i-th separation sample. The per-sample angle is drawn from
// its own counter stream so the value depends only on (seed, i).
inline double sample_coupling(double r_nm, std::uint64_t index, const CouplingOptions& opt) {
  if (opt.model.kind == AngularModel::Kind::SphericalAverage &&
      opt.spherical_mode == SphericalMode::PerSampleAngle) {
    CounterRng rng(opt.seed, rng_domain::kCouplingAngle, index);
    const double u = 2.0 * rng.uniform() - 1.0;
    return 1.5 * dipolar_constant(r_nm, opt.constants) * angle_factor(u);
  }
  return coupling_frequency(r_nm, opt.model, opt.constants);
}

inline std::vector<double> sample_couplings(std::span<const double> separations_nm, const CouplingOptions& opt,
                                            unsigned workers = default_workers()) {
  if (separations_nm.empty()) throw ParameterError("coupling distribution needs at least one separation");
  opt.constants.validate();
  std::vector<double> out(separations_nm.size());
  for_each_chunk(out.size(), workers, [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      // A coincident pair has unbounded coupling.
      out[i] = separations_nm[i] > 0.0 ? sample_coupling(separations_nm[i], i, opt)
                                       : std::numeric_limits<double>::infinity();
    }
  });
  return out;
}

inline BinSpec default_coupling_bins() { return {0.0, 200.0, 100}; }

// Histogram of couplings (kHz) for raw separation samples.
inline Histogram coupling_distribution(std::span<const double> separations_nm, const CouplingOptions& opt,
                                       const BinSpec& bins = default_coupling_bins(),
                                       unsigned workers = default_workers()) {
  const auto nu = sample_couplings(separations_nm, opt, workers);
  Histogram h = Histogram::empty(bins);
  for (double v : nu) h.add(v);
  return h;
}

// Histogram input: each count is treated as a separation at its bin centre.
// Out-of-range samples carry no position and are dropped.
inline Histogram coupling_distribution(const Histogram& separation_hist, const CouplingOptions& opt,
                                       const BinSpec& bins = default_coupling_bins(),
                                       unsigned workers = default_workers()) {
  std::vector<double> r;
  r.reserve(separation_hist.in_range());
  for (std::size_t i = 0; i < separation_hist.size(); ++i) {
    r.insert(r.end(), separation_hist.counts[i], separation_hist.bin_center(i));
  }
  if (r.empty()) throw ParameterError("coupling distribution: separation histogram is empty");
  return coupling_distribution(r, opt, bins, workers);
}

// P(nu > threshold) over the sampled couplings, with binomial standard error.
inline implant::Probability prob_coupling_above(std::span<const double> couplings_khz, double threshold_khz) {
  if (couplings_khz.empty()) throw ParameterError("prob_coupling_above: no samples");
  std::uint64_t k = 0;
  for (double v : couplings_khz) k += v > threshold_khz;
  const double n = static_cast<double>(couplings_khz.size());
  const double p = static_cast<double>(k) / n;
  return {p, std::sqrt(p * (1.0 - p) / n)};
}

struct FidelityPoint {
  double t2_ms;
  double nu_khz;
  double fidelity;
};

inline std::vector<FidelityPoint> fidelity_map(std::span<const double> t2_ms, std::span<const double> nu_khz) {
  std::vector<FidelityPoint> out;
  out.reserve(t2_ms.size() * nu_khz.size());
  for (double t : t2_ms) {
    for (double nu : nu_khz) out.push_back({t, nu, entanglement_fidelity(nu, t)});
  }
  return out;
}

}  // namespace nvpair::coupling
