#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "nvpair/analysis/spectrum.hpp"
#include "nvpair/errors.hpp"

namespace nvpair::analysis {

struct Peak {
  double frequency_khz = 0.0;
  double power = 0.0;        // interpolated height
  double area = 0.0;         // power integrated between the flanking minima (power * kHz)
  double width_khz = 0.0;    // extent of the integration region
  double uncertainty_khz = 0.0;
  std::size_t bin = 0;
};

struct PeakSet {
  std::vector<Peak> peaks;  // sorted by frequency
  double noise_floor = 0.0;  // median spectral power
  double bin_width_khz = 0.0;

  std::size_t size() const { return peaks.size(); }
};

struct PeakOptions {
  double min_relative_power = 0.05;  // relative to the strongest bin
  double min_separation_khz = 0.0;   // weaker peaks closer than this to a kept one are dropped
  double min_frequency_khz = 0.0;
};

// Local maxima (interior bins) above threshold, refined by a parabola through
// the peak bin and its neighbours.
inline PeakSet find_peaks(const Spectrum& s, const PeakOptions& opt = {}) {
  PeakSet out;
  out.bin_width_khz = s.bin_width_khz();
  if (s.size() < 3) return out;
  {
    std::vector<double> sorted(s.power);
    std::nth_element(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(sorted.size() / 2), sorted.end());
    out.noise_floor = sorted[sorted.size() / 2];
  }
  const double max_power = *std::max_element(s.power.begin(), s.power.end());
  if (!(max_power > 0.0)) return out;
  const double threshold = opt.min_relative_power * max_power;
  const double bw = out.bin_width_khz;
  const auto& p = s.power;

  std::vector<Peak> candidates;
  for (std::size_t k = 1; k + 1 < s.size(); ++k) {
    if (!(p[k] > p[k - 1] && p[k] >= p[k + 1]) || p[k] < threshold || p[k] <= out.noise_floor) continue;
    if (s.freqs_khz[k] < opt.min_frequency_khz) continue;
    const double denom = p[k - 1] - 2.0 * p[k] + p[k + 1];
    const double offset = denom < 0.0 ? std::clamp(0.5 * (p[k - 1] - p[k + 1]) / denom, -0.5, 0.5) : 0.0;
    Peak pk;
    pk.bin = k;
    pk.frequency_khz = s.freqs_khz[k] + offset * bw;
    pk.power = p[k] - 0.25 * (p[k - 1] - p[k + 1]) * offset;
    // Half a bin for discretisation, plus the vertex shift the parabola had to make.
    pk.uncertainty_khz = std::hypot(0.5 * bw, offset * bw);
    std::size_t lo = k, hi = k;
    while (lo > 0 && p[lo - 1] < p[lo]) --lo;
    while (hi + 1 < s.size() && p[hi + 1] < p[hi]) ++hi;
    pk.area = std::accumulate(p.begin() + static_cast<std::ptrdiff_t>(lo), p.begin() + static_cast<std::ptrdiff_t>(hi) + 1, 0.0) * bw;
    pk.width_khz = static_cast<double>(hi - lo + 1) * bw;
    candidates.push_back(pk);
  }

  std::stable_sort(candidates.begin(), candidates.end(), [](const Peak& a, const Peak& b) { return a.power > b.power; });
  for (const auto& c : candidates) {
    const bool crowded = std::any_of(out.peaks.begin(), out.peaks.end(), [&](const Peak& kept) {
      return std::abs(kept.frequency_khz - c.frequency_khz) < opt.min_separation_khz;
    });
    if (!crowded) out.peaks.push_back(c);
  }
  std::sort(out.peaks.begin(), out.peaks.end(),
            [](const Peak& a, const Peak& b) { return a.frequency_khz < b.frequency_khz; });
  return out;
}

struct MatchedPair {
  std::size_t reference;
  std::size_t shifted;
  double shift_khz;  // shifted - reference
};

struct CouplingShift {
  double shift_khz = 0.0;  // mean |shift| over matched peaks
  double uncertainty_khz = 0.0;
  std::vector<MatchedPair> pairs;
};

// Greedy nearest-frequency matching: candidate pairs within `max_distance_khz`
// are taken shortest first. Both sets must pair up completely.
inline std::vector<MatchedPair> match_peaks(const PeakSet& a, const PeakSet& b,
                                            double max_distance_khz = std::numeric_limits<double>::infinity()) {
  struct Candidate {
    double distance;
    std::size_t i, j;
  };
  std::vector<Candidate> cand;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      const double d = std::abs(b.peaks[j].frequency_khz - a.peaks[i].frequency_khz);
      if (d <= max_distance_khz) cand.push_back({d, i, j});
    }
  }
  std::stable_sort(cand.begin(), cand.end(), [](const Candidate& x, const Candidate& y) { return x.distance < y.distance; });
  std::vector<bool> used_a(a.size(), false), used_b(b.size(), false);
  std::vector<MatchedPair> pairs;
  for (const auto& c : cand) {
    if (used_a[c.i] || used_b[c.j]) continue;
    used_a[c.i] = used_b[c.j] = true;
    pairs.push_back({c.i, c.j, b.peaks[c.j].frequency_khz - a.peaks[c.i].frequency_khz});
  }
  std::sort(pairs.begin(), pairs.end(), [](const MatchedPair& x, const MatchedPair& y) { return x.reference < y.reference; });
  return pairs;
}

// Frequency shift between the reference and emitter-flipped spectra. Peaks
// on either side of the carrier move in opposite directions in a one-sided
// spectrum, so magnitudes are averaged.
inline CouplingShift extract_coupling(const PeakSet& reference, const PeakSet& flipped,
                                      double max_distance_khz = std::numeric_limits<double>::infinity()) {
  if (reference.size() == 0) throw AnalysisError("extract_coupling: no peaks in the reference spectrum");
  if (reference.size() != flipped.size()) {
    throw AnalysisError("extract_coupling: peak counts differ (" + std::to_string(reference.size()) + " vs " +
                        std::to_string(flipped.size()) + ")");
  }
  CouplingShift out;
  out.pairs = match_peaks(reference, flipped, max_distance_khz);
  if (out.pairs.size() != reference.size()) throw AnalysisError("extract_coupling: some peaks could not be matched");
  double var = 0.0;
  for (const auto& m : out.pairs) {
    out.shift_khz += std::abs(m.shift_khz);
    const double ur = reference.peaks[m.reference].uncertainty_khz;
    const double uf = flipped.peaks[m.shifted].uncertainty_khz;
    var += ur * ur + uf * uf;
  }
  const double n = static_cast<double>(out.pairs.size());
  out.shift_khz /= n;
  out.uncertainty_khz = std::sqrt(var) / n;
  return out;
}

inline CouplingShift extract_coupling(const Spectrum& reference, const Spectrum& flipped, const PeakOptions& opt = {},
                                      double max_distance_khz = std::numeric_limits<double>::infinity()) {
  if (reference.size() != flipped.size() ||
      (reference.size() > 1 && std::abs(reference.bin_width_khz() - flipped.bin_width_khz()) >
                                   1e-9 * reference.bin_width_khz())) {
    throw AnalysisError("extract_coupling: spectra are not on the same frequency grid");
  }
  return extract_coupling(find_peaks(reference, opt), find_peaks(flipped, opt), max_distance_khz);
}

// Splittings between adjacent peaks, in frequency order.
inline std::vector<double> adjacent_splittings(const PeakSet& peaks) {
  std::vector<double> out;
  for (std::size_t i = 1; i < peaks.size(); ++i) out.push_back(peaks.peaks[i].frequency_khz - peaks.peaks[i - 1].frequency_khz);
  return out;
}

// Marks peaks that sit `expected_shift_khz` (within half the shift) from a
// stronger line as secondary; the rest are main lines.
inline std::vector<bool> secondary_mask(const PeakSet& peaks, double expected_shift_khz) {
  if (!(expected_shift_khz > 0.0)) throw ParameterError("expected shift must be > 0");
  std::vector<std::size_t> order(peaks.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return peaks.peaks[a].power > peaks.peaks[b].power; });
  const double gate = 0.5 * expected_shift_khz;
  std::vector<bool> secondary(peaks.size(), false);
  std::vector<std::size_t> mains;
  for (std::size_t idx : order) {
    const Peak& pk = peaks.peaks[idx];
    secondary[idx] = std::any_of(mains.begin(), mains.end(), [&](std::size_t m) {
      const Peak& main = peaks.peaks[m];
      return main.power > pk.power &&
             std::abs(std::abs(pk.frequency_khz - main.frequency_khz) - expected_shift_khz) <= gate;
    });
    if (!secondary[idx]) mains.push_back(idx);
  }
  return secondary;
}

inline PeakSet main_peaks(const PeakSet& peaks, double expected_shift_khz) {
  const auto secondary = secondary_mask(peaks, expected_shift_khz);
  PeakSet out{{}, peaks.noise_floor, peaks.bin_width_khz};
  for (std::size_t i = 0; i < peaks.size(); ++i) {
    if (!secondary[i]) out.peaks.push_back(peaks.peaks[i]);
  }
  return out;
}

enum class FidelityMode {
  IntensityRatio,  // F = 1 - secondary / main
  Mixture,         // amplitude ratio sqrt(secondary / main) = (1 - F) / F
};

struct FidelityEstimate {
  double fidelity = 1.0;
  double uncertainty = 0.0;
  double ratio = 0.0;  // integrated secondary / main power
  std::size_t n_main = 0;
  std::size_t n_secondary = 0;
};

// Pulse fidelity from the integrated power of secondary lines relative to the
// main lines.
inline FidelityEstimate estimate_pulse_fidelity(const PeakSet& peaks, double expected_shift_khz,
                                                FidelityMode mode = FidelityMode::IntensityRatio) {
  const auto secondary = secondary_mask(peaks, expected_shift_khz);
  double main_area = 0.0, secondary_area = 0.0, noise_area = 0.0;
  FidelityEstimate est;
  for (std::size_t i = 0; i < peaks.size(); ++i) {
    const Peak& pk = peaks.peaks[i];
    if (secondary[i]) {
      secondary_area += pk.area;
      ++est.n_secondary;
    } else {
      main_area += pk.area;
      noise_area += peaks.noise_floor * pk.width_khz;
      ++est.n_main;
    }
  }
  if (est.n_main == 0 || !(main_area > 0.0)) throw AnalysisError("estimate_pulse_fidelity: no main peaks");
  est.ratio = secondary_area / main_area;
  const double rel_noise = noise_area / main_area;
  if (mode == FidelityMode::IntensityRatio) {
    est.fidelity = std::clamp(1.0 - est.ratio, 0.0, 1.0);
  } else {
    est.fidelity = 1.0 / (1.0 + std::sqrt(est.ratio));
  }
  // With no secondary lines this bounds the infidelity by the noise floor.
  est.uncertainty = est.n_secondary == 0 ? rel_noise : std::hypot(rel_noise, est.ratio * rel_noise);
  return est;
}

}  // namespace nvpair::analysis
