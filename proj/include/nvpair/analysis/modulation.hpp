#pragma once

#include <algorithm>

#include "nvpair/analysis/peaks.hpp"
#include "nvpair/analysis/spectrum.hpp"
#include "nvpair/errors.hpp"

namespace nvpair::analysis {

struct ModulationEstimate {
  double frequency_khz = 0.0;  // oscillation frequency along the trace time axis
  double coupling_khz = 0.0;
  double uncertainty_khz = 0.0;
};

// Dominant oscillation of a DEER echo trace. The trace time is the total echo
// time 2 tau while the dipolar phase only accrues during the tau after the
// emitter pulse, so the coupling is twice the observed frequency.
inline ModulationEstimate extract_deer_coupling(const Trace& trace, int zero_pad_factor = 16) {
  SpectrumOptions so;
  so.zero_pad_factor = zero_pad_factor;
  so.remove_mean = true;
  const Spectrum s = power_spectrum(trace, so);
  PeakOptions po;
  po.min_relative_power = 0.0;
  // Skip the slow envelope that survives mean removal.
  po.min_frequency_khz = 1.5 * s.resolution_khz;
  const PeakSet peaks = find_peaks(s, po);
  if (peaks.size() == 0) throw AnalysisError("extract_deer_coupling: no modulation found");
  const Peak& best = *std::max_element(peaks.peaks.begin(), peaks.peaks.end(),
                                       [](const Peak& a, const Peak& b) { return a.power < b.power; });
  return {best.frequency_khz, 2.0 * best.frequency_khz, 2.0 * best.uncertainty_khz};
}

}  // namespace nvpair::analysis
