#pragma once

// Canonical Hahn / DEER / Ramsey traces and the default two-NV + dark-spin
// register.

#include <cmath>
#include <vector>

#include "nvpair/spinsim/engine.hpp"
#include "nvpair/spinsim/register.hpp"
#include "nvpair/spinsim/sequence.hpp"

namespace nvpair::spinsim {

namespace defaults {
inline constexpr double kNvCouplingKhz = 55.0;
inline constexpr double kDarkCouplingJKhz = 172.0;
inline constexpr double kDarkCouplingKKhz = 330.0;
inline constexpr double kHyperfineMhz = 3.1;
inline constexpr double kRamseyFieldG = 46.0;
inline constexpr double kDeerFieldG = 34.0;
// Carrier 1950 kHz below the sensor line centre: the two 15N lines
// (centre -/+ 1550 kHz) then fringe at 400 and 3500 kHz.
inline constexpr double kRamseyDetuningKhz = -1950.0;
inline constexpr double kRamseyStepUs = 0.1;
inline constexpr double kRamseyRecordUs = 1000.0;
inline constexpr double kDeerStepUs = 1.0;
inline constexpr double kDeerRecordUs = 300.0;
}  // namespace defaults

// NV_J (index 0) and NV_K (index 1) with a dark spin between them. The field
// lies along the sensor's axis; the other NV sees its projection on a
// tetrahedral axis (cos = 1/3). The 15N hyperfine is resolved on the sensor only.
inline SpinRegister default_register(std::size_t sensor = 0, double field_g = defaults::kRamseyFieldG) {
  SpinRegister reg;
  reg.nv_spins.resize(2);
  for (std::size_t j = 0; j < 2; ++j) {
    reg.nv_spins[j].axis_field_g = j == sensor ? field_g : field_g / 3.0;
    if (j == sensor) reg.nv_spins[j].hyperfine_mhz = defaults::kHyperfineMhz;
  }
  reg.has_dark_spin = true;
  reg.resize_couplings();
  reg.set_coupling(0, 1, defaults::kNvCouplingKhz);
  reg.set_coupling(0, reg.dark_index(), defaults::kDarkCouplingJKhz);
  reg.set_coupling(1, reg.dark_index(), defaults::kDarkCouplingKKhz);
  return reg;
}

// Hahn-echo decay of NV_J (0.65 ms, alpha 1.14) and NV_K (0.63 ms, alpha 1.31);
// T2* = 100 us with a Gaussian (beta = 2) free-induction envelope.
inline DecoherenceModel default_decoherence() {
  DecoherenceModel d;
  d.per_nv = {NvDecoherence{0.65, 1.14, 100.0, 2.0}, NvDecoherence{0.63, 1.31, 100.0, 2.0}};
  return d;
}

inline SpinRegister without_dark_spin(SpinRegister reg) {
  if (!reg.has_dark_spin) return reg;
  reg.has_dark_spin = false;
  reg.resize_couplings();
  return reg;
}

inline Trace hahn_trace(const SpinRegister& reg, const SequenceOptions& opt, const DecoherenceModel& decoherence,
                        const std::vector<double>& grid, unsigned workers = default_workers()) {
  return run_sequence(reg, hahn_sequence(opt), decoherence, grid, workers);
}

inline Trace deer_trace(const SpinRegister& reg, const SequenceOptions& opt, const DecoherenceModel& decoherence,
                        const std::vector<double>& grid, unsigned workers = default_workers()) {
  return run_sequence(reg, deer_sequence(opt), decoherence, grid, workers);
}

struct RamseyPairOptions {
  SequenceOptions sequence{.detuning_khz = defaults::kRamseyDetuningKhz};
  bool with_emitter_pi = false;
  bool dark_spin_enabled = true;
};

// Ramsey fringes of the sensor with the emitter prepared in m_s = 0
// (reference) or flipped by a pi pulse. A mixed dark spin makes the trace the
// equal-weight average over its two states.
inline Trace ramsey_pair_trace(const SpinRegister& reg, const RamseyPairOptions& opt,
                               const DecoherenceModel& decoherence, const std::vector<double>& grid,
                               unsigned workers = default_workers()) {
  if (opt.sequence.sensor >= reg.nv_spins.size() || opt.sequence.emitter >= reg.nv_spins.size() ||
      opt.sequence.sensor == opt.sequence.emitter) {
    throw InputError("ramsey_pair_trace needs distinct sensor and emitter NVs in the register");
  }
  const SpinRegister r = opt.dark_spin_enabled ? reg : without_dark_spin(reg);
  return run_sequence(r, ramsey_sequence(opt.sequence, opt.with_emitter_pi), decoherence, grid, workers);
}

}  // namespace nvpair::spinsim
