#pragma once

// Density-matrix execution of pulse sequences on a secular spin register.

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <numbers>
#include <string>
#include <variant>
#include <vector>

#include "nvpair/errors.hpp"
#include "nvpair/parallel.hpp"
#include "nvpair/spinsim/register.hpp"
#include "nvpair/spinsim/sequence.hpp"

namespace nvpair::spinsim {

using DensityMatrix = Eigen::MatrixXcd;

// Stretched-exponential envelopes per NV: exp[-(t/T2)^alpha] for echoes,
// exp[-(t/T2*)^beta] for free induction, t the total evolution time.
struct NvDecoherence {
  double t2_echo_ms = std::numeric_limits<double>::infinity();
  double alpha = 1.0;
  double t2_star_us = std::numeric_limits<double>::infinity();
  double beta = 2.0;

  void validate() const {
    if (!(t2_echo_ms > 0.0) || !(t2_star_us > 0.0)) throw ParameterError("coherence times must be > 0");
    if (!(alpha > 0.0) || !(beta > 0.0)) throw ParameterError("decay exponents must be > 0");
  }

  double envelope(EvolutionKind kind, double evolution_us) const {
    if (kind == EvolutionKind::Echo) return std::exp(-std::pow(evolution_us / (t2_echo_ms * 1e3), alpha));
    return std::exp(-std::pow(evolution_us / t2_star_us, beta));
  }
};

struct DecoherenceModel {
  std::vector<NvDecoherence> per_nv;  // missing entries mean no decay

  static DecoherenceModel none() { return {}; }

  const NvDecoherence& for_nv(std::size_t j) const {
    static const NvDecoherence kNoDecay{};
    return j < per_nv.size() ? per_nv[j] : kNoDecay;
  }
};

struct Trace {
  std::vector<double> times_us;
  std::vector<double> signal;
  std::string metadata;

  std::size_t size() const { return times_us.size(); }
  double step_us() const { return times_us.size() > 1 ? times_us[1] - times_us[0] : 0.0; }

  // Equal lengths, strictly increasing, uniform spacing (relative tolerance).
  void validate(double rel_tol = 1e-6) const {
    if (times_us.size() != signal.size()) throw InputError("trace: times and signal lengths differ");
    if (times_us.size() < 2) return;
    const double dt = step_us();
    if (!(dt > 0.0)) throw InputError("trace: times must be strictly increasing");
    for (std::size_t i = 1; i < times_us.size(); ++i) {
      const double d = times_us[i] - times_us[i - 1];
      if (!(d > 0.0) || std::abs(d - dt) > rel_tol * dt) throw InputError("trace: time grid is not uniform");
    }
  }
};

// n points t0, t0 + dt, ... computed by multiplication (no accumulated drift).
inline std::vector<double> uniform_grid(double t0_us, double dt_us, std::size_t n) {
  std::vector<double> g(n);
  for (std::size_t i = 0; i < n; ++i) g[i] = t0_us + dt_us * static_cast<double>(i);
  return g;
}

// Callback invoked with the state after every event.
using StateObserver = std::function<void(std::size_t event_index, const DensityMatrix&)>;

class SequenceEngine {
 public:
  SequenceEngine(SpinRegister reg, PulseSequence seq, DecoherenceModel decoherence)
      : reg_(std::move(reg)), seq_(std::move(seq)), decoherence_(std::move(decoherence)), basis_(reg_) {
    seq_.validate();
    seq_.check_against(reg_);
    for (const auto& d : decoherence_.per_nv) d.validate();
    energies_ = rotating_frame_energies(reg_, basis_);
    readout_target_ = seq_.readout().target;
    // Decay is imprinted on the readout coherence just before the last pulse
    // that maps it to population (or at readout if the target is never pulsed).
    dephase_at_ = seq_.events.size() - 1;
    for (std::size_t i = 0; i < seq_.events.size(); ++i) {
      if (const auto* p = std::get_if<Pulse>(&seq_.events[i]); p && p->target == readout_target_) dephase_at_ = i;
    }
  }

  const Basis& basis() const { return basis_; }

  DensityMatrix initial_state() const {
    const std::size_t n = basis_.dim();
    DensityMatrix rho = DensityMatrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t a = 0; a < n; ++a) {
      double p = 1.0;
      for (std::size_t j = 0; j < reg_.nv_spins.size(); ++j) {
        if (basis_.electron_m(a, j) != 0.0) p = 0.0;
        if (basis_.has_nucleus(j)) p *= half_spin_weight(reg_.nv_spins[j].nucleus_init, basis_.nuclear_m(a, j));
      }
      if (reg_.has_dark_spin) p *= 0.5;
      rho(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(a)) = p;
    }
    return rho;
  }

  // Final state for one value of the swept time.
  DensityMatrix evolve(double sweep_us, const StateObserver& observer = {}) const {
    DensityMatrix rho = initial_state();
    const double evolution_us = seq_.total_delay_us(sweep_us);
    double t_us = 0.0;
    for (std::size_t i = 0; i < seq_.events.size(); ++i) {
      if (i == dephase_at_) dephase_readout(rho, evolution_us);
      const Event& e = seq_.events[i];
      if (const auto* p = std::get_if<Pulse>(&e)) {
        apply_pulse(rho, *p, t_us);
      } else if (const auto* d = std::get_if<Delay>(&e)) {
        const double tau = d->duration(sweep_us);
        apply_delay(rho, tau);
        t_us += tau;
      }
      if (observer) observer(i, rho);
    }
    return rho;
  }

  // Population contrast 2 P(m_s = 0) - 1 of the readout NV.
  double readout(const DensityMatrix& rho) const {
    double p0 = 0.0;
    for (std::size_t a = 0; a < basis_.dim(); ++a) {
      if (basis_.electron_m(a, readout_target_) == 0.0) p0 += rho(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(a)).real();
    }
    return 2.0 * p0 - 1.0;
  }

  double signal(double sweep_us) const { return readout(evolve(sweep_us)); }

  void apply_delay(DensityMatrix& rho, double tau_us) const {
    const std::size_t n = basis_.dim();
    const double w = -2.0 * std::numbers::pi * tau_us * 1e-3;  // kHz * us -> cycles
    std::vector<std::complex<double>> phase(n);
    for (std::size_t a = 0; a < n; ++a) phase[a] = std::polar(1.0, w * energies_[a]);
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t a = 0; a < n; ++a) {
        rho(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) *= phase[a] * std::conj(phase[b]);
      }
    }
  }

  // rho -> f U rho U^dagger + (1 - f) rho, U a rotation in the addressed
  // two-level subspace of the target NV.
  void apply_pulse(DensityMatrix& rho, const Pulse& p, double t_us) const {
    if (p.fidelity == 0.0) return;
    const double phi = p.phase - 2.0 * std::numbers::pi * p.detuning_khz * t_us * 1e-3;
    const double c = std::cos(0.5 * p.angle);
    const double s = std::sin(0.5 * p.angle);
    const std::complex<double> i_unit(0.0, 1.0);
    // Basis (|0>, |m>): [[c, -i s e^{-i phi}], [-i s e^{i phi}, c]].
    const std::complex<double> u00 = c, u11 = c;
    const std::complex<double> u01 = -i_unit * s * std::polar(1.0, -phi);
    const std::complex<double> u10 = -i_unit * s * std::polar(1.0, phi);

    const std::size_t n = basis_.dim();
    const std::size_t offset = basis_.partner_offset(p.target, p.transition);
    DensityMatrix rotated = rho;
    auto pairs = [&](auto&& fn) {
      for (std::size_t a = 0; a < n; ++a) {
        if (basis_.electron_m(a, p.target) == 0.0) fn(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(a + offset));
      }
    };
    // Left multiplication mixes rows, right multiplication by U^dagger mixes columns.
    pairs([&](Eigen::Index a, Eigen::Index b) {
      const Eigen::RowVectorXcd ra = rotated.row(a), rb = rotated.row(b);
      rotated.row(a) = u00 * ra + u01 * rb;
      rotated.row(b) = u10 * ra + u11 * rb;
    });
    pairs([&](Eigen::Index a, Eigen::Index b) {
      const Eigen::VectorXcd ca = rotated.col(a), cb = rotated.col(b);
      rotated.col(a) = std::conj(u00) * ca + std::conj(u01) * cb;
      rotated.col(b) = std::conj(u10) * ca + std::conj(u11) * cb;
    });
    if (p.fidelity == 1.0) {
      rho = std::move(rotated);
    } else {
      rho = p.fidelity * rotated + (1.0 - p.fidelity) * rho;
    }
  }

 private:
  static double half_spin_weight(HalfSpinInit init, double m) {
    switch (init) {
      case HalfSpinInit::Mixed:
        return 0.5;
      case HalfSpinInit::Up:
        return m > 0 ? 1.0 : 0.0;
      case HalfSpinInit::Down:
        return m < 0 ? 1.0 : 0.0;
    }
    return 0.0;
  }

  void dephase_readout(DensityMatrix& rho, double evolution_us) const {
    const double env = decoherence_.for_nv(readout_target_).envelope(seq_.kind, evolution_us);
    if (env == 1.0) return;
    const std::size_t n = basis_.dim();
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t a = 0; a < n; ++a) {
        if (basis_.electron_m(a, readout_target_) != basis_.electron_m(b, readout_target_)) {
          rho(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) *= env;
        }
      }
    }
  }

  SpinRegister reg_;
  PulseSequence seq_;
  DecoherenceModel decoherence_;
  Basis basis_;
  std::vector<double> energies_;
  std::size_t readout_target_ = 0;
  std::size_t dephase_at_ = 0;
};

// Signal at every point of `time_grid` (the swept time, us). Points are
// independent; each lands in its own slot, so the result does not depend on
// the worker count.
inline Trace run_sequence(const SpinRegister& reg, const PulseSequence& seq, const DecoherenceModel& decoherence,
                          const std::vector<double>& time_grid, unsigned workers = default_workers()) {
  const SequenceEngine engine(reg, seq, decoherence);
  Trace trace;
  trace.times_us = time_grid;
  trace.signal.resize(time_grid.size());
  trace.metadata = seq.name;
  for_each_chunk(time_grid.size(), workers, [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) trace.signal[i] = engine.signal(time_grid[i]);
  }, 64);
  return trace;
}

}  // namespace nvpair::spinsim
