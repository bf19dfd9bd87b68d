#pragma once

// Closed-form signals of Ramsey, Hahn and DEER on a secular register.
//
// In the frame of the sensor's bare transition 0 <-> s, the coherence picks up
// the phase 2 pi delta t with delta = s (A m_I + sum_k nu_k m_k); everything
// else is diagonal and drops out. Ideal pulses then give
//   Ramsey: -cos(2 pi (delta - nu0) tau + phi2 - phi1)
//   echo:    cos(phi1 - 2 phi2 + phi3 + Theta2 - Theta1), Theta_i the phase of half i.
// The emitter flip and the unpolarised spins enter as classical mixtures.

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "nvpair/spinsim/engine.hpp"

namespace oracle {

namespace ss = nvpair::spinsim;

enum class Kind { Ramsey, RamseyFlipped, Hahn, Deer };

struct Branch {
  double weight;
  double m_nuc;
  double m_dark;
};

inline std::vector<Branch> spectator_branches(const ss::SpinRegister& reg, std::size_t sensor) {
  std::vector<std::pair<double, double>> nuc{{1.0, 0.0}};
  const auto& nv = reg.nv_spins[sensor];
  if (nv.hyperfine_mhz) {
    switch (nv.nucleus_init) {
      case ss::HalfSpinInit::Mixed:
        nuc = {{0.5, 0.5}, {0.5, -0.5}};
        break;
      case ss::HalfSpinInit::Up:
        nuc = {{1.0, 0.5}};
        break;
      case ss::HalfSpinInit::Down:
        nuc = {{1.0, -0.5}};
        break;
    }
  }
  std::vector<std::pair<double, double>> dark{{1.0, 0.0}};
  if (reg.has_dark_spin) dark = {{0.5, 0.5}, {0.5, -0.5}};
  std::vector<Branch> out;
  for (auto [wn, mn] : nuc) {
    for (auto [wd, md] : dark) out.push_back({wn * wd, mn, md});
  }
  return out;
}

// Sequence options must have sensor fidelity 1.
inline double closed_form_signal(const ss::SpinRegister& reg, const ss::SequenceOptions& o,
                                 const ss::DecoherenceModel& deco, Kind kind, double t_us) {
  if (o.sensor_fidelity != 1.0) throw std::invalid_argument("oracle assumes ideal sensor pulses");
  using std::numbers::pi;
  const double s = ss::transition_level(o.sensor_transition);
  const double se = ss::transition_level(o.emitter_transition);
  const double a_khz = reg.nv_spins[o.sensor].hyperfine_mhz.value_or(0.0) * 1e3;
  const double nu_e = reg.coupling(o.sensor, o.emitter);
  const double nu_d = reg.has_dark_spin ? reg.coupling(o.sensor, reg.dark_index()) : 0.0;
  const double f = o.emitter_fidelity;
  auto delta = [&](const Branch& b, double m_e) { return s * (a_khz * b.m_nuc + nu_e * m_e + nu_d * b.m_dark); };

  const auto& d = deco.for_nv(o.sensor);
  double sum = 0.0;
  for (const Branch& b : spectator_branches(reg, o.sensor)) {
    if (kind == Kind::Ramsey || kind == Kind::RamseyFlipped) {
      const double tau = t_us * 1e-3;
      auto fringe = [&](double m_e) {
        return -std::cos(2.0 * pi * (delta(b, m_e) - o.detuning_khz) * tau + o.phase(1) - o.phase(0));
      };
      const double v = kind == Kind::Ramsey ? fringe(0.0) : f * fringe(se) + (1.0 - f) * fringe(0.0);
      sum += b.weight * v;
    } else {
      const double h = 0.5 * t_us * 1e-3;
      const double base = o.phase(0) - 2.0 * o.phase(1) + o.phase(2);
      auto echo = [&](double m_e2) { return std::cos(base + 2.0 * pi * (delta(b, m_e2) - delta(b, 0.0)) * h); };
      const double v = kind == Kind::Hahn ? echo(0.0) : f * echo(se) + (1.0 - f) * echo(0.0);
      sum += b.weight * v;
    }
  }
  const bool echo_kind = kind == Kind::Hahn || kind == Kind::Deer;
  return sum * d.envelope(echo_kind ? ss::EvolutionKind::Echo : ss::EvolutionKind::FreeInduction, t_us);
}

}  // namespace oracle
