#pragma once

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <variant>
#include <vector>

#include "nvpair/errors.hpp"
#include "nvpair/spinsim/register.hpp"

namespace nvpair::spinsim {

// Instantaneous rotation on one NV transition.
//
// The pulse carrier sits `detuning_khz` above the bare transition. In the
// frame rotating at the bare transition, a pulse fired at time t acts with
// phase (phase - 2 pi detuning t), which makes free-induction fringes oscillate
// at (line - carrier).
struct Pulse {
  std::size_t target = 0;
  Transition transition = Transition::MinusOne;
  double angle = std::numbers::pi;  // rad
  double phase = 0.0;               // rad
  double detuning_khz = 0.0;
  double fidelity = 1.0;  // probability that the rotation is applied
};

// Free evolution lasting sweep_fraction * t + fixed_us, where t is the swept
// trace time in microseconds.
struct Delay {
  double sweep_fraction = 1.0;
  double fixed_us = 0.0;

  double duration(double sweep_us) const { return sweep_fraction * sweep_us + fixed_us; }
};

struct Readout {
  std::size_t target = 0;
};

using Event = std::variant<Pulse, Delay, Readout>;

// Selects which decay envelope applies to the readout coherence.
enum class EvolutionKind { Echo, FreeInduction };

struct PulseSequence {
  std::string name;
  EvolutionKind kind = EvolutionKind::FreeInduction;
  std::vector<Event> events;

  const Readout& readout() const { return std::get<Readout>(events.back()); }

  double total_delay_us(double sweep_us) const {
    double t = 0.0;
    for (const auto& e : events) {
      if (const auto* d = std::get_if<Delay>(&e)) t += d->duration(sweep_us);
    }
    return t;
  }

  void validate() const {
    if (events.empty() || !std::holds_alternative<Readout>(events.back())) {
      throw InputError("sequence '" + name + "' must end with a readout");
    }
    std::size_t readouts = 0;
    for (const auto& e : events) {
      if (std::holds_alternative<Readout>(e)) ++readouts;
      if (const auto* d = std::get_if<Delay>(&e)) {
        if (!(d->sweep_fraction >= 0.0) || !(d->fixed_us >= 0.0)) {
          throw InputError("sequence '" + name + "' has a negative delay");
        }
      }
      if (const auto* p = std::get_if<Pulse>(&e)) {
        if (!(p->fidelity >= 0.0 && p->fidelity <= 1.0)) throw InputError("pulse fidelity must lie in [0, 1]");
        if (!std::isfinite(p->angle) || !std::isfinite(p->phase) || !std::isfinite(p->detuning_khz)) {
          throw InputError("pulse parameters must be finite");
        }
      }
    }
    if (readouts != 1) throw InputError("sequence '" + name + "' needs exactly one readout");
  }

  // Every addressed spin must be an NV of the register.
  void check_against(const SpinRegister& reg) const {
    for (const auto& e : events) {
      std::size_t target = 0;
      if (const auto* p = std::get_if<Pulse>(&e)) target = p->target;
      else if (const auto* r = std::get_if<Readout>(&e)) target = r->target;
      else continue;
      if (target >= reg.nv_spins.size()) {
        throw InputError("sequence '" + name + "' addresses NV " + std::to_string(target) +
                         " but the register has " + std::to_string(reg.nv_spins.size()));
      }
    }
  }
};

// Parameters shared by the canonical sequence builders.
struct SequenceOptions {
  std::size_t sensor = 0;
  std::size_t emitter = 1;
  Transition sensor_transition = Transition::MinusOne;
  Transition emitter_transition = Transition::MinusOne;
  double detuning_khz = 0.0;  // carrier offset of the sensor pulses
  // Phases of the sensor pulses in order (pi/2, [pi,] pi/2).
  std::vector<double> sensor_phases{};
  double sensor_fidelity = 1.0;
  double emitter_fidelity = 1.0;

  double phase(std::size_t i) const { return i < sensor_phases.size() ? sensor_phases[i] : 0.0; }
};

namespace detail {
inline Pulse sensor_pulse(const SequenceOptions& o, double angle, std::size_t phase_index) {
  return Pulse{o.sensor, o.sensor_transition, angle, o.phase(phase_index), o.detuning_khz, o.sensor_fidelity};
}
inline Pulse emitter_pi(const SequenceOptions& o) {
  return Pulse{o.emitter, o.emitter_transition, std::numbers::pi, 0.0, 0.0, o.emitter_fidelity};
}
}  // namespace detail

// pi/2 - t/2 - pi - t/2 - pi/2; the trace time is the total evolution 2 tau.
inline PulseSequence hahn_sequence(const SequenceOptions& o) {
  using std::numbers::pi;
  return {"hahn",
          EvolutionKind::Echo,
          {detail::sensor_pulse(o, pi / 2, 0), Delay{0.5, 0.0}, detail::sensor_pulse(o, pi, 1), Delay{0.5, 0.0},
           detail::sensor_pulse(o, pi / 2, 2), Readout{o.sensor}}};
}

// Hahn echo on the sensor with the emitter pi pulse fired together with the
// sensor pi pulse.
inline PulseSequence deer_sequence(const SequenceOptions& o) {
  using std::numbers::pi;
  return {"deer",
          EvolutionKind::Echo,
          {detail::sensor_pulse(o, pi / 2, 0), Delay{0.5, 0.0}, detail::sensor_pulse(o, pi, 1),
           detail::emitter_pi(o), Delay{0.5, 0.0}, detail::sensor_pulse(o, pi / 2, 2), Readout{o.sensor}}};
}

// [emitter pi] - pi/2 - t - pi/2 on the sensor.
inline PulseSequence ramsey_sequence(const SequenceOptions& o, bool with_emitter_pi) {
  using std::numbers::pi;
  PulseSequence s{with_emitter_pi ? "ramsey_flipped" : "ramsey_reference", EvolutionKind::FreeInduction, {}};
  if (with_emitter_pi) s.events.emplace_back(detail::emitter_pi(o));
  s.events.emplace_back(detail::sensor_pulse(o, pi / 2, 0));
  s.events.emplace_back(Delay{1.0, 0.0});
  s.events.emplace_back(detail::sensor_pulse(o, pi / 2, 1));
  s.events.emplace_back(Readout{o.sensor});
  return s;
}

}  // namespace nvpair::spinsim
