#pragma once

// Randomised registers and sequences for engine-vs-oracle comparisons.

#include <numbers>
#include <random>

#include "nvpair/spinsim.hpp"
#include "oracles/phase.hpp"

namespace oracle {

struct RandomCase {
  nvpair::spinsim::SpinRegister reg;
  nvpair::spinsim::SequenceOptions opt;
  nvpair::spinsim::DecoherenceModel deco;
  Kind kind;
  std::vector<double> times_us;

  nvpair::spinsim::PulseSequence sequence() const {
    namespace ss = nvpair::spinsim;
    switch (kind) {
      case Kind::Ramsey:
        return ss::ramsey_sequence(opt, false);
      case Kind::RamseyFlipped:
        return ss::ramsey_sequence(opt, true);
      case Kind::Hahn:
        return ss::hahn_sequence(opt);
      case Kind::Deer:
        return ss::deer_sequence(opt);
    }
    return {};
  }
};

inline RandomCase random_case(std::mt19937_64& g, Kind kind) {
  namespace ss = nvpair::spinsim;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  auto pick = [&](double lo, double hi) { return lo + (hi - lo) * u(g); };
  auto coin = [&] { return u(g) < 0.5; };

  RandomCase c;
  c.kind = kind;
  c.reg.nv_spins.resize(2);
  for (auto& nv : c.reg.nv_spins) {
    nv.zero_field_splitting_ghz = pick(2.8, 2.9);
    nv.axis_field_g = pick(-100.0, 100.0);
    if (coin()) nv.hyperfine_mhz = pick(-4.0, 4.0);
    const double r = u(g);
    nv.nucleus_init = r < 0.5 ? ss::HalfSpinInit::Mixed : (r < 0.75 ? ss::HalfSpinInit::Up : ss::HalfSpinInit::Down);
  }
  c.reg.has_dark_spin = coin();
  c.reg.resize_couplings();
  c.reg.set_coupling(0, 1, pick(0.0, 400.0));
  if (c.reg.has_dark_spin) {
    c.reg.set_coupling(0, 2, pick(0.0, 400.0));
    c.reg.set_coupling(1, 2, pick(0.0, 400.0));
  }
  c.opt.sensor = coin() ? 0 : 1;
  c.opt.emitter = 1 - c.opt.sensor;
  c.opt.sensor_transition = coin() ? ss::Transition::MinusOne : ss::Transition::PlusOne;
  c.opt.emitter_transition = coin() ? ss::Transition::MinusOne : ss::Transition::PlusOne;
  c.opt.detuning_khz = pick(-3000.0, 3000.0);
  c.opt.sensor_phases = {pick(0, 2 * std::numbers::pi), pick(0, 2 * std::numbers::pi), pick(0, 2 * std::numbers::pi)};
  c.opt.emitter_fidelity = u(g);
  if (coin()) {
    for (int j = 0; j < 2; ++j) {
      c.deco.per_nv.push_back({pick(0.05, 2.0), pick(0.5, 3.0), pick(10.0, 500.0), pick(0.5, 3.0)});
    }
  }
  for (int i = 0; i < 5; ++i) c.times_us.push_back(pick(0.0, 1000.0));
  c.times_us.push_back(0.0);
  return c;
}

inline Kind kind_for(int i) {
  static constexpr Kind kinds[] = {Kind::Ramsey, Kind::RamseyFlipped, Kind::Hahn, Kind::Deer};
  return kinds[i % 4];
}

}  // namespace oracle
