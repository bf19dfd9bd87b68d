#pragma once

// Spin register for up to two NV- centres, their optional 15N nuclei and one
// dark electron spin, with the secular (diagonal) Hamiltonian over the
// product basis.

#include <Eigen/Dense>
#include <cmath>
#include <cstddef>
#include <optional>
#include <vector>

#include "nvpair/errors.hpp"

namespace nvpair::spinsim {

// Addressed electron transition of an NV: m_s = 0 <-> -1 or 0 <-> +1.
enum class Transition { MinusOne, PlusOne };

inline int transition_level(Transition t) { return t == Transition::MinusOne ? -1 : +1; }

// Initial state of a spin-1/2 that is not optically pumped.
enum class HalfSpinInit { Mixed, Up, Down };

struct NvSpin {
  double zero_field_splitting_ghz = 2.87;
  double gyromagnetic_mhz_per_g = 2.8025;
  double axis_field_g = 0.0;              // static field projected on this NV's axis
  std::optional<double> hyperfine_mhz{};  // attached 15N (I = 1/2), if resolved
  HalfSpinInit nucleus_init = HalfSpinInit::Mixed;
};

struct SpinRegister {
  std::vector<NvSpin> nv_spins;
  bool has_dark_spin = false;
  // Secular couplings nu_jk in kHz between electron spins. Indices 0..n_nv-1
  // are the NVs, index n_nv is the dark spin when present.
  Eigen::MatrixXd couplings_khz;

  std::size_t electron_count() const { return nv_spins.size() + (has_dark_spin ? 1 : 0); }
  std::size_t dark_index() const { return nv_spins.size(); }

  double coupling(std::size_t j, std::size_t k) const {
    if (couplings_khz.rows() == 0) return 0.0;
    return couplings_khz(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k));
  }

  void set_coupling(std::size_t j, std::size_t k, double nu_khz) {
    resize_couplings();
    if (j >= electron_count() || k >= electron_count() || j == k) {
      throw ParameterError("set_coupling: invalid electron pair");
    }
    couplings_khz(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) = nu_khz;
    couplings_khz(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j)) = nu_khz;
  }

  // Grows or shrinks the coupling matrix to match the spin count, keeping
  // existing entries.
  void resize_couplings() {
    const auto n = static_cast<Eigen::Index>(electron_count());
    if (couplings_khz.rows() == n && couplings_khz.cols() == n) return;
    Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, n);
    const auto m = std::min<Eigen::Index>(n, couplings_khz.rows());
    c.topLeftCorner(m, m) = couplings_khz.topLeftCorner(m, m);
    couplings_khz = c;
  }

  void validate() const {
    if (nv_spins.empty() || nv_spins.size() > 2) throw ParameterError("register holds one or two NV spins");
    for (const auto& s : nv_spins) {
      if (!(s.zero_field_splitting_ghz > 0.0)) throw ParameterError("zero-field splitting must be > 0");
      if (!std::isfinite(s.gyromagnetic_mhz_per_g) || !std::isfinite(s.axis_field_g)) {
        throw ParameterError("NV field parameters must be finite");
      }
      if (s.hyperfine_mhz && !std::isfinite(*s.hyperfine_mhz)) throw ParameterError("hyperfine must be finite");
    }
    const auto n = static_cast<Eigen::Index>(electron_count());
    if (couplings_khz.rows() != 0 && (couplings_khz.rows() != n || couplings_khz.cols() != n)) {
      throw ParameterError("coupling matrix size does not match the electron spin count");
    }
    for (Eigen::Index j = 0; j < couplings_khz.rows(); ++j) {
      if (couplings_khz(j, j) != 0.0) throw ParameterError("coupling matrix diagonal must be zero");
      for (Eigen::Index k = 0; k < couplings_khz.cols(); ++k) {
        if (couplings_khz(j, k) != couplings_khz(k, j)) throw ParameterError("coupling matrix must be symmetric");
        if (!(couplings_khz(j, k) >= 0.0) || !std::isfinite(couplings_khz(j, k))) {
          throw ParameterError("couplings must be finite and >= 0");
        }
      }
    }
  }
};

// Product basis. Factor order: for each NV its electron (m = 0, -1, +1) then
// its nucleus if present (m_I = +1/2, -1/2); the dark spin (+1/2, -1/2) last.
// The last factor varies fastest.
class Basis {
 public:
  explicit Basis(const SpinRegister& reg) {
    reg.validate();
    const std::size_t n_nv = reg.nv_spins.size();
    electron_factor_.resize(reg.electron_count());
    nucleus_factor_.assign(n_nv, kNone);
    for (std::size_t j = 0; j < n_nv; ++j) {
      electron_factor_[j] = dims_.size();
      dims_.push_back(3);
      if (reg.nv_spins[j].hyperfine_mhz) {
        nucleus_factor_[j] = dims_.size();
        dims_.push_back(2);
      }
    }
    if (reg.has_dark_spin) {
      electron_factor_[reg.dark_index()] = dims_.size();
      dims_.push_back(2);
    }
    strides_.assign(dims_.size(), 1);
    for (std::size_t f = dims_.size(); f-- > 1;) strides_[f - 1] = strides_[f] * dims_[f];
    dim_ = strides_.empty() ? 1 : strides_[0] * dims_[0];
  }

  std::size_t dim() const { return dim_; }
  std::size_t electron_count() const { return electron_factor_.size(); }
  bool has_nucleus(std::size_t nv) const { return nucleus_factor_[nv] != kNone; }

  std::size_t level(std::size_t state, std::size_t factor) const { return (state / strides_[factor]) % dims_[factor]; }

  // Electron projection: NV levels (0, -1, +1), dark spin (+1/2, -1/2).
  double electron_m(std::size_t state, std::size_t electron) const {
    const std::size_t f = electron_factor_[electron];
    const std::size_t l = level(state, f);
    if (dims_[f] == 3) return l == 0 ? 0.0 : (l == 1 ? -1.0 : 1.0);
    return l == 0 ? 0.5 : -0.5;
  }

  double nuclear_m(std::size_t state, std::size_t nv) const {
    if (!has_nucleus(nv)) return 0.0;
    return level(state, nucleus_factor_[nv]) == 0 ? 0.5 : -0.5;
  }

  // Offset from the m = 0 state of `nv` to its partner on `t`.
  std::size_t partner_offset(std::size_t nv, Transition t) const {
    return strides_[electron_factor_[nv]] * (t == Transition::MinusOne ? 1 : 2);
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> dims_;
  std::vector<std::size_t> strides_;
  std::vector<std::size_t> electron_factor_;
  std::vector<std::size_t> nucleus_factor_;
  std::size_t dim_ = 1;
};

// Laboratory-frame energies (kHz) of the product basis states:
// sum_j [D m_j^2 + gamma B m_j + A m_j m_I,j] + sum_{j<k} nu_jk m_j m_k.
struct EnergyTable {
  std::vector<double> energies_khz;
};

inline double coupling_energy(const SpinRegister& reg, const Basis& basis, std::size_t state) {
  double e = 0.0;
  const std::size_t n = basis.electron_count();
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      e += reg.coupling(j, k) * basis.electron_m(state, j) * basis.electron_m(state, k);
    }
  }
  return e;
}

inline double hyperfine_energy(const SpinRegister& reg, const Basis& basis, std::size_t state) {
  double e = 0.0;
  for (std::size_t j = 0; j < reg.nv_spins.size(); ++j) {
    if (const auto& a = reg.nv_spins[j].hyperfine_mhz) {
      e += *a * 1e3 * basis.electron_m(state, j) * basis.nuclear_m(state, j);
    }
  }
  return e;
}

// Bare electron level of one NV: D m^2 + gamma B m, in kHz.
inline double bare_level_khz(const NvSpin& s, double m) {
  return s.zero_field_splitting_ghz * 1e6 * m * m + s.gyromagnetic_mhz_per_g * 1e3 * s.axis_field_g * m;
}

inline EnergyTable build_hamiltonian(const SpinRegister& reg) {
  const Basis basis(reg);
  EnergyTable t;
  t.energies_khz.resize(basis.dim());
  for (std::size_t a = 0; a < basis.dim(); ++a) {
    double e = 0.0;
    for (std::size_t j = 0; j < reg.nv_spins.size(); ++j) e += bare_level_khz(reg.nv_spins[j], basis.electron_m(a, j));
    t.energies_khz[a] = e + hyperfine_energy(reg, basis, a) + coupling_energy(reg, basis, a);
  }
  return t;
}

// Energies in the frame rotating with every NV's bare level (D m^2 + gamma B m):
// only hyperfine and coupling terms remain. Computed directly rather than by
// subtraction so that GHz-scale terms never enter the phases.
inline std::vector<double> rotating_frame_energies(const SpinRegister& reg, const Basis& basis) {
  std::vector<double> e(basis.dim());
  for (std::size_t a = 0; a < basis.dim(); ++a) e[a] = hyperfine_energy(reg, basis, a) + coupling_energy(reg, basis, a);
  return e;
}

// Bare transition frequency 0 <-> m of one NV (kHz); pulse detunings refer to it.
inline double bare_transition_khz(const NvSpin& s, Transition t) {
  return bare_level_khz(s, transition_level(t));
}

}  // namespace nvpair::spinsim
