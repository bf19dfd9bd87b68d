#pragma once

// Brute-force secular Hamiltonian built from explicit spin operators and
// Kronecker products. Factor order: NV electron (0, -1, +1), its 15N nucleus
// (+1/2, -1/2) if present, next NV ..., dark spin (+1/2, -1/2).

#include <Eigen/Dense>
#include <vector>

#include "nvpair/spinsim/register.hpp"

namespace oracle {

inline Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  Eigen::MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  }
  return out;
}

inline Eigen::MatrixXd embed(const std::vector<Eigen::MatrixXd>& factors) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(1, 1);
  for (const auto& f : factors) m = kron(m, f);
  return m;
}

// Hamiltonian in kHz.
inline Eigen::MatrixXd brute_force_hamiltonian(const nvpair::spinsim::SpinRegister& reg) {
  Eigen::MatrixXd sz1(3, 3), iz(2, 2);
  sz1.setZero();
  sz1(1, 1) = -1.0;
  sz1(2, 2) = 1.0;
  iz.setZero();
  iz(0, 0) = 0.5;
  iz(1, 1) = -0.5;

  std::vector<Eigen::MatrixXd> ids;
  std::vector<int> electron_slot, nucleus_slot;
  for (const auto& nv : reg.nv_spins) {
    electron_slot.push_back(static_cast<int>(ids.size()));
    ids.push_back(Eigen::MatrixXd::Identity(3, 3));
    if (nv.hyperfine_mhz) {
      nucleus_slot.push_back(static_cast<int>(ids.size()));
      ids.push_back(Eigen::MatrixXd::Identity(2, 2));
    } else {
      nucleus_slot.push_back(-1);
    }
  }
  if (reg.has_dark_spin) {
    electron_slot.push_back(static_cast<int>(ids.size()));
    ids.push_back(Eigen::MatrixXd::Identity(2, 2));
  }
  auto op = [&](std::vector<std::pair<int, Eigen::MatrixXd>> parts) {
    auto f = ids;
    for (auto& [slot, m] : parts) f[slot] = m;
    return embed(f);
  };
  auto electron_sz = [&](std::size_t e) -> Eigen::MatrixXd {
    return e < reg.nv_spins.size() ? sz1 : iz;
  };

  const Eigen::Index dim = embed(ids).rows();
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  for (std::size_t j = 0; j < reg.nv_spins.size(); ++j) {
    const auto& nv = reg.nv_spins[j];
    const Eigen::MatrixXd sz = op({{electron_slot[j], sz1}});
    h += nv.zero_field_splitting_ghz * 1e6 * sz * sz;
    h += nv.gyromagnetic_mhz_per_g * 1e3 * nv.axis_field_g * sz;
    if (nv.hyperfine_mhz) h += *nv.hyperfine_mhz * 1e3 * op({{electron_slot[j], sz1}, {nucleus_slot[j], iz}});
  }
  const std::size_t n_e = reg.electron_count();
  for (std::size_t j = 0; j < n_e; ++j) {
    for (std::size_t k = j + 1; k < n_e; ++k) {
      const double nu = reg.coupling(j, k);
      if (nu != 0.0) h += nu * op({{electron_slot[j], electron_sz(j)}, {electron_slot[k], electron_sz(k)}});
    }
  }
  return h;
}

}  // namespace oracle
