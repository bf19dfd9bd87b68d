#pragma once

// Levenberg-Marquardt fit of E(t) = a + b exp[-(t/T2)^alpha].

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <vector>

#include "nvpair/errors.hpp"
#include "nvpair/random.hpp"
#include "nvpair/spinsim/engine.hpp"

namespace nvpair::analysis {

using spinsim::Trace;

struct DecayFit {
  double a = 0.0;
  double b = 0.0;
  double t2_ms = 0.0;
  double alpha = 1.0;
  double a_err = 0.0;
  double b_err = 0.0;
  double t2_err_ms = 0.0;
  double alpha_err = 0.0;
  double residual_norm = 0.0;
  int iterations = 0;
  std::vector<double> residual_history;  // residual norm after every accepted step
};

struct FitOptions {
  std::optional<double> fixed_alpha{};
  int max_iterations = 500;
};

inline double stretched_exp(double t_us, double a, double b, double t2_ms, double alpha) {
  return a + b * std::exp(-std::pow(t_us / (t2_ms * 1e3), alpha));
}

// Model samples on `times_us`, optionally with additive Gaussian noise drawn
// from a counter stream (pure function of seed).
inline Trace synthesize_decay(const std::vector<double>& times_us, double a, double b, double t2_ms, double alpha,
                              double noise_sigma = 0.0, std::uint64_t seed = 0) {
  Trace tr;
  tr.times_us = times_us;
  tr.signal.resize(times_us.size());
  for (std::size_t i = 0; i < times_us.size(); ++i) {
    double v = stretched_exp(times_us[i], a, b, t2_ms, alpha);
    if (noise_sigma > 0.0) v += CounterRng(seed, rng_domain::kTraceNoise, i).normal(0.0, noise_sigma);
    tr.signal[i] = v;
  }
  tr.metadata = "stretched_exp";
  return tr;
}

namespace detail {

// Parameter vector: a, b, ln T2[ms], ln alpha (last one absent when alpha is fixed).
struct DecayModel {
  const std::vector<double>& t_ms;
  const std::vector<double>& y;
  std::optional<double> fixed_alpha;

  Eigen::Index n_params() const { return fixed_alpha ? 3 : 4; }

  double alpha(const Eigen::VectorXd& p) const { return fixed_alpha ? *fixed_alpha : std::exp(p(3)); }

  void evaluate(const Eigen::VectorXd& p, Eigen::VectorXd& r, Eigen::MatrixXd* jac) const {
    const auto n = static_cast<Eigen::Index>(t_ms.size());
    const double a = p(0), b = p(1), t2 = std::exp(p(2)), al = alpha(p);
    r.resize(n);
    if (jac) jac->resize(n, n_params());
    for (Eigen::Index i = 0; i < n; ++i) {
      const double x = t_ms[static_cast<std::size_t>(i)] / t2;
      const double g = x > 0.0 ? std::pow(x, al) : 0.0;
      const double e = std::exp(-g);
      r(i) = a + b * e - y[static_cast<std::size_t>(i)];
      if (!jac) continue;
      (*jac)(i, 0) = 1.0;
      (*jac)(i, 1) = e;
      (*jac)(i, 2) = b * e * al * g;
      if (!fixed_alpha) (*jac)(i, 3) = x > 0.0 ? -b * e * al * g * std::log(x) : 0.0;
    }
  }
};

}  // namespace detail

// Initial guesses: a = mean of the last tenth, b = first sample - a, T2 = first
// time the signal falls through a + b/e, alpha = 1.
inline DecayFit fit_stretched_exp(const Trace& trace, const FitOptions& opt = {}) {
  trace.validate();
  const std::size_t n = trace.size();
  if (n < 8) throw InputError("fit_stretched_exp needs at least 8 points");
  if (opt.fixed_alpha && !(*opt.fixed_alpha > 0.0)) throw ParameterError("fixed alpha must be > 0");

  std::vector<double> t_ms(n);
  for (std::size_t i = 0; i < n; ++i) t_ms[i] = trace.times_us[i] * 1e-3;
  const std::vector<double>& y = trace.signal;

  const std::size_t tail = std::max<std::size_t>(1, n / 10);
  double a0 = 0.0;
  for (std::size_t i = n - tail; i < n; ++i) a0 += y[i];
  a0 /= static_cast<double>(tail);
  const double b0 = y.front() - a0;
  if (!(std::abs(b0) > 0.0)) throw FitError("fit_stretched_exp: trace shows no decay", 0, 0.0);
  const double level = a0 + b0 / std::numbers::e;
  double t20 = 0.5 * (t_ms.front() + t_ms.back());
  for (std::size_t i = 1; i < n; ++i) {
    const double u = (y[i - 1] - level) * (b0 > 0 ? 1.0 : -1.0);
    const double v = (y[i] - level) * (b0 > 0 ? 1.0 : -1.0);
    if (u > 0.0 && v <= 0.0) {
      t20 = t_ms[i - 1] + (t_ms[i] - t_ms[i - 1]) * u / (u - v);
      break;
    }
  }
  if (!(t20 > 0.0)) t20 = t_ms.back() > 0.0 ? 0.5 * t_ms.back() : 1.0;

  const detail::DecayModel model{t_ms, y, opt.fixed_alpha};
  Eigen::VectorXd p(model.n_params());
  p(0) = a0;
  p(1) = b0;
  p(2) = std::log(t20);
  if (!opt.fixed_alpha) p(3) = 0.0;

  Eigen::VectorXd r;
  Eigen::MatrixXd jac;
  model.evaluate(p, r, &jac);
  double cost = r.squaredNorm();
  double lambda = 1e-3;
  DecayFit fit;
  fit.residual_history.push_back(std::sqrt(cost));
  bool converged = false;
  int it = 0;
  for (; it < opt.max_iterations && !converged; ++it) {
    const Eigen::MatrixXd jtj = jac.transpose() * jac;
    const Eigen::VectorXd grad = jac.transpose() * r;
    if (grad.lpNorm<Eigen::Infinity>() <= 1e-15 * std::max(1.0, cost) || cost == 0.0) {
      converged = true;
      break;
    }
    bool accepted = false;
    while (!accepted) {
      Eigen::MatrixXd damped = jtj;
      damped.diagonal() += lambda * jtj.diagonal().cwiseMax(1e-12);
      const Eigen::VectorXd step = damped.ldlt().solve(-grad);
      const Eigen::VectorXd trial = p + step;
      Eigen::VectorXd r_trial;
      model.evaluate(trial, r_trial, nullptr);
      const double trial_cost = r_trial.squaredNorm();
      if (std::isfinite(trial_cost) && trial_cost <= cost) {
        const double reduction = cost - trial_cost;
        p = trial;
        model.evaluate(p, r, &jac);
        const double previous = cost;
        cost = trial_cost;
        fit.residual_history.push_back(std::sqrt(cost));
        lambda = std::max(lambda / 10.0, 1e-12);
        accepted = true;
        if (reduction <= 1e-14 * previous && step.lpNorm<Eigen::Infinity>() <= 1e-9 * (1.0 + p.lpNorm<Eigen::Infinity>())) {
          converged = true;
        }
      } else {
        lambda *= 10.0;
        if (lambda > 1e16) {
          // No descent direction left at working precision: a minimum.
          converged = true;
          break;
        }
      }
    }
  }
  fit.iterations = it;
  fit.residual_norm = std::sqrt(cost);
  if (!converged) throw FitError("fit_stretched_exp did not converge", it, fit.residual_norm);

  fit.a = p(0);
  fit.b = p(1);
  fit.t2_ms = std::exp(p(2));
  fit.alpha = model.alpha(p);

  // Covariance from the local quadratic model, s^2 (J^T J)^-1.
  const auto dof = static_cast<double>(n) - static_cast<double>(model.n_params());
  const double s2 = dof > 0 ? cost / dof : 0.0;
  const Eigen::MatrixXd cov = (jac.transpose() * jac).completeOrthogonalDecomposition().pseudoInverse() * s2;
  fit.a_err = std::sqrt(std::max(0.0, cov(0, 0)));
  fit.b_err = std::sqrt(std::max(0.0, cov(1, 1)));
  fit.t2_err_ms = fit.t2_ms * std::sqrt(std::max(0.0, cov(2, 2)));
  fit.alpha_err = opt.fixed_alpha ? 0.0 : fit.alpha * std::sqrt(std::max(0.0, cov(3, 3)));
  if (!(fit.t2_ms > 0.0) || !(fit.alpha > 0.0) || !std::isfinite(fit.t2_err_ms) || !std::isfinite(fit.alpha_err)) {
    throw FitError("fit_stretched_exp produced non-finite parameters", it, fit.residual_norm);
  }
  return fit;
}

}  // namespace nvpair::analysis
