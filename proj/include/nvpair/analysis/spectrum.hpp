#pragma once

#include <fftw3.h>

#include <cmath>
#include <complex>
#include <memory>
#include <mutex>
#include <numbers>
#include <vector>

#include "nvpair/errors.hpp"
#include "nvpair/spinsim/engine.hpp"

namespace nvpair::analysis {

using spinsim::Trace;

// One-sided power spectrum on a uniform grid starting at 0 kHz.
struct Spectrum {
  std::vector<double> freqs_khz;
  std::vector<double> power;
  double resolution_khz = 0.0;  // 1 / record length, before zero padding

  std::size_t size() const { return freqs_khz.size(); }
  double bin_width_khz() const { return freqs_khz.size() > 1 ? freqs_khz[1] - freqs_khz[0] : 0.0; }
};

enum class Window { None, CosineTaper };

struct SpectrumOptions {
  Window window = Window::None;
  double taper_fraction = 0.1;  // CosineTaper: share of the record tapered at each end
  int zero_pad_factor = 1;
  bool remove_mean = false;
};

// Tukey window: flat centre, raised-cosine edges.
inline std::vector<double> cosine_taper(std::size_t n, double fraction) {
  std::vector<double> w(n, 1.0);
  if (n < 2 || fraction <= 0.0) return w;
  const double edge = std::min(fraction, 0.5) * static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    const double d = std::min<double>(static_cast<double>(i), static_cast<double>(n - 1 - i));
    if (d < edge) w[i] = 0.5 * (1.0 - std::cos(std::numbers::pi * d / edge));
  }
  return w;
}

namespace detail {
// FFTW planning is not thread safe; execution is.
inline std::mutex& fftw_planner_mutex() {
  static std::mutex m;
  return m;
}

inline std::vector<std::complex<double>> real_fft(const std::vector<double>& input) {
  const int n = static_cast<int>(input.size());
  std::vector<double> in(input);
  std::vector<std::complex<double>> out(input.size() / 2 + 1);
  fftw_plan plan;
  {
    std::lock_guard lock(fftw_planner_mutex());
    plan = fftw_plan_dft_r2c_1d(n, in.data(), reinterpret_cast<fftw_complex*>(out.data()), FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard lock(fftw_planner_mutex());
    fftw_destroy_plan(plan);
  }
  return out;
}
}  // namespace detail

// P_k = c_k |X_k|^2 / (N N_pad), c_k = 2 except at DC and Nyquist. Without a
// window the powers sum to the mean square of the original record.
inline Spectrum power_spectrum(const Trace& trace, const SpectrumOptions& opt = {}) {
  trace.validate();
  if (trace.size() < 8) throw InputError("power_spectrum needs at least 8 samples");
  if (opt.zero_pad_factor < 1) throw ParameterError("zero_pad_factor must be >= 1");
  const std::size_t n = trace.size();
  const std::size_t n_pad = n * static_cast<std::size_t>(opt.zero_pad_factor);
  const double dt = trace.step_us();

  std::vector<double> x(n_pad, 0.0);
  double mean = 0.0;
  if (opt.remove_mean) {
    for (double v : trace.signal) mean += v;
    mean /= static_cast<double>(n);
  }
  const auto w = opt.window == Window::CosineTaper ? cosine_taper(n, opt.taper_fraction) : std::vector<double>(n, 1.0);
  for (std::size_t i = 0; i < n; ++i) x[i] = (trace.signal[i] - mean) * w[i];

  const auto spec = detail::real_fft(x);
  Spectrum s;
  s.resolution_khz = 1e3 / (static_cast<double>(n) * dt);
  s.freqs_khz.resize(spec.size());
  s.power.resize(spec.size());
  const double norm = 1.0 / (static_cast<double>(n) * static_cast<double>(n_pad));
  for (std::size_t k = 0; k < spec.size(); ++k) {
    s.freqs_khz[k] = 1e3 * static_cast<double>(k) / (static_cast<double>(n_pad) * dt);
    const bool edge = k == 0 || (n_pad % 2 == 0 && k == n_pad / 2);
    s.power[k] = (edge ? 1.0 : 2.0) * std::norm(spec[k]) * norm;
  }
  return s;
}

}  // namespace nvpair::analysis
