#pragma once

// Direct O(N^2) discrete Fourier transform.

#include <complex>
#include <numbers>
#include <vector>

namespace oracle {

inline std::vector<std::complex<double>> naive_dft(const std::vector<double>& x) {
  const std::size_t n = x.size();
  std::vector<std::complex<double>> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::complex<double> s = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      s += x[j] * std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>((k * j) % n) / static_cast<double>(n));
    }
    out[k] = s;
  }
  return out;
}

}  // namespace oracle
