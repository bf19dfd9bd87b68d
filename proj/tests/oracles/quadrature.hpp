#pragma once

// Gauss-Legendre quadrature used by the test oracles.

#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

namespace oracle {

struct GaussLegendre {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;

  explicit GaussLegendre(int n) : nodes(n), weights(n) {
    for (int i = 0; i < n; ++i) {
      double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
      double dp = 0.0;
      for (int iter = 0; iter < 100; ++iter) {
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
          const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double dx = p1 / dp;
        x -= dx;
        if (std::abs(dx) < 1e-15) break;
      }
      nodes[i] = x;
      weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
  }
};

// Composite Gauss-Legendre over [a, b] with `panels` equal panels.
template <class F>
double integrate(F&& f, double a, double b, int panels = 64, int order = 20) {
  static thread_local std::vector<std::pair<int, GaussLegendre>> cache;
  const GaussLegendre* gl = nullptr;
  for (auto& [o, g] : cache) {
    if (o == order) gl = &g;
  }
  if (!gl) {
    cache.emplace_back(order, GaussLegendre(order));
    gl = &cache.back().second;
  }
  const double h = (b - a) / panels;
  double sum = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * h;
    for (std::size_t i = 0; i < gl->nodes.size(); ++i) {
      sum += gl->weights[i] * f(lo + 0.5 * h * (gl->nodes[i] + 1.0));
    }
  }
  return 0.5 * h * sum;
}

// Mean of |3u^2 - 1| over u in [0, 1]; split at the kink u = 1/sqrt(3).
inline double spherical_average_factor() {
  const double kink = 1.0 / std::sqrt(3.0);
  auto g = [](double u) { return std::abs(3.0 * u * u - 1.0); };
  return integrate(g, 0.0, kink, 4, 8) + integrate(g, kink, 1.0, 4, 8);
}

}  // namespace oracle
