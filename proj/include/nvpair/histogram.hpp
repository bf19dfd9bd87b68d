#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "nvpair/errors.hpp"

namespace nvpair {

// Uniform binning over [lo, hi).
struct BinSpec {
  double lo = 0.0;
  double hi = 30.0;
  std::size_t n_bins = 60;

  double width() const { return (hi - lo) / static_cast<double>(n_bins); }

  void validate() const {
    if (n_bins == 0) throw ParameterError("bin spec has no bins");
    if (!(hi > lo) || !std::isfinite(lo) || !std::isfinite(hi)) {
      throw ParameterError("bin spec needs finite lo < hi");
    }
  }
};

// Counts per bin. Samples outside the binned range still count in `total`.
struct Histogram {
  std::vector<double> bin_edges;
  std::vector<std::uint64_t> counts;
  std::uint64_t total = 0;

  static Histogram empty(const BinSpec& spec) {
    spec.validate();
    Histogram h;
    h.bin_edges.resize(spec.n_bins + 1);
    for (std::size_t i = 0; i <= spec.n_bins; ++i) {
      h.bin_edges[i] = spec.lo + spec.width() * static_cast<double>(i);
    }
    h.bin_edges.back() = spec.hi;
    h.counts.assign(spec.n_bins, 0);
    return h;
  }

  std::size_t size() const { return counts.size(); }
  double lo() const { return bin_edges.front(); }
  double hi() const { return bin_edges.back(); }
  double bin_center(std::size_t i) const { return 0.5 * (bin_edges[i] + bin_edges[i + 1]); }

  // Bin index for a value, or size() if outside [lo, hi).
  std::size_t locate(double x) const {
    if (!(x >= lo()) || !(x < hi())) return size();
    const double w = (hi() - lo()) / static_cast<double>(size());
    auto i = static_cast<std::size_t>((x - lo()) / w);
    if (i >= size()) i = size() - 1;
    // Guard rounding at interior edges.
    while (i > 0 && x < bin_edges[i]) --i;
    while (i + 1 < size() && x >= bin_edges[i + 1]) ++i;
    return i;
  }

  void add(double x) {
    ++total;
    if (const auto i = locate(x); i < size()) ++counts[i];
  }

  void merge(const Histogram& other) {
    if (other.counts.size() != counts.size()) throw ParameterError("histogram merge: bin mismatch");
    for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += other.counts[i];
    total += other.total;
  }

  std::uint64_t in_range() const {
    std::uint64_t s = 0;
    for (auto c : counts) s += c;
    return s;
  }

  // Probability density per unit of the binned quantity, normalised by total.
  std::vector<double> density() const {
    std::vector<double> d(size(), 0.0);
    if (total == 0) return d;
    for (std::size_t i = 0; i < size(); ++i) {
      d[i] = static_cast<double>(counts[i]) /
             (static_cast<double>(total) * (bin_edges[i + 1] - bin_edges[i]));
    }
    return d;
  }
};

}  // namespace nvpair
