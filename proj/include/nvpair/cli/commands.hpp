#pragma once

// The four subcommands. Each writes its outputs plus a run manifest into an
// output directory and returns the summary report it wrote.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "nvpair/analysis.hpp"
#include "nvpair/cli/config.hpp"
#include "nvpair/coupling.hpp"
#include "nvpair/implant.hpp"
#include "nvpair/io.hpp"
#include "nvpair/spinsim.hpp"
#include "nvpair/trace_io.hpp"
#include "nvpair/yield.hpp"

namespace nvpair::cli {

namespace fs = std::filesystem;

class UsageError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

enum ExitCode : int { kOk = 0, kUsage = 2, kNumerical = 3 };

// Maps the error hierarchy onto exit codes.
inline int run_guarded(const std::function<void()>& body, std::ostream& err = std::cerr) {
  try {
    body();
    return kOk;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const AnalysisError& e) {
    err << "analysis failed: " << e.what() << '\n';
    return kNumerical;
  } catch (const DomainError& e) {
    err << "numerical error: " << e.what() << '\n';
    return kNumerical;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kNumerical;
  }
}

namespace detail {

inline std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

inline fs::path prepare_out_dir(const fs::path& out) {
  std::error_code ec;
  fs::create_directories(out, ec);
  if (ec || !fs::is_directory(out)) throw InputError("cannot create output directory: " + out.string());
  return out;
}

inline void write_manifest(const fs::path& out, const ExperimentConfig& cfg, const std::string& command,
                           const std::vector<std::string>& outputs) {
  io::KeyValueReport m;
  m.add("command", command);
  m.add("config_hash", hex64(config_hash(cfg)));
  m.add("seed", cfg.seed);
  std::string list;
  for (const auto& o : outputs) list += (list.empty() ? "" : ",") + o;
  m.add("outputs", list);
  io::write_text_file((out / "manifest.txt").string(), m.str());
}

inline std::vector<double> record_grid(double step_us, double record_us) {
  const auto n = static_cast<std::size_t>(std::llround(record_us / step_us));
  if (n < 2) throw ConfigError("record must span at least two samples");
  return spinsim::uniform_grid(0.0, step_us, n);
}

inline spinsim::SequenceOptions sequence_options(const ExperimentConfig& cfg) {
  const auto& s = cfg.sequence;
  spinsim::SequenceOptions o;
  o.sensor = s.sensor;
  o.emitter = s.emitter;
  o.sensor_transition = s.sensor_transition;
  o.emitter_transition = s.emitter_transition;
  o.sensor_fidelity = s.sensor_fidelity;
  o.emitter_fidelity = s.emitter_fidelity;
  return o;
}

inline analysis::SpectrumOptions spectrum_options(const AnalysisSection& a) {
  analysis::SpectrumOptions o;
  o.zero_pad_factor = a.zero_pad_factor;
  o.window = a.cosine_taper ? analysis::Window::CosineTaper : analysis::Window::None;
  return o;
}

inline analysis::PeakOptions peak_options(const AnalysisSection& a) {
  analysis::PeakOptions o;
  o.min_relative_power = a.min_relative_power;
  o.min_separation_khz = a.min_separation_khz;
  return o;
}

inline std::string spectrum_csv(const analysis::Spectrum& s) {
  std::ostringstream os;
  os << "freq_khz,power\n";
  for (std::size_t k = 0; k < s.size(); ++k) os << io::fmt(s.freqs_khz[k]) << ',' << io::fmt(s.power[k]) << '\n';
  return os.str();
}

inline std::string peaks_csv(const analysis::PeakSet& p) {
  std::ostringstream os;
  os << "frequency_khz,power,area,uncertainty_khz\n";
  for (const auto& pk : p.peaks) {
    os << io::fmt(pk.frequency_khz) << ',' << io::fmt(pk.power) << ',' << io::fmt(pk.area) << ','
       << io::fmt(pk.uncertainty_khz) << '\n';
  }
  return os.str();
}

inline std::string join(const std::vector<double>& v) {
  std::string s;
  for (double x : v) s += (s.empty() ? "" : ";") + io::fmt_sig(x, 6);
  return s;
}

inline std::vector<double> peak_frequencies(const analysis::PeakSet& p) {
  std::vector<double> f;
  for (const auto& pk : p.peaks) f.push_back(pk.frequency_khz);
  return f;
}

}  // namespace detail

// Separation and coupling statistics for the configured straggling.
inline io::KeyValueReport cmd_implant(const ExperimentConfig& cfg, const fs::path& out_dir, unsigned workers) {
  const auto out = detail::prepare_out_dir(out_dir);
  const auto& im = cfg.implant;
  const auto separations = implant::sample_separations(im.straggling, im.samples, cfg.seed, workers);

  Histogram sep_hist = Histogram::empty(im.separation_bins);
  std::uint64_t below = 0;
  double sum = 0.0;
  for (double r : separations) {
    sep_hist.add(r);
    below += r < im.separation_threshold_nm;
    sum += r;
  }
  const double n = static_cast<double>(separations.size());
  const double p_below = static_cast<double>(below) / n;

  coupling::CouplingOptions copt;
  copt.model = cfg.coupling.model;
  copt.constants = cfg.coupling.constants;
  copt.spherical_mode = cfg.coupling.spherical_mode;
  copt.seed = cfg.seed;
  const auto nu = coupling::sample_couplings(separations, copt, workers);
  Histogram nu_hist = Histogram::empty(cfg.coupling.bins);
  for (double v : nu) nu_hist.add(v);
  const auto p_above = coupling::prob_coupling_above(nu, cfg.coupling.threshold_khz);

  std::ostringstream sep_csv, nu_csv, fid_csv;
  io::write_histogram_csv(sep_csv, sep_hist);
  io::write_histogram_csv(nu_csv, nu_hist);
  fid_csv << "t2_ms,nu_khz,fidelity\n";
  for (const auto& p : coupling::fidelity_map(cfg.coupling.fidelity_t2_ms, cfg.coupling.fidelity_nu_khz)) {
    fid_csv << io::fmt(p.t2_ms) << ',' << io::fmt(p.nu_khz) << ',' << io::fmt(p.fidelity) << '\n';
  }

  io::KeyValueReport r;
  r.add("samples", static_cast<std::uint64_t>(im.samples));
  r.add("seed", cfg.seed);
  r.add("mean_separation_nm", sum / n);
  r.add("separation_threshold_nm", im.separation_threshold_nm);
  r.add("p_separation_below", p_below);
  r.add("p_separation_below_stderr", std::sqrt(p_below * (1.0 - p_below) / n));
  r.add("coupling_threshold_khz", cfg.coupling.threshold_khz);
  r.add("p_coupling_above", p_above.value);
  r.add("p_coupling_above_stderr", p_above.std_error);
  r.add("coupling_at_threshold_separation_khz",
        coupling::coupling_frequency(im.separation_threshold_nm, cfg.coupling.model, cfg.coupling.constants));
  r.add("molecules_in_area", implant::molecules_in_area(im.fluence_per_cm2, im.area_um2));

  io::write_text_file((out / "separation_hist.csv").string(), sep_csv.str());
  io::write_text_file((out / "coupling_hist.csv").string(), nu_csv.str());
  io::write_text_file((out / "fidelity_map.csv").string(), fid_csv.str());
  io::write_text_file((out / "implant_summary.txt").string(), r.str());
  detail::write_manifest(out, cfg, "implant",
                         {"separation_hist.csv", "coupling_hist.csv", "fidelity_map.csv", "implant_summary.txt"});
  return r;
}

// Synthesises traces for `hahn`, `deer` or `ramsey`.
inline io::KeyValueReport cmd_simulate(const ExperimentConfig& cfg, const std::string& sequence_name,
                                       const fs::path& out_dir, unsigned workers) {
  if (sequence_name != "hahn" && sequence_name != "deer" && sequence_name != "ramsey") {
    throw UsageError("unknown sequence '" + sequence_name + "' (expected hahn, deer or ramsey)");
  }
  const auto reg = cfg.spin_register();
  const auto opt = detail::sequence_options(cfg);
  const auto& s = cfg.sequence;
  std::vector<std::pair<std::string, spinsim::Trace>> traces;

  if (sequence_name == "hahn") {
    const auto grid = detail::record_grid(s.hahn_step_us, s.hahn_record_us);
    traces.emplace_back("hahn.csv", spinsim::hahn_trace(reg, opt, cfg.decoherence, grid, workers));
  } else if (sequence_name == "deer") {
    const auto grid = detail::record_grid(s.echo_step_us, s.echo_record_us);
    auto reference = opt;
    reference.emitter_fidelity = 0.0;
    traces.emplace_back("deer.csv", spinsim::deer_trace(reg, opt, cfg.decoherence, grid, workers));
    traces.emplace_back("deer_reference.csv", spinsim::deer_trace(reg, reference, cfg.decoherence, grid, workers));
  } else {
    const auto grid = detail::record_grid(s.ramsey_step_us, s.ramsey_record_us);
    spinsim::RamseyPairOptions ro;
    ro.sequence = opt;
    ro.sequence.detuning_khz = s.ramsey_detuning_khz;
    ro.dark_spin_enabled = s.dark_spin_enabled;
    ro.with_emitter_pi = false;
    traces.emplace_back("ramsey_reference.csv", spinsim::ramsey_pair_trace(reg, ro, cfg.decoherence, grid, workers));
    ro.with_emitter_pi = true;
    traces.emplace_back("ramsey_flipped.csv", spinsim::ramsey_pair_trace(reg, ro, cfg.decoherence, grid, workers));
  }

  const auto out = detail::prepare_out_dir(out_dir);
  io::KeyValueReport r;
  r.add("sequence", sequence_name);
  r.add("sensor", static_cast<int>(s.sensor));
  r.add("emitter", static_cast<int>(s.emitter));
  std::vector<std::string> names;
  for (const auto& [name, trace] : traces) {
    io::write_text_file((out / name).string(), io::trace_csv(trace));
    r.add("trace", name);
    names.push_back(name);
  }
  r.add("points", static_cast<std::uint64_t>(traces.front().second.size()));
  detail::write_manifest(out, cfg, "simulate " + sequence_name, names);
  return r;
}

// Modes: fit (one trace), spectrum (one trace), shift (reference + flipped
// Ramsey traces), deer (one DEER trace).
inline io::KeyValueReport cmd_analyze(const ExperimentConfig& cfg, const std::string& mode,
                                      const std::vector<std::string>& trace_paths, const fs::path& out_dir) {
  const std::size_t needed = mode == "shift" ? 2 : 1;
  if (mode != "fit" && mode != "spectrum" && mode != "shift" && mode != "deer") {
    throw UsageError("unknown analysis mode '" + mode + "' (expected fit, spectrum, shift or deer)");
  }
  if (trace_paths.size() != needed) {
    throw UsageError("mode '" + mode + "' takes " + std::to_string(needed) + " trace file(s)");
  }
  std::vector<spinsim::Trace> traces;
  for (const auto& p : trace_paths) traces.push_back(io::read_trace_file(p));

  const auto& a = cfg.analysis;
  const auto fid_mode = a.mixture_fidelity ? analysis::FidelityMode::Mixture : analysis::FidelityMode::IntensityRatio;
  io::KeyValueReport r;
  r.add("mode", mode);
  std::vector<std::pair<std::string, std::string>> files;

  if (mode == "fit") {
    analysis::FitOptions fo;
    fo.fixed_alpha = a.fixed_alpha;
    const auto fit = analysis::fit_stretched_exp(traces[0], fo);
    r.add("a", fit.a).add("a_err", fit.a_err);
    r.add("b", fit.b).add("b_err", fit.b_err);
    r.add("t2_ms", fit.t2_ms).add("t2_err_ms", fit.t2_err_ms);
    r.add("alpha", fit.alpha).add("alpha_err", fit.alpha_err);
    r.add("residual_norm", fit.residual_norm);
    r.add("iterations", fit.iterations);
    files.emplace_back("fit_report.txt", "");
  } else if (mode == "deer") {
    const auto m = analysis::extract_deer_coupling(traces[0]);
    r.add("modulation_frequency_khz", m.frequency_khz);
    r.add("coupling_khz", m.coupling_khz);
    r.add("coupling_uncertainty_khz", m.uncertainty_khz);
    files.emplace_back("deer_report.txt", "");
  } else {
    const auto so = detail::spectrum_options(a);
    const auto po = detail::peak_options(a);
    std::vector<analysis::PeakSet> peak_sets;
    const char* labels[] = {"reference", "flipped"};
    for (std::size_t i = 0; i < traces.size(); ++i) {
      const auto spec = analysis::power_spectrum(traces[i], so);
      const auto peaks = analysis::find_peaks(spec, po);
      const std::string tag = mode == "shift" ? std::string("_") + labels[i] : "";
      files.emplace_back("spectrum" + tag + ".csv", detail::spectrum_csv(spec));
      files.emplace_back("peaks" + tag + ".csv", detail::peaks_csv(peaks));
      const auto mains = analysis::main_peaks(peaks, a.expected_shift_khz);
      const std::string prefix = mode == "shift" ? std::string(labels[i]) + "_" : "";
      r.add(prefix + "resolution_khz", spec.resolution_khz);
      r.add(prefix + "peaks_khz", detail::join(detail::peak_frequencies(peaks)));
      r.add(prefix + "main_peaks_khz", detail::join(detail::peak_frequencies(mains)));
      r.add(prefix + "splittings_khz", detail::join(analysis::adjacent_splittings(mains)));
      if (peaks.size() > 0) {
        const auto fe = analysis::estimate_pulse_fidelity(peaks, a.expected_shift_khz, fid_mode);
        r.add(prefix + "fidelity", fe.fidelity);
        r.add(prefix + "fidelity_uncertainty", fe.uncertainty);
        r.add(prefix + "secondary_ratio", fe.ratio);
      }
      peak_sets.push_back(mains);
    }
    if (mode == "shift") {
      const auto shift = analysis::extract_coupling(peak_sets[0], peak_sets[1]);
      r.add("shift_khz", shift.shift_khz);
      r.add("shift_uncertainty_khz", shift.uncertainty_khz);
      r.add("matched_pairs", static_cast<std::uint64_t>(shift.pairs.size()));
    }
    files.emplace_back(mode + "_report.txt", "");
  }

  const auto out = detail::prepare_out_dir(out_dir);
  std::vector<std::string> names;
  for (auto& [name, content] : files) {
    io::write_text_file((out / name).string(), content.empty() ? r.str() : content);
    names.push_back(name);
  }
  detail::write_manifest(out, cfg, "analyze " + mode, names);
  return r;
}

// Creation-efficiency report for every configured survey; with two surveys
// the ratios of the first to the second are added.
inline io::KeyValueReport cmd_yield(const ExperimentConfig& cfg, const std::optional<fs::path>& out_dir) {
  const auto& y = cfg.yield;
  if (y.surveys.empty()) throw ConfigError("yield: no surveys configured");
  yield::YieldOptions opt;
  opt.unresolvable_fraction = y.unresolvable_fraction;
  opt.rounding = y.rounding;
  io::KeyValueReport r;
  r.add("rounding", y.rounding == yield::PairRounding::Floor ? "floor" : "exact");
  r.add("unresolvable_fraction", y.unresolvable_fraction);
  std::vector<yield::YieldReport> reports;
  for (const auto& s : y.surveys) {
    const auto rep = yield::yield_report(s.counts, opt, y.external_uncertainty);
    const std::string p = s.name + ".";
    r.add(p + "n_molecules", s.counts.n_molecules);
    r.add(p + "corrected_pairs", rep.corrected_pairs);
    r.add(p + "reported_pairs", rep.reported_pairs);
    r.add(p + "pair_yield", rep.pair_yield.value);
    r.add(p + "pair_yield_uncertainty", rep.pair_yield.uncertainty);
    r.add(p + "single_yield", rep.single_yield.value);
    r.add(p + "single_yield_uncertainty", rep.single_yield.uncertainty);
    reports.push_back(rep);
  }
  if (reports.size() == 2) {
    if (reports[1].single_yield.value > 0) r.add("single_yield_ratio", reports[0].single_yield.value / reports[1].single_yield.value);
    if (reports[1].pair_yield.value > 0) r.add("pair_yield_ratio", reports[0].pair_yield.value / reports[1].pair_yield.value);
    // Same ratio before display rounding; the two differ when Floor moves one count more than the other.
    const auto& c0 = y.surveys[0].counts;
    const auto& c1 = y.surveys[1].counts;
    if (reports[1].corrected_pairs > 0 && c0.n_molecules > 0) {
      r.add("pair_yield_ratio_unrounded",
            (reports[0].corrected_pairs / c0.n_molecules) / (reports[1].corrected_pairs / c1.n_molecules));
    }
  }
  r.add("external_uncertainty", y.external_uncertainty);
  if (out_dir) {
    const auto out = detail::prepare_out_dir(*out_dir);
    io::write_text_file((out / "yield_report.txt").string(), r.str());
    detail::write_manifest(out, cfg, "yield", {"yield_report.txt"});
  }
  return r;
}

}  // namespace nvpair::cli
