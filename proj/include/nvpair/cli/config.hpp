#pragma once

// Experiment configuration: one JSON document per experiment. Every field is
// optional and defaults to the molecular-implantation scenario (10 keV per
// atom straggling, the 55 kHz NV pair with its dark spin, the survey counts).

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "nvpair/coupling.hpp"
#include "nvpair/errors.hpp"
#include "nvpair/histogram.hpp"
#include "nvpair/implant.hpp"
#include "nvpair/io.hpp"
#include "nvpair/spinsim.hpp"
#include "nvpair/yield.hpp"

namespace nvpair::cli {

using nlohmann::json;

class ConfigError : public ParameterError {
 public:
  using ParameterError::ParameterError;
};

struct ImplantSection {
  implant::StragglingParams straggling{};
  std::size_t samples = 1'000'000;
  BinSpec separation_bins{0.0, 30.0, 60};
  double separation_threshold_nm = 11.0;
  double fluence_per_cm2 = 2.5e7;
  double area_um2 = 625.0;
};

struct CouplingSection {
  coupling::DipoleConstants constants{};
  coupling::AngularModel model{};
  coupling::SphericalMode spherical_mode = coupling::SphericalMode::PerSampleAngle;
  double threshold_khz = 45.0;
  BinSpec bins = coupling::default_coupling_bins();
  std::vector<double> fidelity_t2_ms{0.01, 0.02, 0.05, 0.1, 0.2, 0.5, 0.65, 1.0};
  std::vector<double> fidelity_nu_khz{5, 10, 20, 30, 45, 55, 59, 100, 200};
};

struct SequenceSection {
  std::size_t sensor = 0;
  std::size_t emitter = 1;
  spinsim::Transition sensor_transition = spinsim::Transition::MinusOne;
  spinsim::Transition emitter_transition = spinsim::Transition::MinusOne;
  double ramsey_detuning_khz = spinsim::defaults::kRamseyDetuningKhz;
  double sensor_fidelity = 1.0;
  double emitter_fidelity = 1.0;
  bool dark_spin_enabled = true;
  double ramsey_step_us = spinsim::defaults::kRamseyStepUs;
  double ramsey_record_us = spinsim::defaults::kRamseyRecordUs;
  double echo_step_us = spinsim::defaults::kDeerStepUs;
  double echo_record_us = spinsim::defaults::kDeerRecordUs;
  double hahn_step_us = 10.0;
  double hahn_record_us = 2500.0;
};

struct AnalysisSection {
  int zero_pad_factor = 4;
  bool cosine_taper = false;
  double min_relative_power = 0.02;
  double min_separation_khz = 20.0;
  double expected_shift_khz = 55.0;
  bool mixture_fidelity = false;
  std::optional<double> fixed_alpha{};
};

struct NamedSurvey {
  std::string name;
  yield::SurveyCounts counts;
};

struct YieldSection {
  std::vector<NamedSurvey> surveys{{"co_implanted", {100, 5, 10, 156}}, {"n2_only", {62, 1, 0, 156}}};
  double unresolvable_fraction = yield::kUnresolvableFraction;
  yield::PairRounding rounding = yield::PairRounding::Floor;
  std::string external_uncertainty = "co_implanted single 0.09, pair 0.02; n2_only single 0.07";
};

struct ExperimentConfig {
  std::uint64_t seed = 1;
  ImplantSection implant{};
  CouplingSection coupling{};
  std::optional<spinsim::SpinRegister> register_override{};  // otherwise the default pair for the chosen sensor
  double field_g = spinsim::defaults::kRamseyFieldG;
  SequenceSection sequence{};
  spinsim::DecoherenceModel decoherence = spinsim::default_decoherence();
  AnalysisSection analysis{};
  YieldSection yield{};

  spinsim::SpinRegister spin_register() const {
    return register_override ? *register_override : spinsim::default_register(sequence.sensor, field_g);
  }
};

namespace detail {

inline void check_keys(const json& j, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) throw ConfigError(where + ": expected an object");
  const std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [k, _] : j.items()) {
    if (!ok.count(k)) throw ConfigError(where + ": unknown field '" + k + "'");
  }
}

template <typename T>
void read(const json& j, const char* key, T& out, const std::string& where) {
  if (!j.contains(key)) return;
  try {
    out = j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError(where + "." + key + ": wrong type");
  }
}

inline void read_positive(const json& j, const char* key, double& out, const std::string& where) {
  read(j, key, out, where);
  if (!(out > 0.0)) throw ConfigError(where + "." + key + " must be > 0");
}

inline void read_non_negative(const json& j, const char* key, double& out, const std::string& where) {
  read(j, key, out, where);
  if (!(out >= 0.0)) throw ConfigError(where + "." + key + " must be >= 0");
}

inline BinSpec read_bins(const json& j, BinSpec b, const std::string& where) {
  check_keys(j, where, {"lo", "hi", "n"});
  read(j, "lo", b.lo, where);
  read(j, "hi", b.hi, where);
  read(j, "n", b.n_bins, where);
  try {
    b.validate();
  } catch (const ParameterError& e) {
    throw ConfigError(where + ": " + e.what());
  }
  return b;
}

inline json bins_json(const BinSpec& b) { return {{"lo", b.lo}, {"hi", b.hi}, {"n", b.n_bins}}; }

inline spinsim::Transition read_transition(const json& j, const char* key, spinsim::Transition t,
                                           const std::string& where) {
  if (!j.contains(key)) return t;
  const auto s = j.at(key).get<std::string>();
  if (s == "minus_one") return spinsim::Transition::MinusOne;
  if (s == "plus_one") return spinsim::Transition::PlusOne;
  throw ConfigError(where + "." + key + ": expected 'minus_one' or 'plus_one'");
}

inline std::string transition_name(spinsim::Transition t) {
  return t == spinsim::Transition::MinusOne ? "minus_one" : "plus_one";
}

inline std::string half_spin_name(spinsim::HalfSpinInit h) {
  switch (h) {
    case spinsim::HalfSpinInit::Mixed:
      return "mixed";
    case spinsim::HalfSpinInit::Up:
      return "up";
    case spinsim::HalfSpinInit::Down:
      return "down";
  }
  return "mixed";
}

inline spinsim::SpinRegister read_register(const json& j) {
  const std::string where = "register";
  check_keys(j, where, {"nv", "dark_spin", "couplings_khz"});
  spinsim::SpinRegister reg;
  if (!j.contains("nv") || !j.at("nv").is_array()) throw ConfigError("register.nv: expected an array");
  for (const auto& n : j.at("nv")) {
    const std::string w = "register.nv[]";
    check_keys(n, w, {"zero_field_splitting_ghz", "gyromagnetic_mhz_per_g", "axis_field_g", "hyperfine_mhz", "nucleus_init"});
    spinsim::NvSpin s;
    read_positive(n, "zero_field_splitting_ghz", s.zero_field_splitting_ghz, w);
    read(n, "gyromagnetic_mhz_per_g", s.gyromagnetic_mhz_per_g, w);
    read(n, "axis_field_g", s.axis_field_g, w);
    if (n.contains("hyperfine_mhz") && !n.at("hyperfine_mhz").is_null()) {
      double a = 0.0;
      read(n, "hyperfine_mhz", a, w);
      s.hyperfine_mhz = a;
    }
    if (n.contains("nucleus_init")) {
      const auto v = n.at("nucleus_init").get<std::string>();
      if (v == "mixed") s.nucleus_init = spinsim::HalfSpinInit::Mixed;
      else if (v == "up") s.nucleus_init = spinsim::HalfSpinInit::Up;
      else if (v == "down") s.nucleus_init = spinsim::HalfSpinInit::Down;
      else throw ConfigError(w + ".nucleus_init: expected mixed, up or down");
    }
    reg.nv_spins.push_back(s);
  }
  read(j, "dark_spin", reg.has_dark_spin, where);
  reg.resize_couplings();
  if (j.contains("couplings_khz")) {
    const auto& m = j.at("couplings_khz");
    const auto n = reg.electron_count();
    if (!m.is_array() || m.size() != n) throw ConfigError("register.couplings_khz: expected a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
    for (std::size_t r = 0; r < n; ++r) {
      if (!m[r].is_array() || m[r].size() != n) throw ConfigError("register.couplings_khz: ragged matrix");
      for (std::size_t c = 0; c < n; ++c) {
        reg.couplings_khz(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = m[r][c].get<double>();
      }
    }
  }
  try {
    reg.validate();
  } catch (const ParameterError& e) {
    throw ConfigError(std::string("register: ") + e.what());
  }
  return reg;
}

inline json register_json(const spinsim::SpinRegister& reg) {
  json nv = json::array();
  for (const auto& s : reg.nv_spins) {
    nv.push_back({{"zero_field_splitting_ghz", s.zero_field_splitting_ghz},
                  {"gyromagnetic_mhz_per_g", s.gyromagnetic_mhz_per_g},
                  {"axis_field_g", s.axis_field_g},
                  {"hyperfine_mhz", s.hyperfine_mhz ? json(*s.hyperfine_mhz) : json(nullptr)},
                  {"nucleus_init", half_spin_name(s.nucleus_init)}});
  }
  json m = json::array();
  for (Eigen::Index r = 0; r < reg.couplings_khz.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < reg.couplings_khz.cols(); ++c) row.push_back(reg.couplings_khz(r, c));
    m.push_back(row);
  }
  return {{"nv", nv}, {"dark_spin", reg.has_dark_spin}, {"couplings_khz", m}};
}

inline coupling::AngularModel read_angular(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "spherical_average") return coupling::AngularModel::spherical_average();
    if (s == "maximum") return coupling::AngularModel::maximum();
  } else if (j.is_object() && j.contains("fixed_angle_rad")) {
    check_keys(j, "coupling.angular_model", {"fixed_angle_rad"});
    try {
      return coupling::AngularModel::fixed_angle(j.at("fixed_angle_rad").get<double>());
    } catch (const ParameterError& e) {
      throw ConfigError(std::string("coupling.angular_model: ") + e.what());
    }
  }
  throw ConfigError("coupling.angular_model: expected 'spherical_average', 'maximum' or {\"fixed_angle_rad\": x}");
}

inline json angular_json(const coupling::AngularModel& m) {
  switch (m.kind) {
    case coupling::AngularModel::Kind::SphericalAverage:
      return "spherical_average";
    case coupling::AngularModel::Kind::Maximum:
      return "maximum";
    case coupling::AngularModel::Kind::FixedAngle:
      return {{"fixed_angle_rad", m.theta}};
  }
  return "spherical_average";
}

inline yield::SurveyCounts read_counts(const json& j, yield::SurveyCounts c, const std::string& where) {
  read_non_negative(j, "n_single_nv15", c.n_single_nv15, where);
  read_non_negative(j, "n_pairs_observed", c.n_pairs_observed, where);
  read_non_negative(j, "n_nv14", c.n_nv14, where);
  read_non_negative(j, "n_molecules", c.n_molecules, where);
  return c;
}

}  // namespace detail

inline ExperimentConfig parse_config(const json& root) {
  using namespace detail;
  ExperimentConfig cfg;
  check_keys(root, "config", {"seed", "implant", "coupling", "register", "field_g", "sequence", "decoherence", "analysis", "yield"});
  read(root, "seed", cfg.seed, "config");
  read(root, "field_g", cfg.field_g, "config");

  if (root.contains("implant")) {
    const auto& j = root.at("implant");
    const std::string w = "implant";
    check_keys(j, w, {"mean_depth_nm", "sigma_depth_nm", "sigma_lateral_nm", "channeling_scale", "samples",
                      "separation_bins", "separation_threshold_nm", "fluence_per_cm2", "area_um2"});
    auto& im = cfg.implant;
    read_non_negative(j, "mean_depth_nm", im.straggling.mean_depth, w);
    read_positive(j, "sigma_depth_nm", im.straggling.sigma_depth, w);
    read_positive(j, "sigma_lateral_nm", im.straggling.sigma_lateral, w);
    read_positive(j, "channeling_scale", im.straggling.channeling_scale, w);
    read(j, "samples", im.samples, w);
    if (im.samples == 0) throw ConfigError("implant.samples must be >= 1");
    if (j.contains("separation_bins")) im.separation_bins = read_bins(j.at("separation_bins"), im.separation_bins, w + ".separation_bins");
    read_positive(j, "separation_threshold_nm", im.separation_threshold_nm, w);
    read_non_negative(j, "fluence_per_cm2", im.fluence_per_cm2, w);
    read_non_negative(j, "area_um2", im.area_um2, w);
  }

  if (root.contains("coupling")) {
    const auto& j = root.at("coupling");
    const std::string w = "coupling";
    check_keys(j, w, {"d_dip_numerator", "angular_model", "spherical_mode", "threshold_khz", "bins", "fidelity_t2_ms", "fidelity_nu_khz"});
    auto& c = cfg.coupling;
    read_positive(j, "d_dip_numerator", c.constants.d_dip_numerator, w);
    if (j.contains("angular_model")) c.model = read_angular(j.at("angular_model"));
    if (j.contains("spherical_mode")) {
      const auto s = j.at("spherical_mode").get<std::string>();
      if (s == "per_sample") c.spherical_mode = coupling::SphericalMode::PerSampleAngle;
      else if (s == "averaged") c.spherical_mode = coupling::SphericalMode::AveragedFactor;
      else throw ConfigError("coupling.spherical_mode: expected 'per_sample' or 'averaged'");
    }
    read_positive(j, "threshold_khz", c.threshold_khz, w);
    if (j.contains("bins")) c.bins = read_bins(j.at("bins"), c.bins, w + ".bins");
    read(j, "fidelity_t2_ms", c.fidelity_t2_ms, w);
    read(j, "fidelity_nu_khz", c.fidelity_nu_khz, w);
    for (double v : c.fidelity_t2_ms) if (!(v > 0)) throw ConfigError("coupling.fidelity_t2_ms entries must be > 0");
    for (double v : c.fidelity_nu_khz) if (!(v > 0)) throw ConfigError("coupling.fidelity_nu_khz entries must be > 0");
  }

  if (root.contains("register")) cfg.register_override = read_register(root.at("register"));

  if (root.contains("sequence")) {
    const auto& j = root.at("sequence");
    const std::string w = "sequence";
    check_keys(j, w, {"sensor", "emitter", "sensor_transition", "emitter_transition", "ramsey_detuning_khz",
                      "sensor_fidelity", "emitter_fidelity", "dark_spin_enabled", "ramsey_step_us", "ramsey_record_us",
                      "echo_step_us", "echo_record_us", "hahn_step_us", "hahn_record_us"});
    auto& s = cfg.sequence;
    read(j, "sensor", s.sensor, w);
    read(j, "emitter", s.emitter, w);
    s.sensor_transition = read_transition(j, "sensor_transition", s.sensor_transition, w);
    s.emitter_transition = read_transition(j, "emitter_transition", s.emitter_transition, w);
    read(j, "ramsey_detuning_khz", s.ramsey_detuning_khz, w);
    read(j, "sensor_fidelity", s.sensor_fidelity, w);
    read(j, "emitter_fidelity", s.emitter_fidelity, w);
    for (double f : {s.sensor_fidelity, s.emitter_fidelity}) {
      if (!(f >= 0.0 && f <= 1.0)) throw ConfigError("sequence fidelities must lie in [0, 1]");
    }
    read(j, "dark_spin_enabled", s.dark_spin_enabled, w);
    read_positive(j, "ramsey_step_us", s.ramsey_step_us, w);
    read_positive(j, "ramsey_record_us", s.ramsey_record_us, w);
    read_positive(j, "echo_step_us", s.echo_step_us, w);
    read_positive(j, "echo_record_us", s.echo_record_us, w);
    read_positive(j, "hahn_step_us", s.hahn_step_us, w);
    read_positive(j, "hahn_record_us", s.hahn_record_us, w);
  }
  if (cfg.sequence.sensor > 1 || cfg.sequence.emitter > 1 || cfg.sequence.sensor == cfg.sequence.emitter) {
    throw ConfigError("sequence.sensor and sequence.emitter must be distinct NV indices (0 or 1)");
  }

  if (root.contains("decoherence")) {
    const auto& j = root.at("decoherence");
    if (!j.is_array()) throw ConfigError("decoherence: expected an array (one entry per NV)");
    cfg.decoherence.per_nv.clear();
    for (const auto& d : j) {
      const std::string w = "decoherence[]";
      check_keys(d, w, {"t2_echo_ms", "alpha", "t2_star_us", "beta"});
      spinsim::NvDecoherence nd{};
      read_positive(d, "t2_echo_ms", nd.t2_echo_ms, w);
      read_positive(d, "alpha", nd.alpha, w);
      read_positive(d, "t2_star_us", nd.t2_star_us, w);
      read_positive(d, "beta", nd.beta, w);
      cfg.decoherence.per_nv.push_back(nd);
    }
  }

  if (root.contains("analysis")) {
    const auto& j = root.at("analysis");
    const std::string w = "analysis";
    check_keys(j, w, {"zero_pad_factor", "window", "min_relative_power", "min_separation_khz", "expected_shift_khz",
                      "fidelity_mode", "fixed_alpha"});
    auto& a = cfg.analysis;
    read(j, "zero_pad_factor", a.zero_pad_factor, w);
    if (a.zero_pad_factor < 1) throw ConfigError("analysis.zero_pad_factor must be >= 1");
    if (j.contains("window")) {
      const auto s = j.at("window").get<std::string>();
      if (s != "none" && s != "cosine_taper") throw ConfigError("analysis.window: expected 'none' or 'cosine_taper'");
      a.cosine_taper = s == "cosine_taper";
    }
    read_non_negative(j, "min_relative_power", a.min_relative_power, w);
    read_non_negative(j, "min_separation_khz", a.min_separation_khz, w);
    read_positive(j, "expected_shift_khz", a.expected_shift_khz, w);
    if (j.contains("fidelity_mode")) {
      const auto s = j.at("fidelity_mode").get<std::string>();
      if (s != "intensity_ratio" && s != "mixture") throw ConfigError("analysis.fidelity_mode: expected 'intensity_ratio' or 'mixture'");
      a.mixture_fidelity = s == "mixture";
    }
    if (j.contains("fixed_alpha") && !j.at("fixed_alpha").is_null()) {
      double v = 0.0;
      read_positive(j, "fixed_alpha", v, w);
      a.fixed_alpha = v;
    }
  }

  if (root.contains("yield")) {
    const auto& j = root.at("yield");
    const std::string w = "yield";
    check_keys(j, w, {"surveys", "unresolvable_fraction", "rounding", "external_uncertainty"});
    auto& y = cfg.yield;
    if (j.contains("surveys")) {
      y.surveys.clear();
      for (const auto& s : j.at("surveys")) {
        check_keys(s, "yield.surveys[]", {"name", "n_single_nv15", "n_pairs_observed", "n_nv14", "n_molecules"});
        NamedSurvey ns;
        read(s, "name", ns.name, "yield.surveys[]");
        if (ns.name.empty()) ns.name = "survey" + std::to_string(y.surveys.size());
        ns.counts = read_counts(s, {}, "yield.surveys[]");
        y.surveys.push_back(ns);
      }
    }
    read(j, "unresolvable_fraction", y.unresolvable_fraction, w);
    if (!(y.unresolvable_fraction >= 0.0 && y.unresolvable_fraction < 1.0)) {
      throw ConfigError("yield.unresolvable_fraction must lie in [0, 1)");
    }
    if (j.contains("rounding")) {
      const auto s = j.at("rounding").get<std::string>();
      if (s == "floor") y.rounding = yield::PairRounding::Floor;
      else if (s == "exact") y.rounding = yield::PairRounding::Exact;
      else throw ConfigError("yield.rounding: expected 'floor' or 'exact'");
    }
    read(j, "external_uncertainty", y.external_uncertainty, w);
  }
  return cfg;
}

// Full effective configuration, used for the manifest hash.
inline json to_json(const ExperimentConfig& cfg) {
  using namespace detail;
  json surveys = json::array();
  for (const auto& s : cfg.yield.surveys) {
    surveys.push_back({{"name", s.name},
                       {"n_single_nv15", s.counts.n_single_nv15},
                       {"n_pairs_observed", s.counts.n_pairs_observed},
                       {"n_nv14", s.counts.n_nv14},
                       {"n_molecules", s.counts.n_molecules}});
  }
  json deco = json::array();
  for (const auto& d : cfg.decoherence.per_nv) {
    deco.push_back({{"t2_echo_ms", d.t2_echo_ms}, {"alpha", d.alpha}, {"t2_star_us", d.t2_star_us}, {"beta", d.beta}});
  }
  const auto& im = cfg.implant;
  const auto& c = cfg.coupling;
  const auto& s = cfg.sequence;
  const auto& a = cfg.analysis;
  return {
      {"seed", cfg.seed},
      {"field_g", cfg.field_g},
      {"implant",
       {{"mean_depth_nm", im.straggling.mean_depth},
        {"sigma_depth_nm", im.straggling.sigma_depth},
        {"sigma_lateral_nm", im.straggling.sigma_lateral},
        {"channeling_scale", im.straggling.channeling_scale},
        {"samples", im.samples},
        {"separation_bins", bins_json(im.separation_bins)},
        {"separation_threshold_nm", im.separation_threshold_nm},
        {"fluence_per_cm2", im.fluence_per_cm2},
        {"area_um2", im.area_um2}}},
      {"coupling",
       {{"d_dip_numerator", c.constants.d_dip_numerator},
        {"angular_model", angular_json(c.model)},
        {"spherical_mode", c.spherical_mode == coupling::SphericalMode::PerSampleAngle ? "per_sample" : "averaged"},
        {"threshold_khz", c.threshold_khz},
        {"bins", bins_json(c.bins)},
        {"fidelity_t2_ms", c.fidelity_t2_ms},
        {"fidelity_nu_khz", c.fidelity_nu_khz}}},
      {"register", register_json(cfg.spin_register())},
      {"sequence",
       {{"sensor", s.sensor},
        {"emitter", s.emitter},
        {"sensor_transition", transition_name(s.sensor_transition)},
        {"emitter_transition", transition_name(s.emitter_transition)},
        {"ramsey_detuning_khz", s.ramsey_detuning_khz},
        {"sensor_fidelity", s.sensor_fidelity},
        {"emitter_fidelity", s.emitter_fidelity},
        {"dark_spin_enabled", s.dark_spin_enabled},
        {"ramsey_step_us", s.ramsey_step_us},
        {"ramsey_record_us", s.ramsey_record_us},
        {"echo_step_us", s.echo_step_us},
        {"echo_record_us", s.echo_record_us},
        {"hahn_step_us", s.hahn_step_us},
        {"hahn_record_us", s.hahn_record_us}}},
      {"decoherence", deco},
      {"analysis",
       {{"zero_pad_factor", a.zero_pad_factor},
        {"window", a.cosine_taper ? "cosine_taper" : "none"},
        {"min_relative_power", a.min_relative_power},
        {"min_separation_khz", a.min_separation_khz},
        {"expected_shift_khz", a.expected_shift_khz},
        {"fidelity_mode", a.mixture_fidelity ? "mixture" : "intensity_ratio"},
        {"fixed_alpha", a.fixed_alpha ? json(*a.fixed_alpha) : json(nullptr)}}},
      {"yield",
       {{"surveys", surveys},
        {"unresolvable_fraction", cfg.yield.unresolvable_fraction},
        {"rounding", cfg.yield.rounding == yield::PairRounding::Floor ? "floor" : "exact"},
        {"external_uncertainty", cfg.yield.external_uncertainty}}},
  };
}

inline ExperimentConfig load_config_file(const std::string& path) {
  std::string text;
  try {
    text = io::read_text_file(path);
  } catch (const InputError&) {
    throw ConfigError("cannot read config file: " + path);
  }
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("config " + path + ": " + e.what());
  }
  try {
    return parse_config(j);
  } catch (const json::exception& e) {
    throw ConfigError("config " + path + ": " + e.what());
  }
}

// FNV-1a over the canonical dump.
inline std::uint64_t config_hash(const ExperimentConfig& cfg) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : to_json(cfg).dump()) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace nvpair::cli
