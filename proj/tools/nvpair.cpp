// nvpair: command-line front end (implant, simulate, analyze, yield).

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nvpair/cli/commands.hpp"

namespace {

using nvpair::cli::ExperimentConfig;

struct Common {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> samples;
  std::string out = "out";
  unsigned workers = 0;
};

ExperimentConfig load(const Common& c) {
  ExperimentConfig cfg = c.config_path.empty() ? ExperimentConfig{} : nvpair::cli::load_config_file(c.config_path);
  if (c.seed) cfg.seed = *c.seed;
  if (c.samples) {
    if (*c.samples == 0) throw nvpair::cli::UsageError("--samples must be >= 1");
    cfg.implant.samples = *c.samples;
  }
  return cfg;
}

unsigned workers(const Common& c) { return c.workers == 0 ? nvpair::default_workers() : c.workers; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"NV pair implantation, spin-register simulation and analysis toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  Common common;
  app.add_option("--config", common.config_path, "Experiment config (JSON)");
  app.add_option("--seed", common.seed, "RNG seed (overrides config)");
  app.add_option("--samples", common.samples, "Monte Carlo samples (overrides config)");
  app.add_option("--out", common.out, "Output directory");
  app.add_option("--workers", common.workers, "Worker threads (0 = all cores); outputs do not depend on it");

  auto* implant_cmd = app.add_subcommand("implant", "Separation and coupling statistics of implanted pairs");
  std::optional<double> threshold_nm, sigma_scale;
  implant_cmd->add_option("--threshold-nm", threshold_nm, "Separation threshold for the summary");
  implant_cmd->add_option("--channeling-scale", sigma_scale, "Scale factor on both straggle widths");

  auto* simulate_cmd = app.add_subcommand("simulate", "Synthesise Hahn, DEER or Ramsey traces");
  std::string sequence_name;
  std::optional<std::size_t> sensor, emitter;
  std::optional<double> emitter_fidelity, detuning;
  bool no_dark = false;
  simulate_cmd->add_option("sequence", sequence_name, "hahn | deer | ramsey")->required();
  simulate_cmd->add_option("--sensor", sensor, "Sensor NV index");
  simulate_cmd->add_option("--emitter", emitter, "Emitter NV index");
  simulate_cmd->add_option("--emitter-fidelity", emitter_fidelity, "Emitter pi-pulse fidelity");
  simulate_cmd->add_option("--detuning-khz", detuning, "Ramsey carrier detuning from the sensor line centre");
  simulate_cmd->add_flag("--no-dark-spin", no_dark, "Drop the dark spin from the register");

  auto* analyze_cmd = app.add_subcommand("analyze", "Fit, spectrum, shift or DEER analysis of trace CSVs");
  std::string mode = "spectrum";
  std::vector<std::string> paths;
  std::optional<double> fixed_alpha;
  bool mixture = false;
  analyze_cmd->add_option("--mode", mode, "fit | spectrum | shift | deer");
  analyze_cmd->add_option("traces", paths, "Trace CSV file(s)")->required();
  analyze_cmd->add_option("--fixed-alpha", fixed_alpha, "Hold the stretch exponent fixed");
  analyze_cmd->add_flag("--mixture", mixture, "Invert secondary peaks with the mixture model");

  auto* yield_cmd = app.add_subcommand("yield", "Creation-efficiency report");
  std::optional<double> singles, pairs, nv14, molecules, fluence, area;
  std::optional<std::string> rounding;
  yield_cmd->add_option("--singles", singles, "Observed single 15NV centres");
  yield_cmd->add_option("--pairs", pairs, "Observed 15NV-15NV pairs");
  yield_cmd->add_option("--nv14", nv14, "Observed 14NV centres");
  yield_cmd->add_option("--molecules", molecules, "Implanted molecules in the surveyed area");
  yield_cmd->add_option("--fluence", fluence, "Fluence per cm^2 (with --area, replaces --molecules)");
  yield_cmd->add_option("--area", area, "Surveyed area in um^2");
  yield_cmd->add_option("--rounding", rounding, "floor | exact");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return nvpair::cli::kUsage;
  }

  return nvpair::cli::run_guarded([&] {
    ExperimentConfig cfg = load(common);
    if (implant_cmd->parsed()) {
      if (threshold_nm) {
        if (!(*threshold_nm > 0)) throw nvpair::cli::UsageError("--threshold-nm must be > 0");
        cfg.implant.separation_threshold_nm = *threshold_nm;
      }
      if (sigma_scale) {
        if (!(*sigma_scale > 0)) throw nvpair::cli::UsageError("--channeling-scale must be > 0");
        cfg.implant.straggling.channeling_scale = *sigma_scale;
      }
      nvpair::cli::cmd_implant(cfg, common.out, workers(common)).write(std::cout);
    } else if (simulate_cmd->parsed()) {
      if (sensor) cfg.sequence.sensor = *sensor;
      if (emitter) cfg.sequence.emitter = *emitter;
      else if (sensor) cfg.sequence.emitter = 1 - std::min<std::size_t>(*sensor, 1);
      if (cfg.sequence.sensor > 1 || cfg.sequence.emitter > 1 || cfg.sequence.sensor == cfg.sequence.emitter) {
        throw nvpair::cli::UsageError("--sensor/--emitter must be distinct NV indices (0 or 1)");
      }
      if (emitter_fidelity) {
        if (!(*emitter_fidelity >= 0 && *emitter_fidelity <= 1)) throw nvpair::cli::UsageError("--emitter-fidelity must lie in [0, 1]");
        cfg.sequence.emitter_fidelity = *emitter_fidelity;
      }
      if (detuning) cfg.sequence.ramsey_detuning_khz = *detuning;
      if (no_dark) cfg.sequence.dark_spin_enabled = false;
      nvpair::cli::cmd_simulate(cfg, sequence_name, common.out, workers(common)).write(std::cout);
    } else if (analyze_cmd->parsed()) {
      if (fixed_alpha) {
        if (!(*fixed_alpha > 0)) throw nvpair::cli::UsageError("--fixed-alpha must be > 0");
        cfg.analysis.fixed_alpha = fixed_alpha;
      }
      if (mixture) cfg.analysis.mixture_fidelity = true;
      nvpair::cli::cmd_analyze(cfg, mode, paths, common.out).write(std::cout);
    } else if (yield_cmd->parsed()) {
      const bool from_flags = singles || pairs || nv14 || molecules || fluence || area;
      if (from_flags) {
        nvpair::yield::SurveyCounts c{singles.value_or(0), pairs.value_or(0), nv14.value_or(0), 0};
        if (fluence || area) {
          if (!fluence || !area) throw nvpair::cli::UsageError("--fluence and --area go together");
          c.n_molecules = nvpair::implant::molecules_in_area(*fluence, *area);
        } else {
          c.n_molecules = molecules.value_or(0);
        }
        c.validate();
        cfg.yield.surveys = {{"survey", c}};
        cfg.yield.external_uncertainty.clear();
      }
      if (rounding) {
        if (*rounding == "floor") cfg.yield.rounding = nvpair::yield::PairRounding::Floor;
        else if (*rounding == "exact") cfg.yield.rounding = nvpair::yield::PairRounding::Exact;
        else throw nvpair::cli::UsageError("--rounding must be floor or exact");
      }
      std::optional<std::filesystem::path> out;
      if (app.get_option("--out")->count() > 0) out = common.out;
      nvpair::cli::cmd_yield(cfg, out).write(std::cout);
    }
  });
}
