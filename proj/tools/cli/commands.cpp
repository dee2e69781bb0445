#include "commands.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "canonphase/canonical_povm.hpp"
#include "canonphase/loss_channel.hpp"
#include "canonphase/optimal_state.hpp"
#include "canonphase/sweep.hpp"
#include "render.hpp"

namespace canonphase::cli {
namespace {

SweepOptions sweep_options(const RunConfig& cfg) {
  return {cfg.normalized ? SharpnessMode::normalized : SharpnessMode::paper, cfg.jobs};
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw UsageError("cannot open '" + path + "' for writing");
  f << content;
  f.close();
  if (!f) throw UsageError("failed writing '" + path + "'");
}

// Data goes to stdout unless --out is set; with --out a plot script is
// written next to the data.
int emit(const RunConfig& cfg, const std::string& data, std::ostream& out, std::ostream& err) {
  if (cfg.output_path.empty()) {
    out << data;
    return kExitOk;
  }
  write_file(cfg.output_path, data);
  const std::string script = plot_script_path(cfg.output_path, cfg.format);
  write_file(script, plot_script(cfg, cfg.output_path));
  err << "wrote " << cfg.output_path << " and " << script << '\n';
  return kExitOk;
}

}  // namespace

int run_curve(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto [lo, hi] = cfg.n_range.value_or(std::pair{1, kDefaultScanMax});
  const SweepResult result = curve(*cfg.loss, lo, hi, sweep_options(cfg));
  return emit(cfg, render_curve(result, cfg), out, err);
}

int run_nopt(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<double> grid;
  if (cfg.loss_grid) {
    grid = make_loss_grid(cfg.loss_grid->lo, cfg.loss_grid->hi, cfg.loss_grid->count,
                          cfg.loss_grid->log_spaced);
  } else {
    grid = {*cfg.loss};
  }
  const auto [lo, hi] = cfg.n_range.value_or(std::pair{1, kDefaultScanMax});
  std::vector<LossOptimum> rows;
  rows.reserve(grid.size());
  for (double loss : grid) rows.push_back({loss, curve(loss, lo, hi, sweep_options(cfg)).n_opt});
  return emit(cfg, render_nopt(rows, cfg), out, err);
}

int run_dist(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const PhaseDistribution dist = distribution(optimal_amplitudes(*cfg.n), channel_from_loss(*cfg.loss));
  return emit(cfg, render_dist(dist, cfg), out, err);
}

int run_validate(const RunConfig& cfg, std::ostream& out, std::ostream& err,
                 const oracle::ValidationOptions& base) {
  oracle::ValidationOptions options = base;
  options.max_two_j = cfg.max_two_j;
  const auto checks = oracle::run_validation(options);

  const oracle::CheckResult* first_failure = nullptr;
  for (const auto& c : checks) {
    char line[256];
    std::snprintf(line, sizeof line, "%-4s  %-44s worst=%-11.3e tol=%-9.1e %s\n", c.passed ? "PASS" : "FAIL",
                  c.name.c_str(), c.worst, c.tolerance, c.witness.c_str());
    out << line;
    if (!c.passed && first_failure == nullptr) first_failure = &c;
  }
  if (first_failure != nullptr) {
    err << "validation failed: " << first_failure->name << " at " << first_failure->witness << '\n';
    return kExitValidation;
  }
  return kExitOk;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    check_config(cfg);
    switch (cfg.command) {
      case Command::curve: return run_curve(cfg, out, err);
      case Command::nopt: return run_nopt(cfg, out, err);
      case Command::dist: return run_dist(cfg, out, err);
      case Command::validate: return run_validate(cfg, out, err);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Canonical phase measurement with photon loss: curves, optimal photon numbers, "
               "phase distributions and oracle validation."};
  app.require_subcommand(1);

  RunConfig cfg;
  double loss = 0.0;
  std::string grid_text;
  std::string range_text;
  int n = 0;
  std::string format = "csv";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.output_path, "Data file (stdout if omitted); a plot script is written next to it");
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_flag("--normalized", cfg.normalized,
                  "Renormalize the sharpness by the integral of P(phi) (not the default quantity)");
    sub->add_option("--jobs", cfg.jobs, "Worker threads for sweeps (0 = available parallelism)");
  };

  auto* curve_cmd = app.add_subcommand("curve", "Delta-phi versus N for one loss value");
  curve_cmd->add_option("--loss", loss, "Loss fraction L in [0, 1)")->required();
  curve_cmd->add_option("--n-range", range_text, "Photon-number range lo:hi (default 1:1000)");
  add_common(curve_cmd);

  auto* nopt_cmd = app.add_subcommand("nopt", "Optimal photon number versus loss");
  auto* grid_opt = nopt_cmd->add_option("--loss-grid", grid_text, "lo:hi:count[:log]");
  auto* nopt_loss = nopt_cmd->add_option("--loss", loss, "Single loss value");
  grid_opt->excludes(nopt_loss);
  nopt_cmd->add_option("--n-range", range_text, "Photon-number scan lo:hi (default 1:1000)");
  add_common(nopt_cmd);

  auto* dist_cmd = app.add_subcommand("dist", "Phase distribution P(phi) for one N and L");
  dist_cmd->add_option("--loss", loss, "Loss fraction L in [0, 1)")->required();
  dist_cmd->add_option("--n", n, "Photon number")->required();
  dist_cmd->add_option("--phi-samples", cfg.phi_samples, "Grid points over [0, 2 pi)");
  add_common(dist_cmd);

  auto* validate_cmd = app.add_subcommand("validate", "Run the oracle cross-checks");
  validate_cmd->add_option("--max-2j", cfg.max_two_j, "Largest 2j for the Wigner oracle (<= 24)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (curve_cmd->parsed()) {
      cfg.command = Command::curve;
    } else if (nopt_cmd->parsed()) {
      cfg.command = Command::nopt;
    } else if (dist_cmd->parsed()) {
      cfg.command = Command::dist;
    } else {
      cfg.command = Command::validate;
    }
    if (cfg.command == Command::curve || cfg.command == Command::dist ||
        (cfg.command == Command::nopt && nopt_loss->count() > 0)) {
      cfg.loss = loss;
    }
    if (!grid_text.empty()) cfg.loss_grid = parse_loss_grid(grid_text);
    if (!range_text.empty()) cfg.n_range = parse_n_range(range_text);
    if (cfg.command == Command::dist) cfg.n = n;
    cfg.format = format == "json" ? Format::json : Format::csv;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return run(cfg, out, err);
}

}  // namespace canonphase::cli
