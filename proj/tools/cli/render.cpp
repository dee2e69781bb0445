#include "render.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <sstream>

#include <json.hpp>

namespace canonphase::cli {
namespace {

using nlohmann::json;

std::string_view mode_name(bool normalized) { return normalized ? "normalized" : "paper"; }

json json_real(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

json json_bound(const ScanBound& b) {
  if (b.found()) return b.n;
  return "none";
}

json config_json(const RunConfig& cfg) {
  json c;
  c["command"] = command_name(cfg.command);
  c["mode"] = mode_name(cfg.normalized);
  if (cfg.loss) c["loss"] = *cfg.loss;
  if (cfg.loss_grid) {
    c["loss_grid"] = {{"lo", cfg.loss_grid->lo},
                      {"hi", cfg.loss_grid->hi},
                      {"count", cfg.loss_grid->count},
                      {"log", cfg.loss_grid->log_spaced}};
  }
  if (cfg.n) c["n"] = *cfg.n;
  if (cfg.n_range) c["n_range"] = {cfg.n_range->first, cfg.n_range->second};
  if (cfg.command == Command::dist) c["phi_samples"] = cfg.phi_samples;
  return c;
}

// Comment lines above the CSV header; `mode` is always stamped so paper and
// normalized datasets cannot be mixed up.
std::string csv_preamble(const RunConfig& cfg) {
  std::ostringstream os;
  os << "# canonphase " << command_name(cfg.command) << " mode=" << mode_name(cfg.normalized);
  if (cfg.loss) os << " loss=" << format_real(*cfg.loss);
  if (cfg.loss_grid) {
    os << " loss_grid=" << format_real(cfg.loss_grid->lo) << ':' << format_real(cfg.loss_grid->hi) << ':'
       << cfg.loss_grid->count << (cfg.loss_grid->log_spaced ? ":log" : ":lin");
  }
  if (cfg.n) os << " n=" << *cfg.n;
  if (cfg.n_range) os << " n_range=" << cfg.n_range->first << ':' << cfg.n_range->second;
  if (cfg.command == Command::dist) os << " phi_samples=" << cfg.phi_samples;
  os << '\n';
  if (cfg.normalized) os << "# NOTE: sharpness renormalized by the integral of P(phi)\n";
  return os.str();
}

}  // namespace

std::string format_real(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_bound(const ScanBound& b) { return b.found() ? std::to_string(b.n) : "none"; }

std::string render_curve(const SweepResult& result, const RunConfig& cfg) {
  if (cfg.format == Format::json) {
    json rows = json::array();
    for (const auto& p : result.points) {
      rows.push_back({{"n", p.n},
                      {"delta_phi", json_real(p.delta_phi)},
                      {"shot_noise", json_real(p.shot_noise)},
                      {"heisenberg", json_real(p.heisenberg)}});
    }
    json doc{{"config", config_json(cfg)},
             {"summary", {{"n_opt", json_bound(result.n_opt)},
                          {"n_subshot_max", json_bound(result.n_subshot_max)}}},
             {"rows", rows}};
    return doc.dump(2) + "\n";
  }
  std::ostringstream os;
  os << csv_preamble(cfg);
  os << "# n_opt=" << format_bound(result.n_opt) << " n_subshot_max=" << format_bound(result.n_subshot_max)
     << '\n';
  os << "n,delta_phi,shot_noise,heisenberg\n";
  for (const auto& p : result.points) {
    os << p.n << ',' << format_real(p.delta_phi) << ',' << format_real(p.shot_noise) << ','
       << format_real(p.heisenberg) << '\n';
  }
  return os.str();
}

std::string render_nopt(const std::vector<LossOptimum>& rows, const RunConfig& cfg) {
  if (cfg.format == Format::json) {
    json out = json::array();
    for (const auto& r : rows) out.push_back({{"loss", r.loss}, {"n_opt", json_bound(r.n_opt)}});
    json doc{{"config", config_json(cfg)}, {"rows", out}};
    return doc.dump(2) + "\n";
  }
  std::ostringstream os;
  os << csv_preamble(cfg);
  os << "loss,n_opt\n";
  for (const auto& r : rows) os << format_real(r.loss) << ',' << format_bound(r.n_opt) << '\n';
  return os.str();
}

std::string render_dist(const PhaseDistribution& dist, const RunConfig& cfg) {
  const auto samples = dist.sample(static_cast<std::size_t>(cfg.phi_samples));
  const double integral = dist.integral();
  if (cfg.format == Format::json) {
    json out = json::array();
    for (const auto& [phi, p] : samples) out.push_back({{"phi", phi}, {"p", p}});
    json doc{{"config", config_json(cfg)}, {"summary", {{"integral", integral}}}, {"rows", out}};
    return doc.dump(2) + "\n";
  }
  std::ostringstream os;
  os << csv_preamble(cfg);
  os << "# integral=" << format_real(integral) << '\n';
  os << "phi,p\n";
  for (const auto& [phi, p] : samples) os << format_real(phi) << ',' << format_real(p) << '\n';
  return os.str();
}

std::string plot_script_path(const std::string& data_path, Format format) {
  std::filesystem::path p(data_path);
  p.replace_extension(format == Format::csv ? ".gp" : ".plot.py");
  return p.string();
}

std::string plot_script(const RunConfig& cfg, const std::string& data_path) {
  const std::string data = std::filesystem::absolute(data_path).string();
  const std::string image = std::filesystem::path(data).replace_extension(".png").string();
  std::ostringstream os;

  if (cfg.format == Format::csv) {
    os << "# gnuplot -p " << std::filesystem::path(plot_script_path(data_path, cfg.format)).filename().string()
       << "\n";
    os << "set datafile separator ','\n";
    os << "set datafile missing 'none'\n";
    os << "set terminal pngcairo size 900,600\n";
    os << "set output '" << image << "'\n";
    switch (cfg.command) {
      case Command::curve:
        os << "set logscale xy\n"
              "set xlabel 'input photon number N'\n"
              "set ylabel 'minimum detectable phase (rad)'\n"
              "set key top right\n"
           << "plot '" << data << "' using 1:2 every ::1 with lines lw 2 title 'canonical, lossy', \\\n"
           << "     '" << data << "' using 1:3 every ::1 with lines dt 3 title 'shot noise 1/sqrt(N)', \\\n"
           << "     '" << data << "' using 1:4 every ::1 with lines dt 2 title 'lossless tan(pi/(N+2))'\n";
        break;
      case Command::nopt:
        os << "set logscale xy\n"
              "set xlabel 'loss L'\n"
              "set ylabel 'optimal photon number'\n"
           << "plot '" << data << "' using 1:2 every ::1 with linespoints title 'N_opt'\n";
        break;
      case Command::dist:
        os << "set xlabel 'phi (rad)'\n"
              "set ylabel 'P(phi)'\n"
           << "plot '" << data << "' using 1:2 every ::1 with lines title 'P(phi)'\n";
        break;
      case Command::validate:
        break;
    }
    return os.str();
  }

  os << "# python3 " << std::filesystem::path(plot_script_path(data_path, cfg.format)).filename().string()
     << "\n"
        "import json\n"
        "import matplotlib\n"
        "matplotlib.use('Agg')\n"
        "import matplotlib.pyplot as plt\n\n"
     << "doc = json.load(open(r'" << data << "'))\n"
     << "num = lambda v: float(v) if v not in ('none',) else float('nan')\n"
        "rows = doc['rows']\n"
        "fig, ax = plt.subplots()\n";
  switch (cfg.command) {
    case Command::curve:
      os << "n = [r['n'] for r in rows]\n"
            "ax.loglog(n, [num(r['delta_phi']) for r in rows], label='canonical, lossy')\n"
            "ax.loglog(n, [num(r['shot_noise']) for r in rows], ':', label='shot noise')\n"
            "ax.loglog(n, [num(r['heisenberg']) for r in rows], '--', label='lossless')\n"
            "ax.set_xlabel('input photon number N')\n"
            "ax.set_ylabel('minimum detectable phase (rad)')\n";
      break;
    case Command::nopt:
      os << "ax.loglog([r['loss'] for r in rows], [num(r['n_opt']) for r in rows], 'o-', label='N_opt')\n"
            "ax.set_xlabel('loss L')\n"
            "ax.set_ylabel('optimal photon number')\n";
      break;
    case Command::dist:
      os << "ax.plot([r['phi'] for r in rows], [r['p'] for r in rows], label='P(phi)')\n"
            "ax.set_xlabel('phi (rad)')\n"
            "ax.set_ylabel('P(phi)')\n";
      break;
    case Command::validate:
      break;
  }
  os << "ax.legend()\n"
     << "fig.savefig(r'" << image << "', dpi=150)\n";
  return os.str();
}

}  // namespace canonphase::cli
