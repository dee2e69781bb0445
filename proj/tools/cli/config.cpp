#include "config.hpp"

#include <charconv>
#include <cmath>
#include <string>
#include <vector>

#include "canonphase/spin.hpp"
#include "canonphase/sweep.hpp"

namespace canonphase::cli {
namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

int parse_int(std::string_view s, std::string_view what) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw UsageError("invalid integer '" + std::string(s) + "' in " + std::string(what));
  }
  return v;
}

double parse_double(std::string_view s, std::string_view what) {
  const std::string owned(s);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(owned, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (owned.empty() || used != owned.size()) {
    throw UsageError("invalid number '" + owned + "' in " + std::string(what));
  }
  return v;
}

void check_loss(double loss) {
  if (!std::isfinite(loss) || loss < 0.0) throw UsageError("loss must be >= 0");
  if (loss >= 1.0) throw UsageError("loss must be < 1");
}

void check_n(int n) {
  if (n < 1) throw UsageError("photon number must be >= 1");
  if (n > kMaxPhotonNumber) throw UsageError("photon number must be <= " + std::to_string(kMaxPhotonNumber));
}

}  // namespace

LossGridSpec parse_loss_grid(std::string_view text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3 && parts.size() != 4) {
    throw UsageError("--loss-grid expects lo:hi:count[:log]");
  }
  LossGridSpec spec;
  spec.lo = parse_double(parts[0], "--loss-grid");
  spec.hi = parse_double(parts[1], "--loss-grid");
  spec.count = parse_int(parts[2], "--loss-grid");
  if (parts.size() == 4) {
    if (parts[3] != "log" && parts[3] != "lin") throw UsageError("--loss-grid spacing must be 'log' or 'lin'");
    spec.log_spaced = parts[3] == "log";
  }
  return spec;
}

std::pair<int, int> parse_n_range(std::string_view text) {
  const auto parts = split(text, ':');
  if (parts.size() != 2) throw UsageError("--n-range expects lo:hi");
  return {parse_int(parts[0], "--n-range"), parse_int(parts[1], "--n-range")};
}

void check_config(const RunConfig& cfg) {
  if (cfg.loss) check_loss(*cfg.loss);
  if (cfg.n) check_n(*cfg.n);
  if (cfg.n_range) {
    check_n(cfg.n_range->first);
    check_n(cfg.n_range->second);
    if (cfg.n_range->first > cfg.n_range->second) throw UsageError("--n-range needs lo <= hi");
  }
  if (cfg.phi_samples < kMinPhiSamples) {
    throw UsageError("--phi-samples must be >= " + std::to_string(kMinPhiSamples));
  }

  switch (cfg.command) {
    case Command::curve:
      if (!cfg.loss) throw UsageError("curve needs --loss");
      break;
    case Command::nopt:
      if (!cfg.loss_grid && !cfg.loss) throw UsageError("nopt needs --loss-grid or --loss");
      if (cfg.loss_grid) {
        const auto& g = *cfg.loss_grid;
        check_loss(g.lo);
        check_loss(g.hi);
        if (g.count < 1) throw UsageError("--loss-grid count must be >= 1");
        if (g.hi < g.lo) throw UsageError("--loss-grid needs lo <= hi");
        if (g.log_spaced && g.lo <= 0.0) throw UsageError("log-spaced --loss-grid needs lo > 0");
      }
      break;
    case Command::dist: {
      if (!cfg.loss) throw UsageError("dist needs --loss");
      if (!cfg.n) throw UsageError("dist needs --n");
      const int nyquist = 4 * (*cfg.n + 1);
      if (cfg.phi_samples < nyquist) {
        throw UsageError("--phi-samples must be >= 4(N+1) = " + std::to_string(nyquist) +
                         " to resolve the distribution");
      }
      break;
    }
    case Command::validate:
      if (cfg.max_two_j < 0 || cfg.max_two_j > 24) throw UsageError("--max-2j must lie in [0, 24]");
      break;
  }
}

std::string_view command_name(Command c) {
  switch (c) {
    case Command::curve: return "curve";
    case Command::nopt: return "nopt";
    case Command::dist: return "dist";
    case Command::validate: return "validate";
  }
  return "?";
}

std::string_view format_name(Format f) { return f == Format::csv ? "csv" : "json"; }

}  // namespace canonphase::cli
