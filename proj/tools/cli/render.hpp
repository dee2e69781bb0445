#pragma once

#include <string>
#include <vector>

#include "canonphase/canonical_povm.hpp"
#include "canonphase/sweep.hpp"
#include "config.hpp"

namespace canonphase::cli {

/// 17 significant digits; infinities as `inf`.
std::string format_real(double v);

/// Integer, or `none` when the scan did not locate one.
std::string format_bound(const ScanBound& b);

std::string render_curve(const SweepResult& result, const RunConfig& cfg);
std::string render_nopt(const std::vector<LossOptimum>& rows, const RunConfig& cfg);
std::string render_dist(const PhaseDistribution& dist, const RunConfig& cfg);

/// Path of the plot script written next to a data file.
std::string plot_script_path(const std::string& data_path, Format format);

/// gnuplot script for CSV data, matplotlib script for JSON data.
std::string plot_script(const RunConfig& cfg, const std::string& data_path);

}  // namespace canonphase::cli
