#include "canonphase/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace canonphase {
namespace {

CurvePoint evaluate_point(int n, const LossChannel& channel, SharpnessMode mode) {
  const AmplitudeVector psi = optimal_amplitudes(n);
  const PhaseEstimate est = estimate(psi, channel, mode);
  return {n, est.min_detectable_phase, 1.0 / std::sqrt(static_cast<double>(n)),
          std::tan(std::numbers::pi / (n + 2.0))};
}

unsigned resolve_jobs(unsigned jobs, std::size_t work) {
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(work, 1)));
}

std::size_t argmin_index(std::span<const CurvePoint> points) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i].delta_phi < points[best].delta_phi) best = i;
  }
  return best;
}

}  // namespace

SweepResult curve(double loss, int n_min, int n_max, const SweepOptions& options) {
  if (n_min < 1 || n_max < n_min) throw std::invalid_argument("need 1 <= n_min <= n_max");
  if (n_max > kMaxPhotonNumber) throw std::invalid_argument("n_max exceeds supported photon number");
  const LossChannel channel = channel_from_loss(loss);

  SweepResult result;
  result.loss = loss;
  result.mode = options.mode;
  const std::size_t count = static_cast<std::size_t>(n_max - n_min + 1);
  result.points.resize(count);

  // Workers fill disjoint strided slots; assembly order is fixed by N.
  const unsigned jobs = resolve_jobs(options.jobs, count);
  auto work = [&](unsigned worker) {
    for (std::size_t i = worker; i < count; i += jobs) {
      result.points[i] = evaluate_point(n_min + static_cast<int>(i), channel, options.mode);
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(jobs);
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(work, w);
  }

  result.n_opt = locate_n_opt(result.points);
  result.n_subshot_max = locate_subshot_bound(result.points);
  return result;
}

ScanBound locate_n_opt(std::span<const CurvePoint> points) {
  if (points.empty()) return {ScanStatus::absent, 0};
  const std::size_t best = argmin_index(points);
  if (!std::isfinite(points[best].delta_phi)) return {ScanStatus::absent, 0};
  if (best + 1 == points.size()) return {ScanStatus::beyond_range, 0};
  return {ScanStatus::found, points[best].n};
}

ScanBound locate_subshot_bound(std::span<const CurvePoint> points) {
  if (points.empty()) return {ScanStatus::absent, 0};
  std::size_t seed = argmin_index(points);
  if (!points[seed].sub_shot_noise()) {
    double deepest = std::numeric_limits<double>::infinity();
    bool any = false;
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (!points[i].sub_shot_noise()) continue;
      const double ratio = points[i].delta_phi / points[i].shot_noise;
      if (!any || ratio < deepest) {
        deepest = ratio;
        seed = i;
        any = true;
      }
    }
    if (!any) return {ScanStatus::absent, 0};
  }
  std::size_t last = seed;
  while (last + 1 < points.size() && points[last + 1].sub_shot_noise()) ++last;
  if (last + 1 == points.size()) return {ScanStatus::beyond_range, 0};
  return {ScanStatus::found, points[last].n};
}

ScanBound find_n_opt(double loss, int n_max, const SweepOptions& options) {
  return curve(loss, 1, n_max, options).n_opt;
}

ScanBound find_subshot_bound(double loss, int n_max, const SweepOptions& options) {
  return curve(loss, 1, n_max, options).n_subshot_max;
}

std::vector<LossOptimum> nopt_vs_loss(std::span<const double> loss_grid, int n_max,
                                      const SweepOptions& options) {
  for (std::size_t i = 0; i < loss_grid.size(); ++i) {
    const double l = loss_grid[i];
    if (!(l >= 0.0 && l < 1.0)) throw std::invalid_argument("loss grid values must lie in [0, 1)");
    if (i > 0 && l < loss_grid[i - 1]) throw std::invalid_argument("loss grid must be ascending");
  }
  std::vector<LossOptimum> out;
  out.reserve(loss_grid.size());
  for (double l : loss_grid) out.push_back({l, find_n_opt(l, n_max, options)});
  return out;
}

std::vector<double> make_loss_grid(double lo, double hi, int count, bool log_spaced) {
  if (count < 1) throw std::invalid_argument("loss grid needs at least one point");
  if (!(lo >= 0.0) || !(hi < 1.0) || hi < lo) {
    throw std::invalid_argument("loss grid bounds must satisfy 0 <= lo <= hi < 1");
  }
  if (log_spaced && lo <= 0.0) throw std::invalid_argument("log-spaced loss grid needs lo > 0");
  std::vector<double> grid(static_cast<std::size_t>(count));
  if (count == 1) {
    grid[0] = lo;
    return grid;
  }
  for (int i = 0; i < count; ++i) {
    const double t = static_cast<double>(i) / (count - 1);
    grid[static_cast<std::size_t>(i)] =
        log_spaced ? std::exp(std::log(lo) + t * (std::log(hi) - std::log(lo))) : lo + t * (hi - lo);
  }
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

}  // namespace canonphase
