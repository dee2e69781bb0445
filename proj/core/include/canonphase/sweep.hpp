#pragma once

#include <optional>
#include <span>
#include <vector>

#include "canonphase/canonical_povm.hpp"

namespace canonphase {

inline constexpr int kDefaultScanMax = 1000;

struct CurvePoint {
  int n = 0;
  double delta_phi = 0.0;   ///< radians; +inf once the sharpness underflows
  double shot_noise = 0.0;  ///< 1/sqrt(N)
  double heisenberg = 0.0;  ///< tan(pi/(N+2))

  bool sub_shot_noise() const { return delta_phi < shot_noise; }
};

/// Outcome of locating a photon number inside a finite scan.
enum class ScanStatus {
  found,         ///< interior value
  beyond_range,  ///< the scan ends before the feature does
  absent,        ///< the feature does not exist in the scan
};

struct ScanBound {
  ScanStatus status = ScanStatus::absent;
  int n = 0;  ///< meaningful only when status == found

  bool found() const { return status == ScanStatus::found; }
  std::optional<int> value() const { return found() ? std::optional<int>(n) : std::nullopt; }
  friend bool operator==(const ScanBound&, const ScanBound&) = default;
};

struct SweepOptions {
  SharpnessMode mode = SharpnessMode::paper;
  unsigned jobs = 1;  ///< worker threads; 0 means hardware concurrency
};

struct SweepResult {
  double loss = 0.0;
  SharpnessMode mode = SharpnessMode::paper;
  std::vector<CurvePoint> points;  ///< one per N, ascending
  ScanBound n_opt;
  ScanBound n_subshot_max;
};

/// Delta-phi of the optimal state for every N in [n_min, n_max] via the
/// closed-form sharpness. Throws std::invalid_argument on a bad range or loss.
SweepResult curve(double loss, int n_min, int n_max, const SweepOptions& options = {});

/// Argmin of delta_phi, ties to the smaller N. A minimum on the last scanned
/// point is reported as beyond_range.
ScanBound locate_n_opt(std::span<const CurvePoint> points);

/// Largest N of the contiguous sub-shot-noise run that contains the global
/// minimum. If the minimum itself is not sub-shot-noise, the run holding the
/// point deepest below the shot-noise line is used instead. A run reaching
/// the last scanned point is beyond_range.
ScanBound locate_subshot_bound(std::span<const CurvePoint> points);

ScanBound find_n_opt(double loss, int n_max = kDefaultScanMax, const SweepOptions& options = {});
ScanBound find_subshot_bound(double loss, int n_max = kDefaultScanMax,
                             const SweepOptions& options = {});

struct LossOptimum {
  double loss = 0.0;
  ScanBound n_opt;
};

/// find_n_opt over an ascending grid of losses in [0, 1).
std::vector<LossOptimum> nopt_vs_loss(std::span<const double> loss_grid,
                                      int n_max = kDefaultScanMax,
                                      const SweepOptions& options = {});

/// count points from lo to hi inclusive, linearly or geometrically spaced.
std::vector<double> make_loss_grid(double lo, double hi, int count, bool log_spaced);

}  // namespace canonphase
