#pragma once

#include <span>
#include <vector>

#include "canonphase/spin.hpp"

namespace canonphase {

/// Normalization tolerance for amplitude vectors accepted from callers.
inline constexpr double kNormTolerance = 1e-12;

/// Real amplitudes psi_mu of a two-mode pure state sum_mu psi_mu |j+mu>_a |j-mu>_b,
/// stored densely from mu = -j to mu = +j.
class AmplitudeVector {
public:
  /// Wraps caller-supplied amplitudes. Throws std::invalid_argument unless
  /// there are exactly 2j+1 finite values whose squares sum to 1 within
  /// kNormTolerance; no silent renormalization.
  static AmplitudeVector from_values(HalfInt j, std::vector<double> psi);

  HalfInt j() const { return j_; }
  int photon_number() const { return j_.twice(); }
  SpinRange range() const { return SpinRange(j_); }
  std::size_t size() const { return psi_.size(); }

  std::span<const double> values() const { return psi_; }
  double operator[](HalfInt mu) const { return psi_[range().index_of(mu)]; }
  /// psi_mu, or 0 when mu falls outside [-j, j].
  double at_or_zero(HalfInt mu) const;

  double norm_squared() const;

private:
  AmplitudeVector(HalfInt j, std::vector<double> psi) : j_(j), psi_(std::move(psi)) {}
  HalfInt j_;
  std::vector<double> psi_;
};

/// Optimal canonical-phase input state for N photons:
/// psi_mu = sin((mu + j + 1) pi / (2j + 2)) / sqrt(j + 1).
/// Throws std::invalid_argument for N < 1 or N > kMaxPhotonNumber.
AmplitudeVector optimal_amplitudes(int n);

}  // namespace canonphase
