#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "canonphase/loss_channel.hpp"
#include "canonphase/optimal_state.hpp"
#include "canonphase/spin.hpp"

namespace canonphase {

/// P(phi) = sum_{mu,nu} c_{mu nu} exp(i (nu - mu) phi), a trigonometric
/// polynomial of degree 2j. Under loss it integrates to less than one.
class PhaseDistribution {
public:
  /// coeff is row-major over SpinRange(j) x SpinRange(j).
  PhaseDistribution(HalfInt j, std::vector<double> coeff);

  HalfInt j() const { return j_; }
  std::size_t dimension() const { return static_cast<std::size_t>(j_.twice() + 1); }
  double coeff(std::size_t row, std::size_t col) const { return coeff_[row * dimension() + col]; }
  const std::vector<double>& coefficients() const { return coeff_; }

  double operator()(double phi) const;

  /// Exact integral of P(phi) exp(i order phi) over [0, 2 pi).
  std::complex<double> moment(int order) const;
  double integral() const { return moment(0).real(); }

  /// (phi, P(phi)) on a uniform grid of n_points over [0, 2 pi).
  std::vector<std::pair<double, double>> sample(std::size_t n_points) const;

private:
  HalfInt j_;
  std::vector<double> coeff_;
  std::vector<double> diagonal_sums_;  ///< f_d = sum_{nu - mu = d} c, index d + 2j
};

/// Precision figures of a phase distribution with mean phase fixed at zero.
struct PhaseEstimate {
  double sharpness = 0.0;
  double holevo_variance = 0.0;
  double min_detectable_phase = 0.0;  ///< radians
};

/// `paper` uses the sub-normalized distribution as it stands; `normalized`
/// divides the sharpness by the integral of P(phi) first.
enum class SharpnessMode { paper, normalized };

/// Factorized construction c_{mu nu} = g_mu g_nu / 2 pi,
/// g_mu = psi_mu (1 - L)^{(j + mu)/2}.
PhaseDistribution distribution(const AmplitudeVector& state, const LossChannel& channel);

/// Tr[rho' F(phi)] evaluated against the canonical POVM. Only kets carrying
/// all 2j photons in the inner modes overlap with the POVM.
PhaseDistribution distribution_from_density(const ReducedDensity& rho);

/// Sum_mu psi_mu psi_{mu-1} (1 - L)^{j + mu - 1/2}.
double sharpness_closed(const AmplitudeVector& state, const LossChannel& channel,
                        SharpnessMode mode = SharpnessMode::paper);

/// |<e^{i phi}>| from the exact first Fourier moment of dist.
double sharpness(const PhaseDistribution& dist, SharpnessMode mode = SharpnessMode::paper);

/// Real part of a first moment; throws std::domain_error if the imaginary
/// part exceeds 1e-12 (the mean phase is assumed to be zero).
double sharpness_from_moment(std::complex<double> moment);

/// Holevo variance -1 + S^{-2}. S = 0 gives an infinite variance rather than
/// an error; S outside [0, 1] throws std::domain_error.
PhaseEstimate holevo(double sharpness);

/// tan^2(pi / (N + 2)), the lossless optimal-state variance.
double lossless_reference(int n);

/// sharpness_closed followed by holevo.
PhaseEstimate estimate(const AmplitudeVector& state, const LossChannel& channel,
                       SharpnessMode mode = SharpnessMode::paper);

}  // namespace canonphase
