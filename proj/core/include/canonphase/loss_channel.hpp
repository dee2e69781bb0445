#pragma once

#include <complex>
#include <compare>
#include <span>
#include <vector>

#include "canonphase/optimal_state.hpp"
#include "canonphase/spin.hpp"

namespace canonphase {

/// Photon loss in the phase-shift arm, modelled as a beam splitter of
/// transmission 1 - L = cos^2(theta/2) whose spare port sees vacuum.
class LossChannel {
public:
  /// Throws std::invalid_argument unless 0 <= L < 1.
  static LossChannel from_loss(double loss);

  double loss() const { return loss_; }
  double transmission() const { return 1.0 - loss_; }
  double theta() const { return theta_; }

private:
  LossChannel(double loss, double theta) : loss_(loss), theta_(theta) {}
  double loss_;
  double theta_;
};

/// theta = 2 arccos(sqrt(1 - L)).
LossChannel channel_from_loss(double loss);

/// One amplitude of the (a', c', b) pure state after the loss beam splitter,
/// attached to |k+m>_{a'} |k-m>_{c'} |j-mu>_b with k = (j+mu)/2.
struct LossyTerm {
  HalfInt mu;
  HalfInt m;
  HalfInt k;
  std::complex<double> amplitude;

  int photons_a() const { return (k + m).as_int(); }
  int photons_lost() const { return (k - m).as_int(); }
};

class PureLossyState {
public:
  /// Validates that every term satisfies k = (j+mu)/2 and m in [-k, k].
  PureLossyState(HalfInt j, std::vector<LossyTerm> terms);

  HalfInt j() const { return j_; }
  std::span<const LossyTerm> terms() const { return terms_; }
  int photons_b(const LossyTerm& t) const { return (j_ - t.mu).as_int(); }
  double norm_squared() const;

private:
  HalfInt j_;
  std::vector<LossyTerm> terms_;
};

/// Amplitudes psi_mu exp(i pi/2 (m - k)) d^k_{m,k}(theta) over all (mu, m).
PureLossyState pure_lossy_state(const AmplitudeVector& state, const LossChannel& channel);

/// Photon numbers of a ket |a>_{a'} |b>_b of the inner modes.
struct FockPair {
  int a = 0;
  int b = 0;
  friend bool operator==(FockPair, FockPair) = default;
  friend auto operator<=>(FockPair, FockPair) = default;
};

/// Dense symmetric block of the reduced density matrix with a fixed number
/// of lost photons. Row r is the ket |j+mu_r-lost>_{a'} |j-mu_r>_b.
struct DensityBlock {
  int lost = 0;
  std::vector<HalfInt> mus;
  std::vector<double> matrix;  ///< row-major, mus.size() squared

  std::size_t size() const { return mus.size(); }
  double at(std::size_t r, std::size_t c) const { return matrix[r * mus.size() + c]; }
};

/// Reduced state of the inner modes (a', b) once the lost-photon mode is
/// traced out. Block-diagonal in the lost-photon count; entries across
/// blocks are structurally zero and never stored.
class ReducedDensity {
public:
  /// Throws std::invalid_argument on malformed block structure.
  ReducedDensity(HalfInt j, double loss, std::vector<DensityBlock> blocks);

  HalfInt j() const { return j_; }
  double loss() const { return loss_; }
  std::span<const DensityBlock> blocks() const { return blocks_; }
  /// nullptr when no block with this lost-photon count is stored.
  const DensityBlock* block(int lost) const;

  /// <k+m, j-mu| rho' |k'+n, j-nu>, zero unless k - m == k' - n.
  double entry(HalfInt mu, HalfInt m, HalfInt nu, HalfInt n) const;

  /// Kets in storage order (block by block).
  std::vector<FockPair> basis() const;
  std::size_t dimension() const;
  /// Row-major dense matrix over basis().
  std::vector<double> to_dense() const;

  double trace() const;
  double purity() const;
  double symmetry_defect() const;

private:
  HalfInt j_;
  double loss_;
  std::vector<DensityBlock> blocks_;
};

inline constexpr int kDefaultDensityPhotonCap = 256;

/// Entries psi_mu psi_nu d^k_{m,k}(theta) d^{k'}_{n,k'}(theta) for k - m == k' - n.
/// Throws std::invalid_argument when N exceeds max_photon_number.
ReducedDensity reduced_density(const AmplitudeVector& state, const LossChannel& channel,
                               int max_photon_number = kDefaultDensityPhotonCap);

}  // namespace canonphase
