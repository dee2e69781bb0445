#include "canonphase/optimal_state.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace canonphase {

AmplitudeVector AmplitudeVector::from_values(HalfInt j, std::vector<double> psi) {
  if (j.twice() < 0 || j.twice() > kMaxPhotonNumber) {
    throw std::invalid_argument("amplitude vector: j out of supported range");
  }
  if (psi.size() != static_cast<std::size_t>(j.twice() + 1)) {
    throw std::invalid_argument("amplitude vector: expected " + std::to_string(j.twice() + 1) +
                                " entries, got " + std::to_string(psi.size()));
  }
  double norm = 0.0;
  for (double v : psi) {
    if (!std::isfinite(v)) throw std::invalid_argument("amplitude vector: non-finite entry");
    norm += v * v;
  }
  if (std::abs(norm - 1.0) > kNormTolerance) {
    throw std::invalid_argument("amplitude vector: not normalized (sum of squares = " +
                                std::to_string(norm) + ")");
  }
  return AmplitudeVector(j, std::move(psi));
}

double AmplitudeVector::at_or_zero(HalfInt mu) const {
  return in_spin_range(j_, mu) ? (*this)[mu] : 0.0;
}

double AmplitudeVector::norm_squared() const {
  double s = 0.0;
  for (double v : psi_) s += v * v;
  return s;
}

AmplitudeVector optimal_amplitudes(int n) {
  if (n < 1) throw std::invalid_argument("optimal state needs at least one photon");
  const HalfInt j = from_photon_number(n);
  const double jd = j.value();
  const double scale = 1.0 / std::sqrt(jd + 1.0);
  std::vector<double> psi;
  psi.reserve(static_cast<std::size_t>(n + 1));
  for (HalfInt mu : SpinRange(j)) {
    psi.push_back(scale * std::sin((mu.value() + jd + 1.0) * std::numbers::pi / (2.0 * jd + 2.0)));
  }
  return AmplitudeVector::from_values(j, std::move(psi));
}

}  // namespace canonphase
