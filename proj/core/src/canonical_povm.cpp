#include "canonphase/canonical_povm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace canonphase {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// (1 - L)^e without underflowing early for large exponents.
double transmission_power(double loss, double exponent) {
  if (exponent == 0.0 || loss == 0.0) return 1.0;
  return std::exp(exponent * std::log1p(-loss));
}

}  // namespace

PhaseDistribution::PhaseDistribution(HalfInt j, std::vector<double> coeff)
    : j_(j), coeff_(std::move(coeff)) {
  const std::size_t dim = dimension();
  if (j.twice() < 0 || coeff_.size() != dim * dim) {
    throw std::invalid_argument("phase distribution: coefficient matrix has wrong size");
  }
  diagonal_sums_.assign(2 * dim - 1, 0.0);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) diagonal_sums_[c + dim - 1 - r] += coeff_[r * dim + c];
  }
}

double PhaseDistribution::operator()(double phi) const {
  const int span = j_.twice();
  double p = 0.0;
  for (int d = -span; d <= span; ++d) {
    p += diagonal_sums_[static_cast<std::size_t>(d + span)] * std::cos(d * phi);
  }
  return p;
}

std::complex<double> PhaseDistribution::moment(int order) const {
  // Only the exp(-i order phi) component survives the integral.
  const int span = j_.twice();
  if (order < -span || order > span) return {0.0, 0.0};
  return {kTwoPi * diagonal_sums_[static_cast<std::size_t>(span - order)], 0.0};
}

std::vector<std::pair<double, double>> PhaseDistribution::sample(std::size_t n_points) const {
  std::vector<std::pair<double, double>> out;
  out.reserve(n_points);
  for (std::size_t i = 0; i < n_points; ++i) {
    const double phi = kTwoPi * static_cast<double>(i) / static_cast<double>(n_points);
    out.emplace_back(phi, (*this)(phi));
  }
  return out;
}

PhaseDistribution distribution(const AmplitudeVector& state, const LossChannel& channel) {
  const HalfInt j = state.j();
  std::vector<double> g;
  g.reserve(state.size());
  for (HalfInt mu : SpinRange(j)) {
    g.push_back(state[mu] * transmission_power(channel.loss(), 0.5 * (j + mu).value()));
  }
  const std::size_t dim = g.size();
  std::vector<double> coeff(dim * dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) coeff[r * dim + c] = g[r] * g[c] / kTwoPi;
  }
  return PhaseDistribution(j, std::move(coeff));
}

PhaseDistribution distribution_from_density(const ReducedDensity& rho) {
  const HalfInt j = rho.j();
  const int total = j.twice();
  const SpinRange range(j);
  const std::size_t dim = range.size();
  std::vector<double> coeff(dim * dim, 0.0);

  // F(phi) = (1/2pi) sum_{alpha,beta} e^{i(alpha-beta)phi} |j+alpha, j-alpha><j+beta, j-beta|,
  // so Tr[rho' F] picks <beta|rho'|alpha> as the coefficient of e^{i(alpha-beta)phi}.
  const std::vector<FockPair> kets = rho.basis();
  std::size_t offset = 0;
  for (const auto& block : rho.blocks()) {
    for (std::size_t r = 0; r < block.size(); ++r) {
      const FockPair bra = kets[offset + r];
      if (bra.a + bra.b != total) continue;
      const HalfInt beta = HalfInt::from_twice(2 * bra.a - total);
      for (std::size_t c = 0; c < block.size(); ++c) {
        const FockPair ket = kets[offset + c];
        if (ket.a + ket.b != total) continue;
        const HalfInt alpha = HalfInt::from_twice(2 * ket.a - total);
        coeff[range.index_of(beta) * dim + range.index_of(alpha)] += block.at(r, c) / kTwoPi;
      }
    }
    offset += block.size();
  }
  return PhaseDistribution(j, std::move(coeff));
}

double sharpness_closed(const AmplitudeVector& state, const LossChannel& channel,
                        SharpnessMode mode) {
  const HalfInt j = state.j();
  if (j.twice() < 1) throw std::invalid_argument("sharpness needs at least one photon");
  double s = 0.0;
  for (HalfInt mu : SpinRange(j)) {
    if (mu == -j) continue;
    const double exponent = (j + mu).value() - 0.5;
    s += state[mu] * state[mu - kOne] * transmission_power(channel.loss(), exponent);
  }
  if (mode == SharpnessMode::normalized) {
    double norm = 0.0;
    for (HalfInt mu : SpinRange(j)) {
      norm += state[mu] * state[mu] * transmission_power(channel.loss(), (j + mu).value());
    }
    s /= norm;
  }
  return s;
}

double sharpness_from_moment(std::complex<double> moment) {
  if (std::abs(moment.imag()) > 1e-12) {
    throw std::domain_error("first moment has imaginary part " + std::to_string(moment.imag()) +
                            "; mean phase is not zero");
  }
  return moment.real();
}

double sharpness(const PhaseDistribution& dist, SharpnessMode mode) {
  double s = sharpness_from_moment(dist.moment(1));
  if (mode == SharpnessMode::normalized) s /= dist.integral();
  return s;
}

PhaseEstimate holevo(double s) {
  constexpr double kSlack = 1e-12;
  if (!(s >= 0.0) || s > 1.0 + kSlack) {
    throw std::domain_error("sharpness " + std::to_string(s) + " outside [0, 1]");
  }
  if (s > 1.0) s = 1.0;
  if (s == 0.0) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    return {0.0, inf, inf};
  }
  const double variance = std::max(0.0, 1.0 / (s * s) - 1.0);
  return {s, variance, std::sqrt(variance)};
}

double lossless_reference(int n) {
  if (n < 1) throw std::invalid_argument("lossless_reference needs N >= 1");
  const double t = std::tan(std::numbers::pi / (n + 2.0));
  return t * t;
}

PhaseEstimate estimate(const AmplitudeVector& state, const LossChannel& channel,
                       SharpnessMode mode) {
  return holevo(sharpness_closed(state, channel, mode));
}

}  // namespace canonphase
