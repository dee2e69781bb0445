#include "canonphase/loss_channel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "canonphase/wigner.hpp"

namespace canonphase {

LossChannel LossChannel::from_loss(double loss) {
  if (!std::isfinite(loss) || loss < 0.0) throw std::invalid_argument("loss must be >= 0");
  if (loss >= 1.0) throw std::invalid_argument("loss must be < 1");
  return LossChannel(loss, 2.0 * std::acos(std::sqrt(1.0 - loss)));
}

LossChannel channel_from_loss(double loss) { return LossChannel::from_loss(loss); }

PureLossyState::PureLossyState(HalfInt j, std::vector<LossyTerm> terms)
    : j_(j), terms_(std::move(terms)) {
  for (const auto& t : terms_) {
    if (!in_spin_range(j_, t.mu) || t.k != k_of(j_, t.mu) || !in_spin_range(t.k, t.m)) {
      throw std::invalid_argument("lossy state term with inconsistent quantum numbers");
    }
  }
}

double PureLossyState::norm_squared() const {
  double s = 0.0;
  for (const auto& t : terms_) s += std::norm(t.amplitude);
  return s;
}

PureLossyState pure_lossy_state(const AmplitudeVector& state, const LossChannel& channel) {
  const HalfInt j = state.j();
  std::vector<LossyTerm> terms;
  for (HalfInt mu : SpinRange(j)) {
    const HalfInt k = k_of(j, mu);
    for (HalfInt m : SpinRange(k)) {
      const double phase = 0.5 * std::numbers::pi * (m - k).value();
      const double d = d_element(k, m, k, channel.theta());
      terms.push_back({mu, m, k, std::polar(state[mu] * d, phase)});
    }
  }
  return PureLossyState(j, std::move(terms));
}

ReducedDensity::ReducedDensity(HalfInt j, double loss, std::vector<DensityBlock> blocks)
    : j_(j), loss_(loss), blocks_(std::move(blocks)) {
  int last = -1;
  for (const auto& b : blocks_) {
    if (b.lost <= last) throw std::invalid_argument("density blocks must have ascending lost counts");
    last = b.lost;
    if (b.matrix.size() != b.mus.size() * b.mus.size()) {
      throw std::invalid_argument("density block matrix has wrong size");
    }
    for (HalfInt mu : b.mus) {
      if (!in_spin_range(j_, mu) || (j_ + mu).as_int() < b.lost) {
        throw std::invalid_argument("density block ket outside the physical range");
      }
    }
    if (!std::is_sorted(b.mus.begin(), b.mus.end())) {
      throw std::invalid_argument("density block kets must be sorted by mu");
    }
  }
}

const DensityBlock* ReducedDensity::block(int lost) const {
  auto it = std::find_if(blocks_.begin(), blocks_.end(),
                         [lost](const DensityBlock& b) { return b.lost == lost; });
  return it == blocks_.end() ? nullptr : &*it;
}

double ReducedDensity::entry(HalfInt mu, HalfInt m, HalfInt nu, HalfInt n) const {
  const HalfInt k = k_of(j_, mu);
  const HalfInt kp = k_of(j_, nu);
  if (k - m != kp - n) return 0.0;
  const DensityBlock* b = block((k - m).as_int());
  if (b == nullptr) return 0.0;
  auto r = std::lower_bound(b->mus.begin(), b->mus.end(), mu);
  auto c = std::lower_bound(b->mus.begin(), b->mus.end(), nu);
  if (r == b->mus.end() || *r != mu || c == b->mus.end() || *c != nu) return 0.0;
  return b->at(static_cast<std::size_t>(r - b->mus.begin()),
               static_cast<std::size_t>(c - b->mus.begin()));
}

std::vector<FockPair> ReducedDensity::basis() const {
  std::vector<FockPair> out;
  for (const auto& b : blocks_) {
    for (HalfInt mu : b.mus) out.push_back({(j_ + mu).as_int() - b.lost, (j_ - mu).as_int()});
  }
  return out;
}

std::size_t ReducedDensity::dimension() const {
  std::size_t d = 0;
  for (const auto& b : blocks_) d += b.size();
  return d;
}

std::vector<double> ReducedDensity::to_dense() const {
  const std::size_t dim = dimension();
  std::vector<double> dense(dim * dim, 0.0);
  std::size_t offset = 0;
  for (const auto& b : blocks_) {
    for (std::size_t r = 0; r < b.size(); ++r) {
      for (std::size_t c = 0; c < b.size(); ++c) dense[(offset + r) * dim + offset + c] = b.at(r, c);
    }
    offset += b.size();
  }
  return dense;
}

double ReducedDensity::trace() const {
  double t = 0.0;
  for (const auto& b : blocks_) {
    for (std::size_t r = 0; r < b.size(); ++r) t += b.at(r, r);
  }
  return t;
}

double ReducedDensity::purity() const {
  double p = 0.0;
  for (const auto& b : blocks_) {
    for (std::size_t r = 0; r < b.size(); ++r) {
      for (std::size_t c = 0; c < b.size(); ++c) p += b.at(r, c) * b.at(c, r);
    }
  }
  return p;
}

double ReducedDensity::symmetry_defect() const {
  double worst = 0.0;
  for (const auto& b : blocks_) {
    for (std::size_t r = 0; r < b.size(); ++r) {
      for (std::size_t c = r + 1; c < b.size(); ++c) {
        worst = std::max(worst, std::abs(b.at(r, c) - b.at(c, r)));
      }
    }
  }
  return worst;
}

ReducedDensity reduced_density(const AmplitudeVector& state, const LossChannel& channel,
                               int max_photon_number) {
  const int n = state.photon_number();
  if (n > max_photon_number) {
    throw std::invalid_argument("reduced_density: N=" + std::to_string(n) +
                                " exceeds the density-matrix cap of " +
                                std::to_string(max_photon_number));
  }
  const HalfInt j = state.j();
  std::vector<DensityBlock> blocks;
  for (int lost = 0; lost <= n; ++lost) {
    DensityBlock block;
    block.lost = lost;
    std::vector<double> v;
    for (HalfInt mu : SpinRange(j)) {
      const HalfInt k = k_of(j, mu);
      if (k.twice() < lost) continue;
      const HalfInt m = k - HalfInt::from_int(lost);
      block.mus.push_back(mu);
      v.push_back(state[mu] * d_element(k, m, k, channel.theta()));
    }
    const std::size_t dim = v.size();
    block.matrix.resize(dim * dim);
    for (std::size_t r = 0; r < dim; ++r) {
      for (std::size_t c = 0; c < dim; ++c) block.matrix[r * dim + c] = v[r] * v[c];
    }
    blocks.push_back(std::move(block));
  }
  return ReducedDensity(j, channel.loss(), std::move(blocks));
}

}  // namespace canonphase
