#include "canonphase/spin.hpp"

#include <stdexcept>

namespace canonphase {

std::string HalfInt::to_string() const {
  if (is_integral()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

HalfInt from_photon_number(int n) {
  if (n < 0) throw std::invalid_argument("photon number must be non-negative");
  if (n > kMaxPhotonNumber) {
    throw std::invalid_argument("photon number exceeds " + std::to_string(kMaxPhotonNumber));
  }
  return HalfInt::from_twice(n);
}

HalfInt k_of(HalfInt j, HalfInt mu) {
  if (!in_spin_range(j, mu)) {
    throw std::out_of_range("mu=" + mu.to_string() + " outside [-j, j] for j=" + j.to_string());
  }
  // j + mu is an integer, so twice(k) = j + mu exactly.
  return HalfInt::from_twice((j + mu).as_int());
}

}  // namespace canonphase
