#pragma once

#include <compare>
#include <cstddef>
#include <iterator>
#include <string>

namespace canonphase {

/// Largest photon number accepted anywhere in the library.
inline constexpr int kMaxPhotonNumber = 4096;

/// Exact half-integer quantum number, stored as twice its value.
///
/// All summation indices of the two-mode problem (j, mu, k, m, ...) live
/// here so that index identities such as k - m == k' - n are plain integer
/// comparisons.
class HalfInt {
public:
  constexpr HalfInt() = default;

  static constexpr HalfInt from_twice(int twice) { return HalfInt(twice); }
  static constexpr HalfInt from_int(int value) { return HalfInt(2 * value); }

  constexpr int twice() const { return twice_; }
  constexpr double value() const { return 0.5 * twice_; }
  constexpr bool is_integral() const { return twice_ % 2 == 0; }

  /// Integer value; only meaningful when is_integral().
  constexpr int as_int() const { return twice_ / 2; }

  constexpr HalfInt operator-() const { return HalfInt(-twice_); }
  constexpr HalfInt& operator+=(HalfInt o) { twice_ += o.twice_; return *this; }
  constexpr HalfInt& operator-=(HalfInt o) { twice_ -= o.twice_; return *this; }
  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return a += b; }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return a -= b; }

  friend constexpr bool operator==(HalfInt, HalfInt) = default;
  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

  std::string to_string() const;

private:
  constexpr explicit HalfInt(int twice) : twice_(twice) {}
  int twice_ = 0;
};

inline constexpr HalfInt kHalf = HalfInt::from_twice(1);
inline constexpr HalfInt kOne = HalfInt::from_twice(2);

/// j = N/2. Throws std::invalid_argument for N < 0 or N > kMaxPhotonNumber.
HalfInt from_photon_number(int n);

/// k = (j + mu)/2, the spin of the (a, c) pair fed into the loss beam
/// splitter. Throws std::out_of_range if mu is not one of -j, ..., j.
HalfInt k_of(HalfInt j, HalfInt mu);

/// True iff mu is one of -j, -j+1, ..., j.
constexpr bool in_spin_range(HalfInt j, HalfInt mu) {
  return j.twice() >= 0 && mu >= -j && mu <= j && (j - mu).is_integral();
}

/// The 2j+1 magnetic quantum numbers -j, -j+1, ..., +j.
class SpinRange {
public:
  class iterator {
  public:
    using iterator_category = std::random_access_iterator_tag;
    using value_type = HalfInt;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = HalfInt;

    constexpr iterator() = default;
    constexpr explicit iterator(HalfInt v) : v_(v) {}

    constexpr HalfInt operator*() const { return v_; }
    constexpr HalfInt operator[](difference_type i) const {
      return v_ + HalfInt::from_twice(2 * static_cast<int>(i));
    }
    constexpr iterator& operator++() { v_ += kOne; return *this; }
    constexpr iterator operator++(int) { auto t = *this; ++*this; return t; }
    constexpr iterator& operator--() { v_ -= kOne; return *this; }
    constexpr iterator operator--(int) { auto t = *this; --*this; return t; }
    constexpr iterator& operator+=(difference_type d) {
      v_ += HalfInt::from_twice(2 * static_cast<int>(d));
      return *this;
    }
    constexpr iterator& operator-=(difference_type d) { return *this += -d; }
    friend constexpr iterator operator+(iterator it, difference_type d) { return it += d; }
    friend constexpr iterator operator+(difference_type d, iterator it) { return it += d; }
    friend constexpr iterator operator-(iterator it, difference_type d) { return it -= d; }
    friend constexpr difference_type operator-(iterator a, iterator b) {
      return (a.v_.twice() - b.v_.twice()) / 2;
    }
    friend constexpr bool operator==(iterator, iterator) = default;
    friend constexpr auto operator<=>(iterator, iterator) = default;

  private:
    HalfInt v_;
  };

  constexpr explicit SpinRange(HalfInt j) : j_(j) {}

  constexpr HalfInt j() const { return j_; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(j_.twice() + 1); }
  constexpr iterator begin() const { return iterator(-j_); }
  constexpr iterator end() const { return iterator(j_ + kOne); }
  constexpr HalfInt operator[](std::size_t i) const { return begin()[static_cast<std::ptrdiff_t>(i)]; }

  /// Dense position of mu in the range (0 for -j). Caller guarantees membership.
  constexpr std::size_t index_of(HalfInt mu) const {
    return static_cast<std::size_t>((mu.twice() + j_.twice()) / 2);
  }

private:
  HalfInt j_;
};

}  // namespace canonphase
