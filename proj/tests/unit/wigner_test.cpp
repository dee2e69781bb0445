#include "canonphase/wigner.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "oracle.hpp"

using namespace canonphase;

namespace {

constexpr double kPi = std::numbers::pi;

// Explicit binomial-sum form of the Jacobi polynomial, test-side only.
double jacobi_sum(int n, int alpha, int beta, double x) {
  auto binom = [](double top, int r) {
    double v = 1.0;
    for (int i = 0; i < r; ++i) v *= (top - i) / (i + 1);
    return v;
  };
  double s = 0.0;
  for (int k = 0; k <= n; ++k) {
    s += binom(n + alpha, n - k) * binom(n + beta, k) * std::pow(0.5 * (x - 1), k) *
         std::pow(0.5 * (x + 1), n - k);
  }
  return s;
}

}  // namespace

TEST(LogFactorial, Examples) {
  EXPECT_EQ(log_factorial(0), 0.0);
  EXPECT_EQ(log_factorial(1), 0.0);
  EXPECT_NEAR(log_factorial(10), 15.104412573075515295, 1e-12 * 15.1);
}

TEST(LogFactorial, MatchesExactFactorialsAndStirlingTail) {
  double f = 1.0;
  for (int n = 1; n <= 20; ++n) {
    f *= n;
    EXPECT_NEAR(log_factorial(n), std::log(f), 1e-12 * std::max(1.0, std::log(f))) << n;
  }
  // Table / asymptotic-series seam.
  for (int n : {8190, 8192, 8193, 8200, 20000}) {
    const double ref = std::lgamma(n + 1.0);
    EXPECT_NEAR(log_factorial(n), ref, 1e-12 * ref) << n;
  }
  EXPECT_THROW(log_factorial(-1), std::domain_error);
}

TEST(JacobiPoly, Examples) {
  EXPECT_EQ(jacobi_poly(0, 3, -2, 0.3), 1.0);
  for (double x : {-1.0, -0.4, 0.0, 0.25, 1.0}) EXPECT_DOUBLE_EQ(jacobi_poly(1, 0, 0, x), x);
  // 15x^2/4 - 3/4
  EXPECT_NEAR(jacobi_poly(2, 1, 1, 0.0), -0.75, 1e-15);
  EXPECT_NEAR(jacobi_poly(2, 1, 1, 0.6), 15.0 * 0.36 / 4 - 0.75, 1e-14);
  // P_3^{(2,-1)}(2/5) = 161/200
  EXPECT_NEAR(jacobi_poly(3, 2, -1, 0.4), 0.805, 1e-14);
}

TEST(JacobiPoly, AgreesWithExplicitSumIncludingNegativeParameters) {
  for (int n = 0; n <= 12; ++n) {
    for (int alpha = -n; alpha <= 6; ++alpha) {
      for (int beta = -n; beta <= 6; ++beta) {
        for (double x : {-0.9, -0.3, 0.0, 0.45, 0.99}) {
          const double ref = jacobi_sum(n, alpha, beta, x);
          ASSERT_NEAR(jacobi_poly(n, alpha, beta, x), ref, 1e-9 * std::max(1.0, std::abs(ref)))
              << n << ' ' << alpha << ' ' << beta << ' ' << x;
        }
      }
    }
  }
}

TEST(DElement, Examples) {
  EXPECT_NEAR(d_element(kHalf, kHalf, kHalf, kPi / 2), std::cos(kPi / 4), 1e-15);
  // cos^2(theta/2) = 0.7 with j = k = 1
  const double theta = 2.0 * std::acos(std::sqrt(0.7));
  EXPECT_NEAR(d_element(kOne, kOne, kOne, theta), 0.7, 1e-14);
}

TEST(DElement, FrozenReferenceValues) {
  // Independent symbolic evaluation of exp(-i beta J_y) matrix elements.
  EXPECT_NEAR(d_element(kOne, kOne, HalfInt{}, 0.7), -0.45553069520608569151, 1e-14);
  EXPECT_NEAR(d_element(HalfInt::from_twice(3), kHalf, HalfInt::from_twice(-3), 2.5), 0.49185121249235911531,
              1e-14);
  EXPECT_NEAR(d_element(HalfInt::from_int(2), HalfInt::from_int(-1), kOne, 1.2), 0.54987573500895958745, 1e-14);
  EXPECT_NEAR(d_element(kHalf, kHalf, -kHalf, 1.0), -std::sin(0.5), 1e-15);
}

TEST(DElement, IdentityAtZeroIsExact) {
  for (int two_j = 0; two_j <= 24; ++two_j) {
    const HalfInt j = HalfInt::from_twice(two_j);
    for (HalfInt a : SpinRange(j)) {
      for (HalfInt b : SpinRange(j)) ASSERT_EQ(d_element(j, a, b, 0.0), a == b ? 1.0 : 0.0);
    }
  }
}

TEST(DElement, RowNormalization) {
  for (int two_j = 0; two_j <= 24; ++two_j) {
    const HalfInt j = HalfInt::from_twice(two_j);
    for (double theta : {0.05, 0.7, kPi / 2, 2.5, kPi}) {
      for (HalfInt a : SpinRange(j)) {
        double sum = 0.0;
        for (HalfInt b : SpinRange(j)) sum += std::pow(d_element(j, a, b, theta), 2);
        ASSERT_NEAR(sum, 1.0, 1e-10) << two_j << ' ' << a.to_string() << ' ' << theta;
      }
    }
  }
}

TEST(DElement, DiagonalCorner) {
  for (int two_k = 0; two_k <= 24; ++two_k) {
    const HalfInt k = HalfInt::from_twice(two_k);
    for (double theta : {0.1, 0.9, 1.7, 3.0}) {
      ASSERT_NEAR(d_element(k, k, k, theta), std::pow(std::cos(theta / 2), two_k), 1e-12);
    }
  }
}

TEST(DElement, Symmetry) {
  for (int two_j = 0; two_j <= 16; ++two_j) {
    const HalfInt j = HalfInt::from_twice(two_j);
    for (double theta : {0.3, 1.9}) {
      for (HalfInt a : SpinRange(j)) {
        for (HalfInt b : SpinRange(j)) {
          const double sign = ((a - b).as_int() % 2 == 0) ? 1.0 : -1.0;
          ASSERT_NEAR(d_element(j, a, b, theta), sign * d_element(j, b, a, theta), 1e-10);
          ASSERT_NEAR(d_element(j, a, b, theta), d_element(j, -b, -a, theta), 1e-10);
        }
      }
    }
  }
}

TEST(DElement, MatchesMatrixExponentialOracle) {
  double worst = 0.0;
  for (int two_j = 0; two_j <= 12; ++two_j) {
    const HalfInt j = HalfInt::from_twice(two_j);
    const SpinRange range(j);
    for (double theta : {0.1, 0.7, kPi / 2, 2.5}) {
      const Eigen::MatrixXcd ref = oracle::rotation_y(j, theta);
      const Eigen::MatrixXcd bs = oracle::bs_unitary(j, theta);
      for (std::size_t r = 0; r < range.size(); ++r) {
        for (std::size_t c = 0; c < range.size(); ++c) {
          const double d = d_element(j, range[r], range[c], theta);
          const auto ri = static_cast<Eigen::Index>(r);
          const auto ci = static_cast<Eigen::Index>(c);
          worst = std::max(worst, std::abs(d - ref(ri, ci).real()));
          worst = std::max(worst, std::abs(std::abs(d) - std::abs(bs(ri, ci))));
        }
      }
    }
  }
  EXPECT_LE(worst, 1e-8);
}

TEST(DElement, LargeSpinStaysBoundedAndNormalized) {
  const HalfInt j = HalfInt::from_int(500);
  for (double theta : {0.02, 0.7, 2.0}) {
    for (HalfInt a : {-j, HalfInt::from_int(-137), HalfInt{}, HalfInt::from_int(250), j}) {
      double sum = 0.0;
      for (HalfInt b : SpinRange(j)) {
        const double d = d_element(j, a, b, theta);
        ASSERT_TRUE(std::isfinite(d));
        ASSERT_LE(std::abs(d), 1.0 + 1e-12);
        sum += d * d;
      }
      EXPECT_NEAR(sum, 1.0, 1e-9) << a.to_string() << ' ' << theta;
    }
  }
  // Corner element at the largest supported spin.
  const HalfInt big = from_photon_number(kMaxPhotonNumber);
  const double theta = 2.0 * std::acos(std::sqrt(0.999));
  EXPECT_NEAR(d_element(big, big, big, theta), std::pow(0.999, big.value()),
              1e-12 * std::pow(0.999, big.value()));
}

TEST(DElement, RejectsInvalidQueries) {
  EXPECT_THROW(d_element(kOne, HalfInt::from_int(2), kOne, 0.3), std::domain_error);
  EXPECT_THROW(d_element(kOne, kHalf, kOne, 0.3), std::domain_error);
  EXPECT_THROW(d_element(kOne, kOne, kOne, -0.1), std::domain_error);
  EXPECT_THROW(d_element(kOne, kOne, kOne, 3.5), std::domain_error);
}
