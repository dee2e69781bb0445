#include "canonphase/wigner.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace canonphase {
namespace {

constexpr int kLogFactorialTableSize = 2 * kMaxPhotonNumber + 2;

const std::vector<double>& log_factorial_table() {
  static const std::vector<double> table = [] {
    std::vector<double> t(kLogFactorialTableSize);
    long double acc = 0.0L;
    t[0] = 0.0;
    for (int i = 1; i < kLogFactorialTableSize; ++i) {
      acc += std::log(static_cast<long double>(i));
      t[i] = static_cast<double>(acc);
    }
    return t;
  }();
  return table;
}

double stirling_log_factorial(int n) {
  const double x = static_cast<double>(n) + 1.0;
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  // ln Gamma(x) asymptotic series; plenty of terms for x > 8000.
  const double series = inv * (1.0 / 12.0 - inv2 * (1.0 / 360.0 - inv2 * (1.0 / 1260.0 - inv2 / 1680.0)));
  return (x - 0.5) * std::log(x) - x + 0.5 * std::log(2.0 * std::numbers::pi) + series;
}

// Generalized binomial C(top, r) for integer top (possibly negative) and r >= 0.
double general_binomial(int top, int r) {
  double v = 1.0;
  for (int i = 0; i < r; ++i) v *= static_cast<double>(top - i) / static_cast<double>(i + 1);
  return v;
}

double jacobi_explicit(int n, int alpha, int beta, double x) {
  const double lo = 0.5 * (x - 1.0);
  const double hi = 0.5 * (x + 1.0);
  double sum = 0.0;
  for (int s = 0; s <= n; ++s) {
    sum += general_binomial(n + alpha, n - s) * general_binomial(n + beta, s) *
           std::pow(lo, s) * std::pow(hi, n - s);
  }
  return sum;
}

bool recurrence_is_regular(int n, int alpha, int beta) {
  const int ab = alpha + beta;
  for (int q = 2; q <= n; ++q) {
    if (q + ab == 0 || 2 * q + ab - 2 == 0) return false;
  }
  return true;
}

struct ScaledValue {
  double mantissa;
  double log_scale;  // value = mantissa * exp(log_scale)
};

// Three-term recurrence; rescales both carried terms whenever they grow
// past 1e150 so that large degrees with large parameters stay finite.
ScaledValue jacobi_recurrence(int n, int alpha, int beta, double x) {
  if (n == 0) return {1.0, 0.0};
  const double a = alpha;
  const double b = beta;
  const double ab = a + b;
  double prev = 1.0;
  double cur = 0.5 * ((ab + 2.0) * x + (a - b));
  double log_scale = 0.0;
  for (int q = 2; q <= n; ++q) {
    const double qq = q;
    const double two_q_ab = 2.0 * qq + ab;
    const double denom = 2.0 * qq * (qq + ab) * (two_q_ab - 2.0);
    const double c1 = (two_q_ab - 1.0) * (two_q_ab * (two_q_ab - 2.0) * x + a * a - b * b);
    const double c2 = 2.0 * (qq + a - 1.0) * (qq + b - 1.0) * two_q_ab;
    const double next = (c1 * cur - c2 * prev) / denom;
    prev = cur;
    cur = next;
    if (std::abs(cur) > 1e150) {
      prev *= 1e-150;
      cur *= 1e-150;
      log_scale += 150.0 * std::numbers::ln10;
    }
  }
  return {cur, log_scale};
}

}  // namespace

double log_factorial(int n) {
  if (n < 0) throw std::domain_error("log_factorial of negative integer");
  if (n < kLogFactorialTableSize) return log_factorial_table()[static_cast<std::size_t>(n)];
  return stirling_log_factorial(n);
}

double jacobi_poly(int n, int alpha, int beta, double x) {
  if (n < 0) throw std::domain_error("jacobi_poly degree must be non-negative");
  if (n == 0) return 1.0;
  if (!recurrence_is_regular(n, alpha, beta)) return jacobi_explicit(n, alpha, beta, x);
  const auto v = jacobi_recurrence(n, alpha, beta, x);
  return v.mantissa * std::exp(v.log_scale);
}

double d_element(const DElementQuery& q) {
  const HalfInt j = q.j;
  if (j.twice() < 0) throw std::domain_error("d_element: negative j");
  if (!in_spin_range(j, q.a) || !in_spin_range(j, q.b)) {
    throw std::domain_error("d_element: index outside [-j, j] (j=" + j.to_string() +
                            ", a=" + q.a.to_string() + ", b=" + q.b.to_string() + ")");
  }
  if (!(q.theta >= 0.0 && q.theta <= std::numbers::pi)) {
    throw std::domain_error("d_element: theta outside [0, pi]");
  }

  const double s = std::sin(0.5 * q.theta);
  const double c = std::cos(0.5 * q.theta);
  if (s == 0.0) return q.a == q.b ? 1.0 : 0.0;

  // All of these are integers because a - j and b - j are.
  const int jpa = (j + q.a).as_int();
  const int jma = (j - q.a).as_int();
  const int jpb = (j + q.b).as_int();
  const int jmb = (j - q.b).as_int();
  const int a_minus_b = (q.a - q.b).as_int();
  const int two_j = j.twice();

  // Map onto the branch with non-negative Jacobi parameters.
  const int k = std::min({jpb, jmb, jpa, jma});
  int alpha = 0;
  int sign_exp = 0;
  if (k == jpb) {
    alpha = a_minus_b;
    sign_exp = a_minus_b;
  } else if (k == jmb) {
    alpha = -a_minus_b;
  } else if (k == jpa) {
    alpha = -a_minus_b;
  } else {
    alpha = a_minus_b;
    sign_exp = a_minus_b;
  }
  const int beta = two_j - 2 * k - alpha;

  if (beta > 0 && c <= 0.0) return 0.0;

  const double x = std::clamp(std::cos(q.theta), -1.0, 1.0);
  const ScaledValue p = jacobi_recurrence(k, alpha, beta, x);
  if (p.mantissa == 0.0) return 0.0;

  // sqrt( (2j-k)! k! / ((k+alpha)! (k+beta)!) )
  double log_mag = 0.5 * (log_factorial(two_j - k) + log_factorial(k) -
                          log_factorial(k + alpha) - log_factorial(k + beta));
  if (alpha > 0) log_mag += alpha * std::log(s);
  if (beta > 0) log_mag += beta * std::log(c);
  log_mag += p.log_scale + std::log(std::abs(p.mantissa));

  double value = std::exp(log_mag);
  if (p.mantissa < 0.0) value = -value;
  if (sign_exp % 2 != 0) value = -value;
  return value;
}

}  // namespace canonphase
