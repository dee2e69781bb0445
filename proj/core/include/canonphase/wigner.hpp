#pragma once

#include "canonphase/spin.hpp"

namespace canonphase {

/// ln(n!) for n >= 0. Tabulated up to 2 * kMaxPhotonNumber, Stirling series above.
double log_factorial(int n);

/// Jacobi polynomial P_n^{(alpha, beta)}(x) by the three-term recurrence in n.
///
/// Negative parameters (alpha, beta >= -n) are accepted; when the recurrence
/// would divide by zero the explicit binomial sum is used instead.
double jacobi_poly(int n, int alpha, int beta, double x);

/// One matrix element d^j_{a,b}(theta) of the spin-j rotation
/// exp(-i theta J_y) in the |j, m>_z basis.
struct DElementQuery {
  HalfInt j;
  HalfInt a;
  HalfInt b;
  double theta = 0.0;  ///< radians, [0, pi]
};

/// Wigner small-d element, standard convention (d^{1/2}_{1/2,-1/2} = -sin(theta/2)).
///
/// The (a, b) pair is mapped by the usual symmetries onto the branch where
/// both Jacobi parameters are non-negative; the factorial prefactor and the
/// half-angle powers are combined in the log domain, so 2j in the thousands
/// neither overflows nor underflows prematurely. Exactly delta_{ab} at
/// theta = 0.
///
/// Throws std::domain_error if a or b is outside [-j, j] or theta is outside
/// [0, pi].
double d_element(const DElementQuery& q);

inline double d_element(HalfInt j, HalfInt a, HalfInt b, double theta) {
  return d_element(DElementQuery{j, a, b, theta});
}

}  // namespace canonphase
