// Copyright 2026 The nsrlab authors
// SPDX-License-Identifier: Apache-2.0
#ifndef NSRLAB_NASH_HPP
#define NSRLAB_NASH_HPP

#include <array>

#include "nsrlab/field.hpp"

namespace nsrlab {

// Weights writing a symmetric 2x2 matrix as sum_k c_k d_k (x) d_k over the
// four unit lattice directions d_k. The first two dyads are the axis
// projectors and the diagonal pair sums to the identity, so the affine
// solution below reconstructs the input exactly; near the identity every
// weight stays positive, with margin 3/8 at distance 1/8.
struct GammaCoeffs {
  std::array<double, 4> c;
};

// c1 = A11 - 1/2, c2 = A22 - 1/2, c3 = 1/2 + A12, c4 = 1/2 - A12.
// Throws OutOfRange unless |A - I| < 1/8 in the Frobenius norm (off-diagonal
// counted twice), which keeps every weight at least 3/8 - handily positive.
GammaCoeffs gamma_coeffs(double a11, double a12, double a22);

// Pointwise regularizer 10 sqrt(eps^2 + |R|^2) for a traceless symmetric
// tensor field; |R/rho| <= 1/10 follows, which keeps I + R/rho admissible
// for gamma_coeffs everywhere. Throws OutOfRange for eps <= 0 or a field
// that is not symmetric traceless.
ScalarField2 amplitude_regularizer(const TensorField2& r0, double eps);

// Block amplitudes on one time slice: a_k = theta sqrt(rho c_k(I + R/rho)).
// Squared and summed against the direction dyads they reproduce
// theta^2 (rho I + R) pointwise.
struct AmplitudeSet {
  std::array<ScalarField2, 4> a;
};

AmplitudeSet amplitudes(const TensorField2& r0, double eps, double theta);

// Temporal cutoff keeping perturbations away from the ends of [0,1]:
// zero outside (t0 - tau, 1 - t0 + tau), one on [t0, 1 - t0], seventh-order
// smoothstep transitions of width tau. t0 = 0 disables the cutoff (theta
// identically one). Enabled windows must satisfy 0 < tau < t0 < 1/2.
struct CutoffSpec {
  double t0 = 0.0;
  double tau = 0.0;

  bool enabled() const { return t0 > 0.0; }
  // Throws BadWindow when the window parameters are inconsistent.
  void validate() const;
  double theta(double t) const;
  double theta_slope(double t) const;
};

}  // namespace nsrlab

#endif
