// Copyright 2026 The nsrlab authors
// SPDX-License-Identifier: Apache-2.0
#include "nsrlab/nash.hpp"

#include <cmath>
#include <string>

#include "nsrlab/errors.hpp"
#include "nsrlab/profiles.hpp"

namespace nsrlab {

namespace {

double frobenius2(double d11, double d12, double d22) {
  return d11 * d11 + 2.0 * d12 * d12 + d22 * d22;
}

void require_symmetric_traceless(const TensorField2& r0) {
  if (r0.comps() != 4)
    throw ConfigError("amplitude input must be a rank-2 tensor field, got " +
                      std::to_string(r0.comps()) + " components");
  const GridSpec& g = r0.grid();
  double scale = 0.0;
  for (size_t i = 0; i < r0.size(); ++i)
    scale = std::max(scale, std::abs(r0.data()[i]));
  const double tol = 1e-12 * std::max(scale, 1.0);
  for (int i1 = 0; i1 < g.n1; ++i1) {
    for (int i2 = 0; i2 < g.n2; ++i2) {
      const double skew =
          r0.at(tensor_comp(0, 1), i1, i2) - r0.at(tensor_comp(1, 0), i1, i2);
      const double tr =
          r0.at(tensor_comp(0, 0), i1, i2) + r0.at(tensor_comp(1, 1), i1, i2);
      if (std::abs(skew) > tol)
        throw OutOfRange("amplitude input must be symmetric, skew part " +
                         std::to_string(skew));
      if (std::abs(tr) > tol)
        throw OutOfRange("amplitude input must be traceless, trace " +
                         std::to_string(tr));
    }
  }
}

}  // namespace

GammaCoeffs gamma_coeffs(double a11, double a12, double a22) {
  const double dist2 = frobenius2(a11 - 1.0, a12, a22 - 1.0);
  if (!(dist2 < 1.0 / 64.0))
    throw OutOfRange("matrix sits " + std::to_string(std::sqrt(dist2)) +
                     " from the identity, need < 0.125 for positive weights");
  return GammaCoeffs{{a11 - 0.5, a22 - 0.5, 0.5 + a12, 0.5 - a12}};
}

ScalarField2 amplitude_regularizer(const TensorField2& r0, double eps) {
  if (!(eps > 0.0))
    throw OutOfRange("regularizer floor must be positive, got " +
                     std::to_string(eps));
  require_symmetric_traceless(r0);
  const GridSpec& g = r0.grid();
  ScalarField2 rho(g, 1);
  for (int i1 = 0; i1 < g.n1; ++i1) {
    for (int i2 = 0; i2 < g.n2; ++i2) {
      const double f2 = frobenius2(r0.at(tensor_comp(0, 0), i1, i2),
                                   r0.at(tensor_comp(0, 1), i1, i2),
                                   r0.at(tensor_comp(1, 1), i1, i2));
      rho.at(0, i1, i2) = 10.0 * std::sqrt(eps * eps + f2);
    }
  }
  return rho;
}

AmplitudeSet amplitudes(const TensorField2& r0, double eps, double theta) {
  const ScalarField2 rho = amplitude_regularizer(r0, eps);
  const GridSpec& g = r0.grid();
  AmplitudeSet set{{ScalarField2(g, 1), ScalarField2(g, 1), ScalarField2(g, 1),
                    ScalarField2(g, 1)}};
  for (int i1 = 0; i1 < g.n1; ++i1) {
    for (int i2 = 0; i2 < g.n2; ++i2) {
      const double p = rho.at(0, i1, i2);
      const GammaCoeffs gc =
          gamma_coeffs(1.0 + r0.at(tensor_comp(0, 0), i1, i2) / p,
                       r0.at(tensor_comp(0, 1), i1, i2) / p,
                       1.0 + r0.at(tensor_comp(1, 1), i1, i2) / p);
      for (int k = 0; k < 4; ++k)
        set.a[k].at(0, i1, i2) = theta * std::sqrt(p * gc.c[k]);
    }
  }
  return set;
}

void CutoffSpec::validate() const {
  if (!enabled()) {
    if (tau != 0.0)
      throw BadWindow("disabled cutoff must have zero transition width, got " +
                      std::to_string(tau));
    return;
  }
  if (!(0.0 < tau && tau < t0 && t0 < 0.5))
    throw BadWindow("cutoff needs 0 < tau < t0 < 1/2, got t0 " +
                    std::to_string(t0) + " tau " + std::to_string(tau));
}

double CutoffSpec::theta(double t) const {
  validate();
  return theta_window(t, t0, tau);
}

double CutoffSpec::theta_slope(double t) const {
  validate();
  return theta_window_deriv(t, t0, tau);
}

}  // namespace nsrlab
