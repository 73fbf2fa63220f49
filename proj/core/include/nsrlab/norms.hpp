// Copyright 2026 The nsrlab authors
// SPDX-License-Identifier: Apache-2.0
#ifndef NSRLAB_NORMS_HPP
#define NSRLAB_NORMS_HPP

#include <limits>
#include <vector>

#include "nsrlab/field.hpp"

namespace nsrlab {

inline constexpr double kInfExponent = std::numeric_limits<double>::infinity();

// Flat grid-mean quadrature of the pointwise Euclidean magnitude:
// ( mean |f|^s )^(1/s); s = infinity gives the max over nodes. s >= 1.
double lebesgue_norm(const Field& f, double s);

// L^r in time of per-slice L^s in space, flat quadrature on both axes.
double mixed_norm(const std::vector<double>& slice_norms, double r);

// ||u||_{L^1}^{1-sigma} * ||grad u||_{L^1}^{sigma}, 0 < sigma < 1.
double sobolev_sigma1_seminorm(const VectorField2& u, double sigma);

double linf_diff(const Field& a, const Field& b);

// Least-squares line y = intercept + slope * x, with the coefficient of
// determination of the fit.
struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
};
LinearFit fit_linear(const std::vector<double>& xs,
                     const std::vector<double>& ys);

// Least-squares fit of log2(y) against log2(x).
struct PowerFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
};
PowerFit fit_power_law(const std::vector<double>& xs,
                       const std::vector<double>& ys);

}  // namespace nsrlab

#endif
