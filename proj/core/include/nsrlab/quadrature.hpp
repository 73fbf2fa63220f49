// Copyright 2026 The nsrlab authors
// SPDX-License-Identifier: Apache-2.0
#ifndef NSRLAB_QUADRATURE_HPP
#define NSRLAB_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace nsrlab {

// Gauss-Legendre nodes and weights on [-1, 1]. Exact for polynomials of
// degree <= 2 * order - 1.
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Cached per order; computed once by Newton iteration on the Legendre
// recurrence.
const GaussLegendre& gauss_legendre(int order);

// Composite Gauss-Legendre integral of f over [lo, hi] with equal panels.
double integrate(const std::function<double(double)>& f, double lo, double hi,
                 int panels, int order = 12);

// (integral of |f|^s)^(1/s) over [lo, hi]; s = kInfExponent takes the max of
// |f| over all quadrature nodes instead.
double lp_norm_1d(const std::function<double(double)>& f, double s, double lo,
                  double hi, int panels, int order = 12);

}  // namespace nsrlab

#endif
