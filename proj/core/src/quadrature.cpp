// Copyright 2026 The nsrlab authors
// SPDX-License-Identifier: Apache-2.0
#include "nsrlab/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "nsrlab/errors.hpp"
#include "nsrlab/norms.hpp"

namespace nsrlab {

namespace {

GaussLegendre compute_gauss_legendre(int order) {
  GaussLegendre gl;
  gl.nodes.resize(order);
  gl.weights.resize(order);
  for (int j = 0; j < order; ++j) {
    double x = std::cos(M_PI * (j + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int n = 2; n <= order; ++n) {
        const double p2 = ((2 * n - 1) * x * p1 - (n - 1) * p0) / n;
        p0 = p1;
        p1 = p2;
      }
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    gl.nodes[j] = x;
    gl.weights[j] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return gl;
}

std::map<int, GaussLegendre> cache;
std::mutex cache_mutex;

}  // namespace

const GaussLegendre& gauss_legendre(int order) {
  if (order < 1) throw ConfigError("quadrature order must be positive");
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, compute_gauss_legendre(order)).first;
  return it->second;
}

double integrate(const std::function<double(double)>& f, double lo, double hi,
                 int panels, int order) {
  const GaussLegendre& gl = gauss_legendre(order);
  const double w = (hi - lo) / panels;
  double acc = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double a = lo + p * w;
    double panel = 0.0;
    for (int j = 0; j < order; ++j)
      panel += gl.weights[j] * f(a + 0.5 * w * (gl.nodes[j] + 1.0));
    acc += 0.5 * w * panel;
  }
  return acc;
}

double lp_norm_1d(const std::function<double(double)>& f, double s, double lo,
                  double hi, int panels, int order) {
  if (s == kInfExponent) {
    const GaussLegendre& gl = gauss_legendre(order);
    const double w = (hi - lo) / panels;
    double m = 0.0;
    for (int p = 0; p < panels; ++p) {
      const double a = lo + p * w;
      for (int j = 0; j < order; ++j)
        m = std::max(m, std::abs(f(a + 0.5 * w * (gl.nodes[j] + 1.0))));
    }
    return m;
  }
  if (s < 1.0) throw BadExponent("Lebesgue exponent must be >= 1");
  const double val = integrate(
      [&](double x) { return std::pow(std::abs(f(x)), s); }, lo, hi, panels,
      order);
  return std::pow(val, 1.0 / s);
}

}  // namespace nsrlab
