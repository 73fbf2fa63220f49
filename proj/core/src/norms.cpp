// Copyright 2026 The nsrlab authors
// SPDX-License-Identifier: Apache-2.0
#include "nsrlab/norms.hpp"

#include <cmath>

#include "nsrlab/errors.hpp"
#include "nsrlab/spectral.hpp"

namespace nsrlab {

double lebesgue_norm(const Field& f, double s) {
  if (!(s >= 1.0)) throw BadExponent("lebesgue_norm needs s >= 1");
  const GridSpec& g = f.grid();
  const long n = g.nodes();
  if (std::isinf(s)) {
    double mx = 0.0;
    for (long i = 0; i < n; ++i) {
      double mag2 = 0.0;
      for (int c = 0; c < f.comps(); ++c) {
        const double v = f.comp(c)[i];
        mag2 += v * v;
      }
      mx = std::max(mx, mag2);
    }
    return std::sqrt(mx);
  }
  double acc = 0.0;
  for (long i = 0; i < n; ++i) {
    double mag2 = 0.0;
    for (int c = 0; c < f.comps(); ++c) {
      const double v = f.comp(c)[i];
      mag2 += v * v;
    }
    if (s == 2.0) {
      acc += mag2;
    } else if (s == 1.0) {
      acc += std::sqrt(mag2);
    } else {
      acc += std::pow(mag2, 0.5 * s);
    }
  }
  acc /= static_cast<double>(n);
  return s == 2.0 ? std::sqrt(acc)
                  : (s == 1.0 ? acc : std::pow(acc, 1.0 / s));
}

double mixed_norm(const std::vector<double>& slice_norms, double r) {
  if (!(r >= 1.0)) throw BadExponent("mixed_norm needs r >= 1");
  if (slice_norms.empty()) return 0.0;
  if (std::isinf(r)) {
    double mx = 0.0;
    for (double v : slice_norms) mx = std::max(mx, v);
    return mx;
  }
  double acc = 0.0;
  for (double v : slice_norms) acc += std::pow(v, r);
  acc /= static_cast<double>(slice_norms.size());
  return std::pow(acc, 1.0 / r);
}

double sobolev_sigma1_seminorm(const VectorField2& u, double sigma) {
  if (!(sigma > 0.0 && sigma < 1.0))
    throw BadExponent("sobolev_sigma1_seminorm needs sigma in (0,1)");
  const double l1 = lebesgue_norm(u, 1.0);
  const double g1 = lebesgue_norm(gradient_vec(u), 1.0);
  if (l1 == 0.0 || g1 == 0.0) return 0.0;
  return std::pow(l1, 1.0 - sigma) * std::pow(g1, sigma);
}

double linf_diff(const Field& a, const Field& b) {
  double mx = 0.0;
  for (size_t i = 0; i < a.size(); ++i)
    mx = std::max(mx, std::abs(a.data()[i] - b.data()[i]));
  return mx;
}

LinearFit fit_linear(const std::vector<double>& xs,
                     const std::vector<double>& ys) {
  if (xs.size() != ys.size() || xs.size() < 2)
    throw BadExponent("fit_linear needs >= 2 points");
  const size_t n = xs.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  for (size_t i = 0; i < n; ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
    syy += ys[i] * ys[i];
  }
  const double dn = static_cast<double>(n);
  const double denom = dn * sxx - sx * sx;
  LinearFit fit;
  fit.slope = (dn * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / dn;
  const double ss_tot = syy - sy * sy / dn;
  double ss_res = 0.0;
  for (size_t i = 0; i < n; ++i) {
    const double resid = ys[i] - (fit.slope * xs[i] + fit.intercept);
    ss_res += resid * resid;
  }
  fit.r2 = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
  return fit;
}

PowerFit fit_power_law(const std::vector<double>& xs,
                       const std::vector<double>& ys) {
  if (xs.size() != ys.size() || xs.size() < 2)
    throw BadExponent("fit_power_law needs >= 2 points");
  std::vector<double> lx(xs.size()), ly(ys.size());
  for (size_t i = 0; i < xs.size(); ++i) {
    lx[i] = std::log2(xs[i]);
    ly[i] = std::log2(ys[i]);
  }
  const LinearFit lin = fit_linear(lx, ly);
  return PowerFit{lin.slope, lin.intercept, lin.r2};
}

}  // namespace nsrlab
