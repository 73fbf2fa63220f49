// Copyright 2026 The nsrlab authors
// SPDX-License-Identifier: Apache-2.0
#include "nsrlab/blocks.hpp"

#include <cmath>

#include "nsrlab/errors.hpp"
#include "nsrlab/fft.hpp"
#include "nsrlab/norms.hpp"
#include "nsrlab/spectral.hpp"

namespace nsrlab {

double Direction::norm() const { return std::sqrt(double(norm2())); }

const std::array<Direction, 4>& block_directions() {
  static const std::array<Direction, 4> dirs = {
      Direction{1, 0}, Direction{0, 1}, Direction{1, 1}, Direction{1, -1}};
  return dirs;
}

Rational block_shift(int k) {
  if (k < 0 || k > 3) throw OutOfRange("block family index must be 0..3");
  return Rational((k + 1) * block_directions()[k].norm2(), 16);
}

BlockFamily::BlockFamily(const BlockParams& params, const SpaceProfiles& profiles)
    : p_(params), profiles_(profiles) {
  if (p_.lambda < 1) throw ConfigError("lambda must be a positive integer");
  if (p_.mu1 < 1) throw ConfigError("mu1 must be >= 1");
  if (p_.mu2 < p_.mu1) throw ConfigError("mu2 must be >= mu1");
  if (p_.omega <= 0) throw ConfigError("omega must be positive");
  if (p_.kappa < 1) throw ConfigError("kappa must be >= 1");
  if (p_.nu < 1) throw ConfigError("nu must be a positive integer");
  constexpr int kMaxDeriv = 6;
  const double scale = profiles_.scale();
  for (int k = 0; k < 4; ++k)
    phi1_.emplace_back(profiles_.phi_raw, scale, p_.mu1, block_shift(k),
                       kMaxDeriv);
  phi2_.emplace_back(profiles_.phi_raw, scale, p_.mu2, Rational(0), kMaxDeriv);
  Phi2_.emplace_back(profiles_.Phi_raw, scale, p_.mu2, Rational(0), kMaxDeriv);
  dPhi2_.emplace_back(profiles_.Phi_raw.derivative(), scale, p_.mu2, Rational(0),
                      kMaxDeriv);
  amp_a_ = std::pow(double(p_.lambda) * to_double(p_.mu2),
                    -(2 * profiles_.spec.N + 3));
}

void BlockFamily::check_resolution(const GridSpec& g) const {
  if (Rational(8 * p_.lambda) * p_.mu2 > g.n1)
    throw UnderResolved("grid too coarse for lambda * mu2 oscillations");
}

namespace {

double binom(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Derivative of the square of a concentrated profile by Leibniz.
double square_deriv(const Concentrated1D& c, int order, double y) {
  double acc = 0.0;
  for (int i = 0; i <= order; ++i)
    acc += binom(order, i) * c.eval_deriv(i, y) * c.eval_deriv(order - i, y);
  return acc;
}

}  // namespace

// pair 0: phi1 * phi2 (the velocity profile v); pair 1: phi1 * Phi2 (the
// potential profile); pair 2: phi1^2 * phi2^2 (the flux profile omega * q).
double BlockFamily::pair_eval(int k, int pair, int da, int db, double y1,
                              double y2) const {
  switch (pair) {
    case 0:
      return phi1_[k].eval_deriv(da, y1) * phi2_[0].eval_deriv(db, y2);
    case 1:
      return phi1_[k].eval_deriv(da, y1) * Phi2_[0].eval_deriv(db, y2);
    default:
      return square_deriv(phi1_[k], da, y1) * square_deriv(phi2_[0], db, y2);
  }
}

VectorField2 BlockFamily::W(const GridSpec& g, int k, double t) const {
  check_resolution(g);
  const Direction& d = block_directions()[k];
  const double n = d.norm(), lam = double(p_.lambda), wt = p_.omega * t;
  VectorField2 out = vector2(g);
  for (int i = 0; i < g.n1; ++i)
    for (int j = 0; j < g.n2; ++j) {
      const double x = g.x1(i), y = g.x2(j);
      const double v = pair_eval(k, 0, 0, 0, lam * (d.e1 * x + d.e2 * y + wt),
                                 lam * (d.p1() * x + d.p2() * y));
      out.at(0, i, j) = v * d.e1 / n;
      out.at(1, i, j) = v * d.e2 / n;
    }
  return out;
}

ScalarField2 BlockFamily::q(const GridSpec& g, int k, double t) const {
  check_resolution(g);
  const Direction& d = block_directions()[k];
  const double lam = double(p_.lambda), wt = p_.omega * t;
  ScalarField2 out = scalar(g);
  for (int i = 0; i < g.n1; ++i)
    for (int j = 0; j < g.n2; ++j) {
      const double x = g.x1(i), y = g.x2(j);
      out.at(0, i, j) =
          pair_eval(k, 2, 0, 0, lam * (d.e1 * x + d.e2 * y + wt),
                    lam * (d.p1() * x + d.p2() * y)) /
          p_.omega;
    }
  return out;
}

VectorField2 BlockFamily::Y(const GridSpec& g, int k, double t) const {
  const ScalarField2 qk = q(g, k, t);
  const Direction& d = block_directions()[k];
  VectorField2 out = vector2(g);
  for (int i = 0; i < g.n1; ++i)
    for (int j = 0; j < g.n2; ++j) {
      out.at(0, i, j) = qk.at(0, i, j) * d.e1;
      out.at(1, i, j) = qk.at(0, i, j) * d.e2;
    }
  return out;
}

VectorField2 BlockFamily::dtY(const GridSpec& g, int k, double t) const {
  check_resolution(g);
  const Direction& d = block_directions()[k];
  const double lam = double(p_.lambda), wt = p_.omega * t;
  VectorField2 out = vector2(g);
  for (int i = 0; i < g.n1; ++i)
    for (int j = 0; j < g.n2; ++j) {
      const double x = g.x1(i), y = g.x2(j);
      const double dq = lam * pair_eval(k, 2, 1, 0,
                                        lam * (d.e1 * x + d.e2 * y + wt),
                                        lam * (d.p1() * x + d.p2() * y));
      out.at(0, i, j) = dq * d.e1;
      out.at(1, i, j) = dq * d.e2;
    }
  return out;
}

TensorField2 BlockFamily::A(const GridSpec& g, int k, double t) const {
  check_resolution(g);
  const Direction& d = block_directions()[k];
  const double lam = double(p_.lambda), wt = p_.omega * t;
  const double ca =
      amp_a_ * std::pow(d.norm(), -(2 * profiles_.spec.N + 3)) / d.norm2();
  TensorField2 out = tensor2(g);
  for (int i = 0; i < g.n1; ++i)
    for (int j = 0; j < g.n2; ++j) {
      const double x = g.x1(i), y = g.x2(j);
      const double a = ca * pair_eval(k, 1, 0, 0,
                                      lam * (d.e1 * x + d.e2 * y + wt),
                                      lam * (d.p1() * x + d.p2() * y));
      out.at(tensor_comp(0, 0), i, j) = a * d.e1 * d.p1();
      out.at(tensor_comp(0, 1), i, j) = a * d.e1 * d.p2();
      out.at(tensor_comp(1, 0), i, j) = a * d.e2 * d.p1();
      out.at(tensor_comp(1, 1), i, j) = a * d.e2 * d.p2();
    }
  return out;
}

VectorField2 BlockFamily::dtW(const GridSpec& g, int k, double t) const {
  check_resolution(g);
  const Direction& d = block_directions()[k];
  const double n = d.norm(), lam = double(p_.lambda), wt = p_.omega * t;
  VectorField2 out = vector2(g);
  for (int i = 0; i < g.n1; ++i)
    for (int j = 0; j < g.n2; ++j) {
      const double x = g.x1(i), y = g.x2(j);
      const double dv = lam * p_.omega *
                        pair_eval(k, 0, 1, 0, lam * (d.e1 * x + d.e2 * y + wt),
                                  lam * (d.p1() * x + d.p2() * y));
      out.at(0, i, j) = dv * d.e1 / n;
      out.at(1, i, j) = dv * d.e2 / n;
    }
  return out;
}

TensorField2 BlockFamily::dtA(const GridSpec& g, int k, double t) const {
  check_resolution(g);
  const Direction& d = block_directions()[k];
  const double lam = double(p_.lambda), wt = p_.omega * t;
  const double ca =
      amp_a_ * std::pow(d.norm(), -(2 * profiles_.spec.N + 3)) / d.norm2();
  TensorField2 out = tensor2(g);
  for (int i = 0; i < g.n1; ++i)
    for (int j = 0; j < g.n2; ++j) {
      const double x = g.x1(i), y = g.x2(j);
      const double a = ca * lam * p_.omega *
                       pair_eval(k, 1, 1, 0, lam * (d.e1 * x + d.e2 * y + wt),
                                 lam * (d.p1() * x + d.p2() * y));
      out.at(tensor_comp(0, 0), i, j) = a * d.e1 * d.p1();
      out.at(tensor_comp(0, 1), i, j) = a * d.e1 * d.p2();
      out.at(tensor_comp(1, 0), i, j) = a * d.e2 * d.p1();
      out.at(tensor_comp(1, 1), i, j) = a * d.e2 * d.p2();
    }
  return out;
}

VectorField2 BlockFamily::divA(const GridSpec& g, int k, double t) const {
  check_resolution(g);
  const Direction& d = block_directions()[k];
  const double lam = double(p_.lambda), wt = p_.omega * t;
  const double ca =
      amp_a_ * std::pow(d.norm(), -(2 * profiles_.spec.N + 3)) / d.norm2();
  VectorField2 out = vector2(g);
  for (int i = 0; i < g.n1; ++i)
    for (int j = 0; j < g.n2; ++j) {
      const double x = g.x1(i), y = g.x2(j);
      const double v = ca * lam * d.norm2() *
                       pair_eval(k, 1, 0, 1, lam * (d.e1 * x + d.e2 * y + wt),
                                 lam * (d.p1() * x + d.p2() * y));
      out.at(0, i, j) = v * d.e1;
      out.at(1, i, j) = v * d.e2;
    }
  return out;
}

VectorField2 BlockFamily::divAT(const GridSpec& g, int k, double t) const {
  check_resolution(g);
  const Direction& d = block_directions()[k];
  const double lam = double(p_.lambda), wt = p_.omega * t;
  const double ca =
      amp_a_ * std::pow(d.norm(), -(2 * profiles_.spec.N + 3)) / d.norm2();
  VectorField2 out = vector2(g);
  for (int i = 0; i < g.n1; ++i)
    for (int j = 0; j < g.n2; ++j) {
      const double x = g.x1(i), y = g.x2(j);
      const double v = ca * lam * d.norm2() *
                       pair_eval(k, 1, 1, 0, lam * (d.e1 * x + d.e2 * y + wt),
                                 lam * (d.p1() * x + d.p2() * y));
      out.at(0, i, j) = v * d.p1();
      out.at(1, i, j) = v * d.p2();
    }
  return out;
}

ScalarField2 BlockFamily::f1(const GridSpec& g, int k, double t) const {
  check_resolution(g);
  const Direction& d = block_directions()[k];
  const double lam = double(p_.lambda), wt = p_.omega * t;
  ScalarField2 out = scalar(g);
  for (int i = 0; i < g.n1; ++i)
    for (int j = 0; j < g.n2; ++j) {
      const double x = g.x1(i), y = g.x2(j);
      out.at(0, i, j) = phi1_[k].eval(lam * (d.e1 * x + d.e2 * y + wt));
    }
  return out;
}

ScalarField2 BlockFamily::f2(const GridSpec& g, int k) const {
  check_resolution(g);
  const Direction& d = block_directions()[k];
  const int N = profiles_.spec.N;
  const double lam = double(p_.lambda);
  const double c2 = amp_a_ * lam * to_double(p_.mu2) *
                    std::pow(d.norm(), -(2 * N + 3));
  ScalarField2 out = scalar(g);
  for (int i = 0; i < g.n1; ++i)
    for (int j = 0; j < g.n2; ++j) {
      const double x = g.x1(i), y = g.x2(j);
      out.at(0, i, j) = c2 * dPhi2_[0].eval(lam * (d.p1() * x + d.p2() * y));
    }
  return out;
}

ScalarField2 BlockFamily::magnitude(const GridSpec& g, int k, double t,
                                    BlockQuantity which, int l) const {
  check_resolution(g);
  if (l < 0 || l > 2) throw OutOfRange("gradient order must be 0, 1 or 2");
  const Direction& d = block_directions()[k];
  const int N = profiles_.spec.N;
  const double lam = double(p_.lambda), wt = p_.omega * t;
  const double ca = amp_a_ * std::pow(d.norm(), -(2 * N + 3));

  int pair = 0, a0 = 0, b0 = 0;
  double coef = 1.0;
  switch (which) {
    case BlockQuantity::W:
      pair = 0;
      break;
    case BlockQuantity::Y:
      pair = 2;
      coef = d.norm() / p_.omega;
      break;
    case BlockQuantity::A:
      pair = 1;
      coef = ca;
      break;
    case BlockQuantity::DivAT:
      pair = 1;
      a0 = 1;
      coef = ca * lam * d.norm();
      break;
    case BlockQuantity::DivDivA:
      pair = 1;
      a0 = 1;
      b0 = 1;
      coef = ca * lam * lam * d.norm2();
      break;
    case BlockQuantity::DtA:
      pair = 1;
      a0 = 1;
      coef = ca * p_.omega * lam;
      break;
  }
  coef *= std::pow(lam * d.norm(), l);

  ScalarField2 out = scalar(g);
  for (int i = 0; i < g.n1; ++i)
    for (int j = 0; j < g.n2; ++j) {
      const double x = g.x1(i), y = g.x2(j);
      const double y1 = lam * (d.e1 * x + d.e2 * y + wt);
      const double y2 = lam * (d.p1() * x + d.p2() * y);
      double s2 = 0.0;
      for (int c = 0; c <= l; ++c) {
        const double term = pair_eval(k, pair, a0 + l - c, b0 + c, y1, y2);
        s2 += binom(l, c) * term * term;
      }
      out.at(0, i, j) = std::abs(coef) * std::sqrt(s2);
    }
  return out;
}

bool BlockFamily::in_support(int k, const Rational& x1, const Rational& x2,
                             const Rational& omega_t) const {
  const Direction& d = block_directions()[k];
  const Rational lam(p_.lambda);
  const Rational u1 = lam * (d.e1 * x1 + d.e2 * x2 + omega_t);
  const Rational u2 = lam * (d.p1() * x1 + d.p2() * x2);
  return phi1_[k].in_support(u1) && phi2_[0].in_support(u2);
}

std::vector<uint8_t> BlockFamily::support_mask(const GridSpec& g, int k,
                                               const Rational& omega_t) const {
  check_resolution(g);
  std::vector<uint8_t> mask(size_t(g.n1) * g.n2, 0);
  for (int i = 0; i < g.n1; ++i) {
    const Rational x1 = Rational(2 * i - g.n1, 2 * g.n1);
    for (int j = 0; j < g.n2; ++j) {
      const Rational x2 = Rational(2 * j - g.n2, 2 * g.n2);
      mask[size_t(i) * g.n2 + j] = in_support(k, x1, x2, omega_t) ? 1 : 0;
    }
  }
  return mask;
}

BlockIdentityReport verify_block_identities(const BlockFamily& fam,
                                            const GridSpec& g,
                                            const Rational& t) {
  BlockIdentityReport rep{};
  const double td = to_double(t);
  const double omega = fam.params().omega;
  for (int k = 0; k < 4; ++k) {
    const VectorField2 w = fam.W(g, k, td);
    const VectorField2 dty = fam.dtY(g, k, td);
    const TensorField2 ww = outer(w, w);
    const VectorField2 divww = ifft(divergence_tensor(fft(ww)));
    VectorField2 resid = divww;
    resid -= dty;
    const double denom = lebesgue_norm(dty, 2.0);
    rep.flux_residual[k] = lebesgue_norm(resid, 2.0) / (denom > 0 ? denom : 1.0);

    const double m0 = mean_of(w, 0), m1 = mean_of(w, 1);
    rep.mean_w[k] = std::hypot(m0, m1);

    const Direction& d = block_directions()[k];
    double frob = 0.0;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        const double want = (a == 0 ? d.e1 : d.e2) * (b == 0 ? d.e1 : d.e2) /
                            double(d.norm2());
        const double got = mean_of(ww, tensor_comp(a, b));
        frob += (got - want) * (got - want);
      }
    rep.second_moment_err[k] = std::sqrt(frob);

    const ScalarField2 qk = fam.q(g, k, td);
    rep.q_mean_rel_err[k] = std::abs(mean_of(qk, 0) - 1.0 / omega) * omega;
  }
  return rep;
}

std::array<int, 6> support_overlaps(const BlockFamily& fam, const GridSpec& g,
                                    const Rational& t) {
  const Rational omega_t = Rational(fam.params().omega) * t;
  std::array<std::vector<uint8_t>, 4> masks;
  for (int k = 0; k < 4; ++k) masks[k] = fam.support_mask(g, k, omega_t);
  std::array<int, 6> counts{};
  int idx = 0;
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) {
      int overlap = 0;
      for (size_t i = 0; i < masks[a].size(); ++i)
        overlap += masks[a][i] & masks[b][i];
      counts[idx++] = overlap;
    }
  return counts;
}

Rational theoretical_slope(BlockQuantity which, int l, const Rational& inv_s,
                           int N, const std::string& parameter) {
  const Rational half(1, 2), threehalf(3, 2);
  Rational lam, m1, m2, om;
  switch (which) {
    case BlockQuantity::W:
      lam = l;
      m1 = half - inv_s;
      m2 = l + half - inv_s;
      om = 0;
      break;
    case BlockQuantity::Y:
      lam = l;
      m1 = 1 - inv_s;
      m2 = l + 1 - inv_s;
      om = -1;
      break;
    case BlockQuantity::A:
      lam = l - (2 * N + 3);
      m1 = half - inv_s;
      m2 = l - (2 * N + 3) + half - inv_s;
      om = 0;
      break;
    case BlockQuantity::DivAT:
      lam = l - (2 * N + 2);
      m1 = threehalf - inv_s;
      m2 = l - (2 * N + 3) + half - inv_s;
      om = 0;
      break;
    case BlockQuantity::DivDivA:
      lam = l - (2 * N + 1);
      m1 = threehalf - inv_s;
      m2 = l - (2 * N + 2) + half - inv_s;
      om = 0;
      break;
    case BlockQuantity::DtA:
      lam = l - (2 * N + 2);
      m1 = threehalf - inv_s;
      m2 = l - (2 * N + 3) + half - inv_s;
      om = 1;
      break;
  }
  if (parameter == "lambda") return lam;
  if (parameter == "mu1") return m1;
  if (parameter == "mu2") return m2;
  if (parameter == "omega") return om;
  throw ConfigError("unknown sweep parameter '" + parameter + "'");
}

double block_norm(const BlockFamily& fam, const GridSpec& g, int k, double t,
                  BlockQuantity which, int l, double s) {
  return lebesgue_norm(fam.magnitude(g, k, t, which, l), s);
}

ScalingFit measure_scaling(const BlockParams& base, const SpaceProfiles& profiles,
                           BlockQuantity which, int l, double s,
                           const std::string& parameter,
                           const std::vector<Rational>& values, int k,
                           int min_n1, int oversample) {
  if (values.size() < 4)
    throw ConfigError("scaling sweeps need at least 4 parameter values");
  if (oversample < 8) throw ConfigError("oversample must be at least 8");
  ScalingFit fit;
  switch (which) {
    case BlockQuantity::W: fit.quantity = "W"; break;
    case BlockQuantity::Y: fit.quantity = "Y"; break;
    case BlockQuantity::A: fit.quantity = "A"; break;
    case BlockQuantity::DivAT: fit.quantity = "div_At"; break;
    case BlockQuantity::DivDivA: fit.quantity = "divdiv_A"; break;
    case BlockQuantity::DtA: fit.quantity = "dt_A"; break;
  }
  fit.parameter = parameter;
  fit.l = l;
  fit.s = s;
  const Rational inv_s = (s == kInfExponent) ? Rational(0) : 1 / Rational(s);
  fit.theoretical = to_double(theoretical_slope(which, l, inv_s,
                                                profiles.spec.N, parameter));

  for (const Rational& v : values) {
    BlockParams p = base;
    if (parameter == "lambda") {
      if (boost::multiprecision::denominator(v) != 1)
        throw ConfigError("lambda sweep values must be integers");
      p.lambda = boost::multiprecision::numerator(v).convert_to<long>();
    } else if (parameter == "mu1") {
      p.mu1 = v;
    } else if (parameter == "mu2") {
      p.mu2 = v;
    } else if (parameter == "omega") {
      p.omega = to_double(v);
    } else {
      throw ConfigError("unknown sweep parameter '" + parameter + "'");
    }
    int n1 = min_n1;
    while (Rational(oversample * p.lambda) * p.mu2 > n1) n1 *= 2;
    const GridSpec g(n1, n1, 1);
    const BlockFamily fam(p, profiles);
    fit.param_values.push_back(to_double(v));
    fit.norms.push_back(block_norm(fam, g, k, 0.0, which, l, s));
  }
  const PowerFit pf = fit_power_law(fit.param_values, fit.norms);
  fit.fitted = pf.slope;
  fit.r2 = pf.r2;
  return fit;
}

}  // namespace nsrlab
