// Copyright 2026 The nsrlab authors
// SPDX-License-Identifier: Apache-2.0
#include "nsrlab/profiles.hpp"

#include <cmath>

#include "nsrlab/errors.hpp"
#include "nsrlab/norms.hpp"
#include "nsrlab/quadrature.hpp"

namespace nsrlab {

long rational_floor(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  BigInt f = num / den;
  if (num < 0 && f * den != num) f -= 1;
  return f.convert_to<long>();
}

ProfileSpec profile_spec_for(const Rational& p, int m) {
  if (p <= 0 || p >= 1) throw BadExponent("profile parameter p must lie in (0, 1)");
  ProfileSpec spec;
  spec.N = static_cast<int>(rational_floor(2 * (1 / p - 1)));
  spec.m = (m < 0) ? 2 * spec.N + 8 : m;
  if (spec.m < 2 * spec.N + 6)
    throw SmoothnessTooLow("profile smoothness m must be at least 2N + 6");
  return spec;
}

SpaceProfiles make_phi(const ProfileSpec& spec) {
  if (spec.m < 2 * spec.N + 6)
    throw SmoothnessTooLow("profile smoothness m must be at least 2N + 6");
  SpaceProfiles out;
  out.spec = spec;
  // (1/4 - x^2)^(m+1)
  Poly quarter_minus_x2({Rational(1, 4), Rational(0), Rational(-1)});
  Poly pbump = Poly::constant(1);
  for (int i = 0; i < spec.m + 1; ++i) pbump = pbump * quarter_minus_x2;
  out.P = {pbump, Rational(-1, 2), Rational(1, 2)};
  out.Phi_raw = out.P.derivative();
  out.phi_raw = out.P.derivative(2 * spec.N + 4);
  const Rational s2 = out.phi_raw.square_integral();
  if (s2 == 0) throw SmoothnessTooLow("oscillatory profile vanished; increase m");
  out.c2 = 1 / s2;
  return out;
}

double SpaceProfiles::scale() const { return std::sqrt(to_double(c2)); }

namespace {

// Wrap to the fundamental cell [-1/2, 1/2), exactly in rational arithmetic.
Rational wrap_rational(const Rational& x) {
  return x - Rational(rational_floor(x + Rational(1, 2)));
}

}  // namespace

Concentrated1D::Concentrated1D(BumpPoly base, double scale, const Rational& mu,
                               const Rational& shift, int max_deriv)
    : scale_(scale),
      mu_(mu),
      shift_(shift),
      mu_d_(to_double(mu)),
      shift_d_(to_double(shift)) {
  if (mu < 1) throw ConfigError("concentration factor must be >= 1");
  if (base.lo < Rational(-1, 2) || base.hi > Rational(1, 2))
    throw ConfigError("bump support must lie within one period");
  derivs_.reserve(max_deriv + 1);
  factors_.reserve(max_deriv + 1);
  derivs_.push_back(std::move(base));
  const double sqrt_mu = std::sqrt(mu_d_);
  factors_.push_back(scale_ * sqrt_mu);
  for (int l = 1; l <= max_deriv; ++l) {
    derivs_.push_back(derivs_.back().derivative());
    factors_.push_back(factors_.back() * mu_d_);
  }
}

double Concentrated1D::eval_deriv(int l, double x) const {
  if (l < 0 || l > max_deriv())
    throw OutOfRange("derivative order beyond the precomputed cache");
  double y = x - shift_d_;
  y -= std::nearbyint(y);
  const double u = mu_d_ * y;
  const BumpPoly& b = derivs_[l];
  if (u <= b.lo_d() || u >= b.hi_d()) return 0.0;
  return factors_[l] * b.poly.eval(u);
}

bool Concentrated1D::in_support(const Rational& x) const {
  const Rational u = mu_ * wrap_rational(x - shift_);
  return u > derivs_[0].lo && u < derivs_[0].hi;
}

double Concentrated1D::lp_norm(double s, int l, int panels, int order) const {
  const double lo = shift_d_ + derivs_[0].lo_d() / mu_d_;
  const double hi = shift_d_ + derivs_[0].hi_d() / mu_d_;
  return lp_norm_1d([&](double x) { return eval_deriv(l, x); }, s, lo, hi,
                    panels, order);
}

double TimeProfiles::cg() const { return std::sqrt(to_double(cg2)); }

double TimeProfiles::g_deriv(int l, double s) const {
  if (l < 0) throw OutOfRange("derivative order must be nonnegative");
  while (static_cast<int>(gderivs_.size()) <= l)
    gderivs_.push_back(gderivs_.empty() ? g_raw.derivative()
                                        : gderivs_.back().derivative());
  if (l == 0) return g(s);
  return cg() * gderivs_[l - 1].eval(s);
}

double TimeProfiles::g_kappa(int kappa, double t) const {
  if (kappa < 1) throw ConfigError("time concentration must be >= 1");
  const double frac = t - std::floor(t);
  const double u = kappa * frac;
  if (u >= 1.0) return 0.0;
  return std::sqrt(static_cast<double>(kappa)) * g(u);
}

double TimeProfiles::g_kappa_deriv(int kappa, double t) const {
  if (kappa < 1) throw ConfigError("time concentration must be >= 1");
  const double frac = t - std::floor(t);
  const double u = kappa * frac;
  if (u >= 1.0) return 0.0;
  return std::pow(static_cast<double>(kappa), 1.5) * g_deriv(1, u);
}

double TimeProfiles::h_kappa(int kappa, double t) const {
  if (kappa < 1) throw ConfigError("time concentration must be >= 1");
  const double frac = t - std::floor(t);
  const double u = std::min(kappa * frac, 1.0);
  // Q has huge alternating coefficients that cancel to O(1); double Horner
  // loses ~1e-3 here, so evaluate the polynomial exactly instead.
  return to_double(Q(Rational(u))) - frac;
}

Rational TimeProfiles::g_sq_integral() const {
  return cg2 * g_raw.square_integral();
}

Rational TimeProfiles::g_kappa_sq_integral(int kappa) const {
  if (kappa < 1) throw ConfigError("time concentration must be >= 1");
  // kappa * g(kappa t)^2 integrated over [0, 1/kappa], all rational.
  const Poly sq = (g_raw.poly * g_raw.poly).compose_affine(0, Rational(kappa));
  return cg2 * Rational(kappa) * sq.integral(0, Rational(1, kappa));
}

TimeProfiles make_time_profiles(int mt) {
  if (mt < 2) throw SmoothnessTooLow("time bump exponent must be at least 2");
  TimeProfiles out;
  out.mt = mt;
  // (t(1-t))^mt
  Poly t1mt({Rational(0), Rational(1)});
  t1mt = t1mt * Poly({Rational(1), Rational(-1)});
  Poly bump = Poly::constant(1);
  for (int i = 0; i < mt; ++i) bump = bump * t1mt;
  out.g_raw = {bump, Rational(0), Rational(1)};
  out.cg2 = 1 / out.g_raw.square_integral();
  out.Q = (out.g_raw.poly * out.g_raw.poly).antiderivative() * out.cg2;
  return out;
}

double smoothstep7(double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  if (x <= 0.5)
    return ((((-20.0 * x + 70.0) * x - 84.0) * x + 35.0) * x) * x * x * x;
  // Near one the monomial form cancels 209 against 1; the reflected form
  // s(x) = 1 - s(1 - x) keeps the plateau value at exactly one.
  const double u = 1.0 - x;
  return 1.0 - ((((-20.0 * u + 70.0) * u - 84.0) * u + 35.0) * u) * u * u * u;
}

double smoothstep7_deriv(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  const double u = 1.0 - x;
  return 140.0 * (x * x * x) * (u * u * u);
}

double theta_window(double t, double t0, double tau) {
  if (t0 <= 0.0) return 1.0;
  if (tau <= 0.0) throw ConfigError("cutoff transition width must be positive");
  const double up = smoothstep7((t - (t0 - tau)) / tau);
  const double down = smoothstep7(((1.0 - t0 + tau) - t) / tau);
  return std::min(up, down);
}

double theta_window_deriv(double t, double t0, double tau) {
  if (t0 <= 0.0) return 0.0;
  if (tau <= 0.0) throw ConfigError("cutoff transition width must be positive");
  const double su = (t - (t0 - tau)) / tau;
  const double sd = ((1.0 - t0 + tau) - t) / tau;
  if (su > 0.0 && su < 1.0 && sd >= 1.0) return smoothstep7_deriv(su) / tau;
  if (sd > 0.0 && sd < 1.0 && su >= 1.0) return -smoothstep7_deriv(sd) / tau;
  return 0.0;
}

}  // namespace nsrlab
