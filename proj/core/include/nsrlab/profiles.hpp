// Copyright 2026 The nsrlab authors
// SPDX-License-Identifier: Apache-2.0
#ifndef NSRLAB_PROFILES_HPP
#define NSRLAB_PROFILES_HPP

#include <vector>

#include "nsrlab/poly.hpp"
#include "nsrlab/rational.hpp"

namespace nsrlab {

// Polynomial bump supported on [lo, hi], identically zero outside. The
// polynomial piece vanishes to high order at the endpoints, so derivatives
// of the extension are again of this form.
struct BumpPoly {
  Poly poly;
  Rational lo{-1, 2};
  Rational hi{1, 2};

  double eval(double x) const {
    if (x <= lo_d() || x >= hi_d()) return 0.0;
    return poly.eval(x);
  }
  double lo_d() const { return to_double(lo); }
  double hi_d() const { return to_double(hi); }

  BumpPoly derivative(int order = 1) const {
    return {poly.derivative(order), lo, hi};
  }
  Rational integral() const { return poly.integral(lo, hi); }
  Rational moment(int j) const {
    std::vector<Rational> mono(j + 1, Rational(0));
    mono[j] = 1;
    return (poly * Poly(std::move(mono))).integral(lo, hi);
  }
  Rational square_integral() const { return (poly * poly).integral(lo, hi); }
};

// Largest integer <= q.
long rational_floor(const Rational& q);

// Moment order and smoothness of the 1D spatial profiles.
struct ProfileSpec {
  int N = 2;
  int m = 12;
};

// N = floor(2 (1/p - 1)); m defaults to 2N + 8 when not given.
// Throws SmoothnessTooLow if m < 2N + 6 and BadExponent if p is outside
// (0, 1).
ProfileSpec profile_spec_for(const Rational& p, int m = -1);

// The 1D spatial profiles. The parent bump is P = (1/4 - x^2)^(m+1); the
// zero-mean profile is Phi = c P' and the oscillatory one is
// phi = c P^(2N+4), with the shared constant c chosen so that the integral
// of phi^2 is exactly 1 (c^2 is rational, c itself is not).
struct SpaceProfiles {
  ProfileSpec spec;
  BumpPoly P;
  BumpPoly Phi_raw;
  BumpPoly phi_raw;
  Rational c2;

  double scale() const;
  double Phi(double x) const { return scale() * Phi_raw.eval(x); }
  double phi(double x) const { return scale() * phi_raw.eval(x); }
};

SpaceProfiles make_phi(const ProfileSpec& spec);

// 1-periodic concentration of a bump: the fundamental cell holds
// scale * mu^(1/2) * base(mu (x - shift)), and evaluation wraps x to the
// nearest period. Derivatives are taken analytically on the polynomial
// piece and carry the factor mu^l.
class Concentrated1D {
 public:
  Concentrated1D(BumpPoly base, double scale, const Rational& mu,
                 const Rational& shift, int max_deriv = 4);

  double eval(double x) const { return eval_deriv(0, x); }
  double eval_deriv(int l, double x) const;

  // Exact membership of the open support, after exact wrapping.
  bool in_support(const Rational& x) const;

  // L^s norm over one period (s = kInfExponent for the sup), optionally of
  // the l-th derivative.
  double lp_norm(double s, int l = 0, int panels = 64, int order = 16) const;

  const Rational& mu() const { return mu_; }
  const Rational& shift() const { return shift_; }
  int max_deriv() const { return static_cast<int>(derivs_.size()) - 1; }

 private:
  std::vector<BumpPoly> derivs_;
  std::vector<double> factors_;
  double scale_;
  Rational mu_, shift_;
  double mu_d_, shift_d_;
};

// The time bump g = c_g (t (1 - t))^mt on (0, 1) with integral of g^2
// exactly 1, its concentrated 1-periodic variants g_kappa (a single bump of
// width 1/kappa per unit period), and the bounded primitive h_kappa of
// g_kappa^2 - 1.
struct TimeProfiles {
  int mt = 8;
  BumpPoly g_raw;
  Rational cg2;
  Poly Q;

  double cg() const;
  double g(double s) const { return cg() * g_raw.eval(s); }
  double g_deriv(int l, double s) const;

  double g_kappa(int kappa, double t) const;
  double g_kappa_deriv(int kappa, double t) const;
  double h_kappa(int kappa, double t) const;

  // Exact rational values of the defining integrals; both equal 1 by
  // construction.
  Rational g_sq_integral() const;
  Rational g_kappa_sq_integral(int kappa) const;

 private:
  mutable std::vector<BumpPoly> gderivs_;
};

TimeProfiles make_time_profiles(int mt = 8);

// Septic smoothstep: 0 for x <= 0, 1 for x >= 1, C^3 across both joints.
double smoothstep7(double x);
double smoothstep7_deriv(double x);

// Time cutoff that is 0 on [0, t0 - tau], 1 on [t0, 1 - t0], and 0 again
// from 1 - t0 + tau on, with smoothstep transitions of width tau. t0 <= 0
// disables the cutoff (returns 1 everywhere).
double theta_window(double t, double t0, double tau);
double theta_window_deriv(double t, double t0, double tau);

}  // namespace nsrlab

#endif
