// Copyright 2026 The nsrlab authors
// SPDX-License-Identifier: Apache-2.0
#include <cmath>

#include "doctest.h"
#include "nsrlab/errors.hpp"
#include "nsrlab/norms.hpp"
#include "nsrlab/profiles.hpp"
#include "nsrlab/quadrature.hpp"

using namespace nsrlab;

TEST_CASE("gauss-legendre integrates polynomials of degree 2n-1 exactly") {
  // x^7 over [0,1] with a 4-point rule, single panel.
  const double got = integrate([](double x) { return std::pow(x, 7.0); }, 0.0,
                               1.0, 1, 4);
  CHECK(got == doctest::Approx(0.125).epsilon(1e-14));
  const double e = integrate([](double x) { return std::exp(x); }, 0.0, 1.0,
                             8, 12);
  CHECK(e == doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-14));
}

TEST_CASE("moment order follows the quasinorm exponent") {
  CHECK(profile_spec_for(Rational(1, 2)).N == 2);
  CHECK(profile_spec_for(Rational(1, 2)).m == 12);
  CHECK(profile_spec_for(Rational(2, 5)).N == 3);
  CHECK(profile_spec_for(Rational(4, 7)).N == 1);
  CHECK(profile_spec_for(Rational(1, 3)).N == 4);
  CHECK(profile_spec_for(Rational(51, 100)).N == 1);
  CHECK_THROWS_AS(profile_spec_for(Rational(1, 2), 9), SmoothnessTooLow);
  CHECK_THROWS_AS(profile_spec_for(Rational(3, 2)), BadExponent);
  CHECK_THROWS_AS(profile_spec_for(Rational(0)), BadExponent);
}

TEST_CASE("spatial profiles: normalization and moments are exact") {
  const SpaceProfiles sp = make_phi(profile_spec_for(Rational(1, 2)));

  // Phi is an exact derivative of a bump, so its mean vanishes exactly.
  CHECK(sp.Phi_raw.integral() == 0);

  // The shared rescaling makes the square integral of phi exactly 1.
  CHECK(sp.c2 * sp.phi_raw.square_integral() == 1);

  // phi = P^(2N+4) kills every moment up to order 2N+3; the next one is the
  // first survivor.
  for (int j = 0; j <= 2 * sp.spec.N + 3; ++j) {
    CAPTURE(j);
    CHECK(sp.phi_raw.moment(j) == 0);
  }
  CHECK(sp.phi_raw.moment(2 * sp.spec.N + 4) != 0);

  // phi also integrates the quadrature path consistently: its L2 norm over
  // the support is 1 after scaling.
  const double l2 = lp_norm_1d([&](double x) { return sp.phi(x); }, 2.0, -0.5,
                               0.5, 32, 16);
  CHECK(l2 == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("higher moment order shifts the first surviving moment") {
  const SpaceProfiles sp = make_phi(profile_spec_for(Rational(2, 5)));
  for (int j = 0; j <= 2 * sp.spec.N + 3; ++j) CHECK(sp.phi_raw.moment(j) == 0);
  CHECK(sp.phi_raw.moment(2 * sp.spec.N + 4) != 0);
}

TEST_CASE("concentration preserves L2 and scales L1 by mu^(-1/2)") {
  const SpaceProfiles sp = make_phi(profile_spec_for(Rational(1, 2)));
  const double base_l1 =
      lp_norm_1d([&](double x) { return sp.phi(x); }, 1.0, -0.5, 0.5, 64, 16);

  for (int mu : {1, 2, 4, 8}) {
    CAPTURE(mu);
    const Concentrated1D c(sp.phi_raw, sp.scale(), Rational(mu), Rational(0));
    CHECK(c.lp_norm(2.0) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(c.lp_norm(1.0) ==
          doctest::Approx(base_l1 / std::sqrt(double(mu))).epsilon(1e-9));
  }
}

TEST_CASE("concentration at mu = 1 is the identity on the fundamental cell") {
  const SpaceProfiles sp = make_phi(profile_spec_for(Rational(1, 2)));
  const Concentrated1D c(sp.phi_raw, sp.scale(), Rational(1), Rational(0));
  for (int i = 0; i < 101; ++i) {
    const double x = -0.5 + i / 100.0;
    CHECK(c.eval(x) == doctest::Approx(sp.phi(x)).epsilon(1e-12));
    // 1-periodicity of the extension; x + 1 is not exactly representable for
    // most sample points, so allow for the wrap's ulp magnification.
    CHECK(c.eval(x + 1.0) == doctest::Approx(c.eval(x)).epsilon(1e-9));
  }
}

TEST_CASE("concentrated derivatives carry mu^l") {
  const SpaceProfiles sp = make_phi(profile_spec_for(Rational(1, 2)));
  const int mu = 4;
  const Concentrated1D c(sp.phi_raw, sp.scale(), Rational(mu), Rational(0));
  for (int l : {1, 2}) {
    CAPTURE(l);
    const BumpPoly der = sp.phi_raw.derivative(l);
    const double base = lp_norm_1d(
        [&](double x) { return sp.scale() * der.eval(x); }, 2.0, -0.5, 0.5, 64,
        16);
    CHECK(c.lp_norm(2.0, l) ==
          doctest::Approx(std::pow(double(mu), l) * base).epsilon(1e-9));
  }
}

TEST_CASE("shifted concentration relocates the support exactly") {
  const SpaceProfiles sp = make_phi(profile_spec_for(Rational(1, 2)));
  const Rational shift(3, 16);
  const Concentrated1D plain(sp.phi_raw, sp.scale(), Rational(4), Rational(0));
  const Concentrated1D moved(sp.phi_raw, sp.scale(), Rational(4), shift);
  for (int i = 0; i < 64; ++i) {
    const double x = -0.5 + i / 64.0;
    CHECK(moved.eval(x + to_double(shift)) ==
          doctest::Approx(plain.eval(x)).epsilon(1e-12));
  }
  // Exact support queries: the open support is (shift - 1/8, shift + 1/8).
  CHECK(moved.in_support(shift));
  CHECK(moved.in_support(shift + Rational(1, 9)));
  CHECK_FALSE(moved.in_support(shift + Rational(1, 8)));
  CHECK_FALSE(moved.in_support(shift - Rational(1, 8)));
  // Wrapped queries agree.
  CHECK(moved.in_support(shift + 1));
  CHECK(moved.in_support(shift - 2));
}

TEST_CASE("time bump: unit square integral holds exactly at every kappa") {
  const TimeProfiles tp = make_time_profiles();
  CHECK(tp.g_sq_integral() == 1);
  for (int kappa : {1, 4, 16, 64})
    CHECK(tp.g_kappa_sq_integral(kappa) == 1);
}

TEST_CASE("time concentration scales L^p norms by kappa^(1/2 - 1/p)") {
  const TimeProfiles tp = make_time_profiles();
  for (double p : {1.0, 1.5, 2.0, 4.0}) {
    const double base =
        lp_norm_1d([&](double t) { return tp.g(t); }, p, 0.0, 1.0, 64, 16);
    for (int kappa : {4, 16, 64}) {
      CAPTURE(p);
      CAPTURE(kappa);
      const double got = lp_norm_1d(
          [&](double t) { return tp.g_kappa(kappa, t); }, p, 0.0,
          1.0 / kappa, 64, 16);
      const double want = std::pow(double(kappa), 0.5 - 1.0 / p) * base;
      CHECK(got == doctest::Approx(want).epsilon(1e-8));
    }
  }
}

TEST_CASE("h_kappa is a bounded 1-periodic primitive of g_kappa^2 - 1") {
  const TimeProfiles tp = make_time_profiles();
  for (int kappa : {4, 16, 64}) {
    CAPTURE(kappa);
    CHECK(std::abs(tp.h_kappa(kappa, 0.0)) < 1e-14);
    CHECK(std::abs(tp.h_kappa(kappa, 1.0)) < 1e-14);
    double sup = 0.0;
    for (int i = 0; i <= 4096; ++i) {
      const double t = i / 4096.0;
      sup = std::max(sup, std::abs(tp.h_kappa(kappa, t)));
      CHECK(tp.h_kappa(kappa, t + 1.0) ==
            doctest::Approx(tp.h_kappa(kappa, t)).epsilon(1e-12));
    }
    CHECK(sup <= 1.0);

    // h' = g_kappa^2 - 1, checked by central differences away from the
    // corner at t = 1/kappa.
    const double dt = 1e-6;
    for (double t : {0.1 / kappa, 0.6 / kappa, 2.5 / kappa, 0.9}) {
      const double fd =
          (tp.h_kappa(kappa, t + dt) - tp.h_kappa(kappa, t - dt)) / (2 * dt);
      const double want = tp.g_kappa(kappa, t) * tp.g_kappa(kappa, t) - 1.0;
      CHECK(fd == doctest::Approx(want).epsilon(1e-5));
    }
  }
}

TEST_CASE("fast phase keeps the L^p norm of g_kappa") {
  const TimeProfiles tp = make_time_profiles();
  const int kappa = 4, nu = 3;
  for (double p : {1.0, 2.0}) {
    const double plain = lp_norm_1d(
        [&](double t) { return tp.g_kappa(kappa, t); }, p, 0.0, 1.0, 256, 12);
    const double fast = lp_norm_1d(
        [&](double t) { return tp.g_kappa(kappa, nu * t); }, p, 0.0, 1.0,
        3 * 256, 12);
    CHECK(fast == doctest::Approx(plain).epsilon(1e-8));
  }
}

TEST_CASE("smoothstep joins with three vanishing derivatives") {
  CHECK(smoothstep7(0.0) == 0.0);
  CHECK(smoothstep7(1.0) == 1.0);
  CHECK(smoothstep7(-3.0) == 0.0);
  CHECK(smoothstep7(2.0) == 1.0);
  // Exact endpoint derivatives of the septic polynomial.
  Poly s({Rational(0), Rational(0), Rational(0), Rational(0), Rational(35),
          Rational(-84), Rational(70), Rational(-20)});
  Poly d = s;
  for (int order = 1; order <= 3; ++order) {
    d = d.derivative();
    CAPTURE(order);
    CHECK(d(Rational(0)) == 0);
    CHECK(d(Rational(1)) == 0);
  }
  CHECK(s(Rational(1)) == 1);
  // Monotone on [0,1].
  for (int i = 0; i < 100; ++i)
    CHECK(smoothstep7((i + 1) / 100.0) >= smoothstep7(i / 100.0));
}

TEST_CASE("theta window freezes an initial and a final time band") {
  const double t0 = 0.25, tau = 0.125;
  for (double t : {0.0, 0.1, t0 - tau}) CHECK(theta_window(t, t0, tau) == 0.0);
  for (double t : {t0, 0.5, 1.0 - t0}) CHECK(theta_window(t, t0, tau) == 1.0);
  for (double t : {1.0 - t0 + tau, 0.95, 1.0}) CHECK(theta_window(t, t0, tau) == 0.0);
  // Disabled cutoff.
  CHECK(theta_window(0.0, 0.0, tau) == 1.0);
  CHECK(theta_window_deriv(0.0, 0.0, tau) == 0.0);
  // Derivative consistency in the rising band.
  const double dt = 1e-7;
  for (double t : {t0 - 0.4 * tau, t0 - 0.1 * tau, 1.0 - t0 + 0.3 * tau}) {
    const double fd =
        (theta_window(t + dt, t0, tau) - theta_window(t - dt, t0, tau)) /
        (2 * dt);
    CHECK(fd == doctest::Approx(theta_window_deriv(t, t0, tau)).epsilon(1e-5));
  }
}
