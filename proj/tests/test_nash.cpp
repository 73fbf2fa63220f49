// Copyright 2026 The nsrlab authors
// SPDX-License-Identifier: Apache-2.0
#include "nsrlab/nash.hpp"

#include <array>
#include <cmath>
#include <random>

#include "doctest.h"
#include "nsrlab/blocks.hpp"
#include "nsrlab/errors.hpp"
#include "nsrlab/fft.hpp"
#include "nsrlab/spectral.hpp"
#include "test_util.hpp"

using namespace nsrlab;

namespace {

// Sum of c_k d_k (x) d_k over the four lattice directions, as the
// (11, 12, 22) entries of the resulting symmetric matrix.
std::array<double, 3> reconstruct(const GammaCoeffs& gc) {
  const auto& dirs = block_directions();
  std::array<double, 3> m{0.0, 0.0, 0.0};
  for (int k = 0; k < 4; ++k) {
    const double n2 = dirs[k].norm2();
    m[0] += gc.c[k] * dirs[k].e1 * dirs[k].e1 / n2;
    m[1] += gc.c[k] * dirs[k].e1 * dirs[k].e2 / n2;
    m[2] += gc.c[k] * dirs[k].e2 * dirs[k].e2 / n2;
  }
  return m;
}

TensorField2 random_traceless(const GridSpec& g, int kmax, uint64_t seed) {
  const Field f = nsrlab_test::random_band_limited(g, 2, kmax, seed);
  TensorField2 r = tensor2(g);
  for (int i1 = 0; i1 < g.n1; ++i1) {
    for (int i2 = 0; i2 < g.n2; ++i2) {
      r.at(tensor_comp(0, 0), i1, i2) = f.at(0, i1, i2);
      r.at(tensor_comp(0, 1), i1, i2) = f.at(1, i1, i2);
      r.at(tensor_comp(1, 0), i1, i2) = f.at(1, i1, i2);
      r.at(tensor_comp(1, 1), i1, i2) = -f.at(0, i1, i2);
    }
  }
  return r;
}

}  // namespace

TEST_CASE("identity matrix splits evenly across the four directions") {
  const GammaCoeffs gc = gamma_coeffs(1.0, 0.0, 1.0);
  for (int k = 0; k < 4; ++k) CHECK(gc.c[k] == 0.5);
}

TEST_CASE("diagonal and off-diagonal perturbations move the expected weights") {
  const GammaCoeffs diag = gamma_coeffs(1.0 + 1.0 / 16, 0.0, 1.0 - 1.0 / 16);
  CHECK(diag.c[0] == 9.0 / 16);
  CHECK(diag.c[1] == 7.0 / 16);
  CHECK(diag.c[2] == 0.5);
  CHECK(diag.c[3] == 0.5);

  const GammaCoeffs off = gamma_coeffs(1.0, 1.0 / 16, 1.0);
  CHECK(off.c[0] == 0.5);
  CHECK(off.c[1] == 0.5);
  CHECK(off.c[2] == 9.0 / 16);
  CHECK(off.c[3] == 7.0 / 16);
}

TEST_CASE("weights rebuild random admissible matrices to machine precision") {
  std::mt19937_64 rng(20260818);
  std::uniform_real_distribution<double> u(-0.125, 0.125);
  int accepted = 0;
  while (accepted < 10000) {
    const double d11 = u(rng), d12 = u(rng), d22 = u(rng);
    if (d11 * d11 + 2.0 * d12 * d12 + d22 * d22 >= 1.0 / 64) continue;
    ++accepted;
    const GammaCoeffs gc = gamma_coeffs(1.0 + d11, d12, 1.0 + d22);
    for (int k = 0; k < 4; ++k) {
      REQUIRE(gc.c[k] > 0.375 - 1e-12);
      REQUIRE(gc.c[k] < 0.625 + 1e-12);
    }
    const auto m = reconstruct(gc);
    REQUIRE(std::abs(m[0] - (1.0 + d11)) <= 1e-15);
    REQUIRE(std::abs(m[1] - d12) <= 1e-15);
    REQUIRE(std::abs(m[2] - (1.0 + d22)) <= 1e-15);
  }
}

TEST_CASE("matrices at or past the admissibility radius are rejected") {
  CHECK_THROWS_AS(gamma_coeffs(1.0 + 0.125, 0.0, 1.0), OutOfRange);
  CHECK_THROWS_AS(gamma_coeffs(1.0, 0.2, 1.0), OutOfRange);
  CHECK_THROWS_AS(gamma_coeffs(0.8, 0.0, 1.0), OutOfRange);
  CHECK_NOTHROW(gamma_coeffs(1.0 + 0.124, 0.0, 1.0));
}

TEST_CASE("regularizer floors at ten epsilon and dominates the input") {
  const GridSpec g{64, 64};
  const TensorField2 zero = tensor2(g);
  const ScalarField2 rho0 = amplitude_regularizer(zero, 0.25);
  for (size_t i = 0; i < rho0.size(); ++i) CHECK(rho0.data()[i] == 2.5);

  const TensorField2 r = random_traceless(g, 4, 7);
  const ScalarField2 rho = amplitude_regularizer(r, 0.25);
  for (int i1 = 0; i1 < g.n1; ++i1) {
    for (int i2 = 0; i2 < g.n2; ++i2) {
      const double r11 = r.at(tensor_comp(0, 0), i1, i2);
      const double r12 = r.at(tensor_comp(0, 1), i1, i2);
      const double r22 = r.at(tensor_comp(1, 1), i1, i2);
      const double fro = std::sqrt(r11 * r11 + 2 * r12 * r12 + r22 * r22);
      const double p = rho.at(0, i1, i2);
      REQUIRE(p >= 10.0 * fro);
      REQUIRE(fro / p <= 0.1);
      REQUIRE(p >= 2.5);
    }
  }

  CHECK_THROWS_AS(amplitude_regularizer(zero, 0.0), OutOfRange);
  CHECK_THROWS_AS(amplitude_regularizer(zero, -1.0), OutOfRange);
}

TEST_CASE("regularizer rejects skew or traceful tensor fields") {
  const GridSpec g{32, 32};
  TensorField2 skew = tensor2(g);
  skew.at(tensor_comp(0, 1), 3, 5) = 1.0;
  CHECK_THROWS_AS(amplitude_regularizer(skew, 0.5), OutOfRange);

  TensorField2 traceful = tensor2(g);
  traceful.at(tensor_comp(0, 0), 2, 2) = 1.0;
  traceful.at(tensor_comp(1, 1), 2, 2) = 0.5;
  CHECK_THROWS_AS(amplitude_regularizer(traceful, 0.5), OutOfRange);
}

TEST_CASE("squared amplitudes rebuild the stress plus its regularizer") {
  const GridSpec g{128, 128};
  const TensorField2 r = random_traceless(g, 4, 42);
  const double eps = 0.3;
  const double theta = 0.75;
  const ScalarField2 rho = amplitude_regularizer(r, eps);
  const AmplitudeSet set = amplitudes(r, eps, theta);
  const auto& dirs = block_directions();

  double worst = 0.0;
  for (int i1 = 0; i1 < g.n1; ++i1) {
    for (int i2 = 0; i2 < g.n2; ++i2) {
      std::array<double, 3> lhs{0.0, 0.0, 0.0};
      for (int k = 0; k < 4; ++k) {
        const double a2 = set.a[k].at(0, i1, i2) * set.a[k].at(0, i1, i2);
        const double n2 = dirs[k].norm2();
        lhs[0] += a2 * dirs[k].e1 * dirs[k].e1 / n2;
        lhs[1] += a2 * dirs[k].e1 * dirs[k].e2 / n2;
        lhs[2] += a2 * dirs[k].e2 * dirs[k].e2 / n2;
      }
      const double th2 = theta * theta;
      const double p = rho.at(0, i1, i2);
      const double want11 = th2 * (p + r.at(tensor_comp(0, 0), i1, i2));
      const double want12 = th2 * r.at(tensor_comp(0, 1), i1, i2);
      const double want22 = th2 * (p + r.at(tensor_comp(1, 1), i1, i2));
      worst = std::max(worst, std::abs(lhs[0] - want11));
      worst = std::max(worst, std::abs(lhs[1] - want12));
      worst = std::max(worst, std::abs(lhs[2] - want22));
    }
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("amplitudes vanish with the cutoff and flatten for zero stress") {
  const GridSpec g{64, 64};
  const TensorField2 r = random_traceless(g, 3, 11);
  const AmplitudeSet off = amplitudes(r, 0.2, 0.0);
  for (int k = 0; k < 4; ++k)
    for (size_t i = 0; i < off.a[k].size(); ++i)
      CHECK(off.a[k].data()[i] == 0.0);

  const TensorField2 zero = tensor2(g);
  const double eps = 0.4;
  const AmplitudeSet flat = amplitudes(zero, eps, 1.0);
  const double want = std::sqrt(5.0 * eps);
  for (int k = 0; k < 4; ++k)
    for (size_t i = 0; i < flat.a[k].size(); ++i)
      CHECK(flat.a[k].data()[i] == doctest::Approx(want).epsilon(1e-14));
}

TEST_CASE("amplitudes stay bounded in value and in slope") {
  const GridSpec g{128, 128};
  const int kmax = 4;
  const TensorField2 r = random_traceless(g, kmax, 99);
  const double eps = 0.3;
  const double theta = 0.9;
  const ScalarField2 rho = amplitude_regularizer(r, eps);
  const AmplitudeSet set = amplitudes(r, eps, theta);

  double rho_max = 0.0;
  for (size_t i = 0; i < rho.size(); ++i)
    rho_max = std::max(rho_max, rho.data()[i]);
  for (int k = 0; k < 4; ++k) {
    double amax = 0.0;
    for (size_t i = 0; i < set.a[k].size(); ++i)
      amax = std::max(amax, std::abs(set.a[k].data()[i]));
    CHECK(amax <= theta * std::sqrt(rho_max));
    CHECK(amax <= theta * std::sqrt(0.625 * rho_max) * (1 + 1e-12));
  }

  // Chain-rule bound: with the weights at least 3/8 and rho at least
  // 10 eps, each partial of a_k is below 2.14 theta |d R|_F / sqrt(eps);
  // 3 leaves room for the trigonometric interpolation of the square root.
  const Spectrum rs = fft(r);
  for (int ax = 0; ax < 2; ++ax) {
    const Field dr = ifft(derivative(rs, ax == 0 ? 1 : 0, ax == 0 ? 0 : 1));
    double gmax = 0.0;
    for (int i1 = 0; i1 < g.n1; ++i1) {
      for (int i2 = 0; i2 < g.n2; ++i2) {
        const double d11 = dr.at(tensor_comp(0, 0), i1, i2);
        const double d12 = dr.at(tensor_comp(0, 1), i1, i2);
        const double d22 = dr.at(tensor_comp(1, 1), i1, i2);
        gmax = std::max(gmax,
                        std::sqrt(d11 * d11 + 2 * d12 * d12 + d22 * d22));
      }
    }
    for (int k = 0; k < 4; ++k) {
      const Field da = ifft(derivative(fft(set.a[k]), ax == 0 ? 1 : 0,
                                       ax == 0 ? 0 : 1));
      double dmax = 0.0;
      for (size_t i = 0; i < da.size(); ++i)
        dmax = std::max(dmax, std::abs(da.data()[i]));
      CHECK(dmax <= 3.0 * theta * gmax / std::sqrt(eps));
    }
  }
}

TEST_CASE("cutoff window validates its parameters") {
  CHECK_THROWS_AS((CutoffSpec{0.25, 0.0}.validate()), BadWindow);
  CHECK_THROWS_AS((CutoffSpec{0.25, 0.3}.validate()), BadWindow);
  CHECK_THROWS_AS((CutoffSpec{0.25, 0.25}.validate()), BadWindow);
  CHECK_THROWS_AS((CutoffSpec{0.5, 0.1}.validate()), BadWindow);
  CHECK_THROWS_AS((CutoffSpec{0.6, 0.1}.validate()), BadWindow);
  CHECK_THROWS_AS((CutoffSpec{0.0, 0.1}.validate()), BadWindow);
  CHECK_NOTHROW((CutoffSpec{0.25, 0.1}.validate()));
  CHECK_NOTHROW((CutoffSpec{0.0, 0.0}.validate()));
}

TEST_CASE("cutoff window rises over one width and holds through the middle") {
  const CutoffSpec w{0.25, 0.1};
  CHECK(w.theta(0.0) == 0.0);
  CHECK(w.theta(0.15) == 0.0);
  CHECK(w.theta(0.25) == 1.0);
  CHECK(w.theta(0.5) == 1.0);
  CHECK(w.theta(0.75) == 1.0);
  CHECK(w.theta(0.85) == 0.0);
  CHECK(w.theta(1.0) == 0.0);
  CHECK(w.theta(0.2) > 0.0);
  CHECK(w.theta(0.2) < 1.0);
  for (double t : {0.1, 0.4}) CHECK(w.theta(t) == w.theta(1.0 - t));
  for (double t : {0.18, 0.22})
    CHECK(w.theta(t) ==
          doctest::Approx(w.theta(1.0 - t)).epsilon(1e-13));
  CHECK(w.theta_slope(0.2) > 0.0);
  CHECK(w.theta_slope(0.8) < 0.0);
  CHECK(w.theta_slope(0.5) == 0.0);

  const CutoffSpec open{};
  CHECK(open.theta(0.0) == 1.0);
  CHECK(open.theta(0.37) == 1.0);
  CHECK(open.theta_slope(0.9) == 0.0);
}
