// Copyright 2026 The nsrlab authors
// SPDX-License-Identifier: Apache-2.0
#ifndef NSRLAB_BLOCKS_HPP
#define NSRLAB_BLOCKS_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "nsrlab/field.hpp"
#include "nsrlab/grid.hpp"
#include "nsrlab/profiles.hpp"
#include "nsrlab/rational.hpp"

namespace nsrlab {

// Oscillation, concentration and phase parameters shared by the four block
// families.
struct BlockParams {
  long lambda = 4;
  Rational mu1 = 2;
  Rational mu2 = 4;
  double omega = 16.0;
  int kappa = 4;
  long nu = 2;
};

// One of the four lattice directions carrying the blocks.
struct Direction {
  int e1, e2;
  int norm2() const { return e1 * e1 + e2 * e2; }
  double norm() const;
  // Perpendicular direction (-e2, e1).
  int p1() const { return -e2; }
  int p2() const { return e1; }
};

// (1,0), (0,1), (1,1), (1,-1).
const std::array<Direction, 4>& block_directions();

// Center offset of the k-th family's oscillatory factor, (k+1)|xi_k|^2 / 16
// for k in 0..3. Distinct offsets keep the four supports disjoint once the
// concentration is strong enough.
Rational block_shift(int k);

// Quantities whose scaling laws are measured; Grad prefixes add one spatial
// gradient.
enum class BlockQuantity { W, Y, A, DivAT, DivDivA, DtA };

// The four families of traveling building blocks. W carries the momentum
// flux, Y its time antiderivative in the flux identity, and A a high-order
// potential whose repeated divergences reproduce W's oscillation with small
// amplitude. All fields ride on the phase x + omega t xi / |xi|^2, under
// which div(W (x) W) = dt Y holds identically.
class BlockFamily {
 public:
  BlockFamily(const BlockParams& params, const SpaceProfiles& profiles);

  const BlockParams& params() const { return p_; }
  int moment_order() const { return profiles_.spec.N; }

  // Grid samples at time t; k in 0..3. Throws UnderResolved when the finest
  // feature is carried by fewer than 8 cells (8 lambda mu2 > n1).
  VectorField2 W(const GridSpec& g, int k, double t) const;
  VectorField2 Y(const GridSpec& g, int k, double t) const;
  ScalarField2 q(const GridSpec& g, int k, double t) const;
  TensorField2 A(const GridSpec& g, int k, double t) const;
  // Exact time derivative of Y via the chain rule on the phase.
  VectorField2 dtY(const GridSpec& g, int k, double t) const;
  // Exact time derivatives of W and A, same chain rule.
  VectorField2 dtW(const GridSpec& g, int k, double t) const;
  TensorField2 dtA(const GridSpec& g, int k, double t) const;
  // Row and column divergences of the potential: div A differentiates the
  // static slot, div A^T the traveling one.
  VectorField2 divA(const GridSpec& g, int k, double t) const;
  VectorField2 divAT(const GridSpec& g, int k, double t) const;
  // Scalar factors of the corrector commutator: f1 rides the traveling
  // phase, f2 is the static potential derivative whose (2N+2)-th directional
  // derivative closes back onto W's static slot.
  ScalarField2 f1(const GridSpec& g, int k, double t) const;
  ScalarField2 f2(const GridSpec& g, int k) const;

  // Pointwise Frobenius magnitude of the l-th gradient (l <= 2) of a
  // quantity, sampled analytically.
  ScalarField2 magnitude(const GridSpec& g, int k, double t, BlockQuantity which,
                         int l = 0) const;

  // Exact membership of the (closed-complement) open support at rational
  // phase omega_t = omega * t.
  bool in_support(int k, const Rational& x1, const Rational& x2,
                  const Rational& omega_t) const;
  std::vector<uint8_t> support_mask(const GridSpec& g, int k,
                                    const Rational& omega_t) const;

 private:
  void check_resolution(const GridSpec& g) const;
  double pair_eval(int k, int pair, int da, int db, double y1, double y2) const;

  BlockParams p_;
  SpaceProfiles profiles_;
  std::vector<Concentrated1D> phi1_;
  std::vector<Concentrated1D> phi2_;
  std::vector<Concentrated1D> Phi2_;
  std::vector<Concentrated1D> dPhi2_;
  double amp_a_;
};

// Per-family diagnostics of the defining identities, all computed at one
// time slice.
struct BlockIdentityReport {
  std::array<double, 4> flux_residual;      // |div(W@W) - dtY|_2 / |dtY|_2
  std::array<double, 4> mean_w;             // |mean W|
  std::array<double, 4> second_moment_err;  // |mean W@W - unit dyad| (Frobenius)
  std::array<double, 4> q_mean_rel_err;     // |mean q - 1/omega| * omega
};

BlockIdentityReport verify_block_identities(const BlockFamily& fam,
                                            const GridSpec& g,
                                            const Rational& t);

// Exact count of grid nodes lying in two supports at once, for the pairs
// (01, 02, 03, 12, 13, 23). Zero across a time scan certifies disjointness
// for the parameter set; the scan is exact in rational arithmetic, so a
// positive count is a genuine intersection and not roundoff.
std::array<int, 6> support_overlaps(const BlockFamily& fam, const GridSpec& g,
                                    const Rational& t);

// Theoretical scaling slope of ||grad^l quantity||_{L^s} in the given
// parameter ("lambda", "mu1", "mu2" or "omega") for moment order N.
Rational theoretical_slope(BlockQuantity which, int l, const Rational& inv_s,
                           int N, const std::string& parameter);

// Measured L^s norm of the l-th gradient magnitude.
double block_norm(const BlockFamily& fam, const GridSpec& g, int k, double t,
                  BlockQuantity which, int l, double s);

// Sweep one parameter leaving the rest at their base values, fit the log-log
// slope of the norm, and report it next to the theoretical value. The grid
// for each sweep point uses the smallest power of two with at least
// oversample * lambda * mu2 cells per period, at least min_n1. The profile
// bumps are high-order derivatives oscillating several times inside their
// support, so L^1 norms (whose integrands kink at every zero crossing) need
// oversample around 32 to 64; squared quantities converge spectrally and are
// fine at the default.
struct ScalingFit {
  std::string quantity;
  std::string parameter;
  int l = 0;
  double s = 1.0;
  double theoretical = 0.0;
  double fitted = 0.0;
  double r2 = 0.0;
  std::vector<double> param_values;
  std::vector<double> norms;
};

ScalingFit measure_scaling(const BlockParams& base, const SpaceProfiles& profiles,
                           BlockQuantity which, int l, double s,
                           const std::string& parameter,
                           const std::vector<Rational>& values, int k = 0,
                           int min_n1 = 128, int oversample = 8);

}  // namespace nsrlab

#endif
