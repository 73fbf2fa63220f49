// Copyright 2026 The nsrlab authors
// SPDX-License-Identifier: Apache-2.0
#ifndef NSRLAB_GRID_HPP
#define NSRLAB_GRID_HPP

#include "nsrlab/errors.hpp"

namespace nsrlab {

// Uniform grid on the unit torus [-1/2,1/2]^2 and the time interval [0,1].
// Nodes: x1(i) = -1/2 + i/n1, x2(j) = -1/2 + j/n2, t(j) = j/(n_t - 1).
struct GridSpec {
  int n1 = 0;
  int n2 = 0;
  int nt = 1;

  GridSpec() = default;
  GridSpec(int n1_, int n2_, int nt_ = 1) : n1(n1_), n2(n2_), nt(nt_) {
    if (n1 < 16 || n1 != n2) throw ConfigError("grid must be square, n1 >= 16");
    if ((n1 & (n1 - 1)) != 0) throw ConfigError("n1 must be a power of two");
    // nt = 1 marks a purely spatial grid; time-resolved grids need at least
    // nine slices so the five-point one-sided difference stencils fit.
    if (nt != 1 && nt < 9) throw ConfigError("nt must be 1 or at least 9");
  }

  double h() const { return 1.0 / n1; }
  double dt() const { return nt > 1 ? 1.0 / (nt - 1) : 0.0; }
  double x1(int i) const { return -0.5 + i * (1.0 / n1); }
  double x2(int j) const { return -0.5 + j * (1.0 / n2); }
  double t(int j) const { return j * dt(); }
  long nodes() const { return static_cast<long>(n1) * n2; }

  bool operator==(const GridSpec&) const = default;
};

}  // namespace nsrlab

#endif
