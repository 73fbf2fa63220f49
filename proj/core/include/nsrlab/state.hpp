// Copyright 2026 The nsrlab authors
// SPDX-License-Identifier: Apache-2.0
#ifndef NSRLAB_STATE_HPP
#define NSRLAB_STATE_HPP

#include <array>
#include <vector>

#include "nsrlab/field.hpp"

namespace nsrlab {

// A field sampled on the uniform time grid t_j = j/(nt-1).
struct SpaceTimeField {
  GridSpec grid;  // carries nt
  std::vector<Field> slices;

  SpaceTimeField() = default;
  SpaceTimeField(const GridSpec& g, int comps) : grid(g) {
    slices.reserve(g.nt);
    for (int j = 0; j < g.nt; ++j) slices.emplace_back(g, comps);
  }
  double dt() const { return grid.dt(); }
};

// Fourth-order finite differences in time. Stencil positions:
//   0, 1: one-sided stencils anchored at the left end
//   2:    centered five-point stencil
//   3, 4: one-sided stencils anchored at the right end
// window holds the five participating slices in time order.
Field fd_time_derivative(const std::array<const Field*, 5>& window,
                         int position, double dt);

// Which stencil position slice j of an nt-grid uses, and the index of the
// first slice of its five-point window.
inline int fd_position(int j, int nt) {
  if (j == 0) return 0;
  if (j == 1) return 1;
  if (j == nt - 2) return 3;
  if (j == nt - 1) return 4;
  return 2;
}
inline int fd_window_start(int j, int nt) {
  if (j <= 1) return 0;
  if (j >= nt - 2) return nt - 5;
  return j - 2;
}

SpaceTimeField time_derivative(const SpaceTimeField& f);

// One iterate of the forced system: velocity, pressure, error tensor.
struct NSRState {
  SpaceTimeField u;   // 2 components, divergence-free, mean-zero
  SpaceTimeField pi;  // 1 component
  SpaceTimeField R;   // 4 components, symmetric
};

// Throws NotDivergenceFree / OutOfRange / SupportViolation when the state
// invariants fail (spectral divergence, slice means, tensor symmetry).
void check_state(const NSRState& state);

// d_t u + div(u x u) - Lap u + grad pi + div R per slice.
SpaceTimeField nsr_residual(const NSRState& state);

}  // namespace nsrlab

#endif
