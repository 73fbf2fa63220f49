// Copyright 2026 The nsrlab authors
// SPDX-License-Identifier: Apache-2.0
#include "nsrlab/state.hpp"

#include <cmath>

#include "nsrlab/errors.hpp"
#include "nsrlab/norms.hpp"
#include "nsrlab/spectral.hpp"

namespace nsrlab {

Field fd_time_derivative(const std::array<const Field*, 5>& w, int position,
                         double dt) {
  static const double stencils[5][5] = {
      {-25, 48, -36, 16, -3},
      {-3, -10, 18, -6, 1},
      {1, -8, 0, 8, -1},
      {-1, 6, -18, 10, 3},
      {3, -16, 36, -48, 25},
  };
  const double* coef = stencils[position];
  Field out(w[0]->grid(), w[0]->comps());
  const double inv = 1.0 / (12.0 * dt);
  for (int m = 0; m < 5; ++m) {
    if (coef[m] == 0.0) continue;
    out.axpy(coef[m] * inv, *w[m]);
  }
  return out;
}

SpaceTimeField time_derivative(const SpaceTimeField& f) {
  const int nt = f.grid.nt;
  if (nt < 9) throw BadWindow("time_derivative needs nt >= 9");
  SpaceTimeField out;
  out.grid = f.grid;
  out.slices.reserve(nt);
  for (int j = 0; j < nt; ++j) {
    const int start = fd_window_start(j, nt);
    std::array<const Field*, 5> w = {
        &f.slices[start], &f.slices[start + 1], &f.slices[start + 2],
        &f.slices[start + 3], &f.slices[start + 4]};
    out.slices.push_back(fd_time_derivative(w, fd_position(j, nt), f.dt()));
  }
  return out;
}

void check_state(const NSRState& state) {
  const int nt = state.u.grid.nt;
  for (int j = 0; j < nt; ++j) {
    const Field& u = state.u.slices[j];
    const double unorm = lebesgue_norm(u, 2.0);
    if (spectral_divergence_max(u) > 1e-10 * std::max(unorm, 1e-300))
      throw NotDivergenceFree("velocity slice " + std::to_string(j));
    for (int c = 0; c < 2; ++c)
      if (std::abs(mean_of(u, c)) > 1e-10 * std::max(unorm, 1e-300))
        throw OutOfRange("velocity mean nonzero at slice " +
                         std::to_string(j));
    const Field& R = state.R.slices[j];
    const double* r01 = R.comp(tensor_comp(0, 1));
    const double* r10 = R.comp(tensor_comp(1, 0));
    for (long i = 0; i < R.grid().nodes(); ++i)
      if (std::abs(r01[i] - r10[i]) > 1e-12)
        throw SupportViolation("error tensor asymmetric at slice " +
                               std::to_string(j));
  }
}

SpaceTimeField nsr_residual(const NSRState& state) {
  const SpaceTimeField dtu = time_derivative(state.u);
  SpaceTimeField out;
  out.grid = state.u.grid;
  out.slices.reserve(out.grid.nt);
  for (int j = 0; j < out.grid.nt; ++j) {
    const Field& u = state.u.slices[j];
    Field resid = dtu.slices[j];
    resid += divergence_tensor(outer(u, u));
    resid -= laplacian(u);
    resid += gradient(state.pi.slices[j]);
    resid += divergence_tensor(state.R.slices[j]);
    out.slices.push_back(std::move(resid));
  }
  return out;
}

}  // namespace nsrlab
