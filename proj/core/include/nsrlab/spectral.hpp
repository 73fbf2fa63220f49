// Copyright 2026 The nsrlab authors
// SPDX-License-Identifier: Apache-2.0
#ifndef NSRLAB_SPECTRAL_HPP
#define NSRLAB_SPECTRAL_HPP

#include "nsrlab/fft.hpp"

namespace nsrlab {

// Conventions, fixed across the whole library:
//   (grad u)_{ij} = d_j u_i          (div grad u = Laplacian u)
//   (div T)_i     = d_j T_{ij}
//   curl v        = d_1 v_2 - d_2 v_1
//   perp_gradient f = (-d_2 f, d_1 f)   (so perp_gradient(curl v) = Lap v -
//                                        grad(div v) on 2D fields)
// All operators are exact Fourier multipliers; odd-order derivatives zero the
// Nyquist modes so real fields stay real.

Spectrum derivative(const Spectrum& s, int ax1, int ax2);
Field derivative(const Field& f, int ax1, int ax2);

// Multiplies by (-4 pi^2 |k|^2)^N, N >= 0; N = 0 is the identity.
Spectrum laplacian_power(const Spectrum& s, int N);
Field laplacian(const Field& f);

// Zero-mean inverse: BadExponent-free but guards |mean| <= 1e-10 * ||f||_L2
// per component.
Spectrum inverse_laplacian(const Spectrum& s);
Field inverse_laplacian(const Field& f);

Spectrum leray_project(const Spectrum& u);
VectorField2 leray_project(const VectorField2& u);

// div^{-1} u = grad Lap^{-1} u + (grad Lap^{-1} u)^T - (div Lap^{-1} u) Id.
// Symmetric, and div(div^{-1} u) = u exactly for mean-zero u.
Spectrum sym_antidivergence(const Spectrum& u);
TensorField2 sym_antidivergence(const VectorField2& u);

// div^{-1}(f u - mean(f u)) and div^{-1}(T v - mean(T v)).
TensorField2 bilinear_antidivergence(const ScalarField2& f,
                                     const VectorField2& u);
TensorField2 bilinear_antidivergence_tensor(const VectorField2& v,
                                            const TensorField2& T);

ScalarField2 divergence(const VectorField2& u);
VectorField2 divergence_tensor(const TensorField2& T);
Spectrum divergence_tensor(const Spectrum& T);
VectorField2 gradient(const ScalarField2& f);
TensorField2 gradient_vec(const VectorField2& u);
ScalarField2 curl2(const VectorField2& u);
VectorField2 perp_gradient(const ScalarField2& f);

// Pointwise (non-spectral) algebra.
TensorField2 outer(const VectorField2& u, const VectorField2& v);
VectorField2 tensor_vector(const TensorField2& T, const VectorField2& v);
ScalarField2 trace(const TensorField2& T);
TensorField2 transpose(const TensorField2& T);
TensorField2 symmetrize(const TensorField2& T);
// T minus half its trace times the identity.
TensorField2 deviatoric(const TensorField2& T);
ScalarField2 multiply(const ScalarField2& a, const ScalarField2& b);
Field scale_by_scalar(const ScalarField2& a, const Field& f);

double mean_of(const Field& f, int c);

// Largest |k . u_hat(k)| over modes, for the divergence-free invariant.
double spectral_divergence_max(const VectorField2& u);
double l2_norm_spectral(const Spectrum& s);

}  // namespace nsrlab

#endif
