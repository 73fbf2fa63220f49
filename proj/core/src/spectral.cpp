// Copyright 2026 The nsrlab authors
// SPDX-License-Identifier: Apache-2.0
#include "nsrlab/spectral.hpp"

#include <cmath>

#include "nsrlab/errors.hpp"

namespace nsrlab {

namespace {

constexpr double kTwoPi = 6.28318530717958647692;

// (2 pi i k)^order, zeroed at the Nyquist frequency for odd orders.
std::complex<double> deriv_factor(int k, int n, int order) {
  if (order == 0) return {1.0, 0.0};
  if ((k == n / 2 || k == -n / 2) && (order % 2 != 0)) return {0.0, 0.0};
  return std::pow(std::complex<double>(0.0, kTwoPi * k), order);
}

double ksq(int k1, int k2) {
  return kTwoPi * kTwoPi * (static_cast<double>(k1) * k1 +
                            static_cast<double>(k2) * k2);
}

}  // namespace

Spectrum derivative(const Spectrum& s, int ax1, int ax2) {
  const GridSpec& g = s.grid();
  Spectrum out(g, s.comps());
  const int n2h = s.n2h();
  for (int c = 0; c < s.comps(); ++c) {
    for (int k1i = 0; k1i < g.n1; ++k1i) {
      const int k1 = s.k1(k1i);
      const std::complex<double> f1 = deriv_factor(k1, g.n1, ax1);
      for (int k2 = 0; k2 < n2h; ++k2) {
        out.at(c, k1i, k2) =
            s.at(c, k1i, k2) * f1 * deriv_factor(k2, g.n2, ax2);
      }
    }
  }
  return out;
}

Field derivative(const Field& f, int ax1, int ax2) {
  return ifft(derivative(fft(f), ax1, ax2));
}

Spectrum laplacian_power(const Spectrum& s, int N) {
  if (N < 0) throw BadExponent("laplacian_power needs N >= 0");
  const GridSpec& g = s.grid();
  Spectrum out(g, s.comps());
  const int n2h = s.n2h();
  for (int c = 0; c < s.comps(); ++c)
    for (int k1i = 0; k1i < g.n1; ++k1i) {
      const int k1 = s.k1(k1i);
      for (int k2 = 0; k2 < n2h; ++k2)
        out.at(c, k1i, k2) =
            s.at(c, k1i, k2) * std::pow(-ksq(k1, k2), N);
    }
  return out;
}

Field laplacian(const Field& f) { return ifft(laplacian_power(fft(f), 1)); }

double l2_norm_spectral(const Spectrum& s) {
  // Parseval with the half-plane layout: columns 0 < k2 < n2/2 count twice.
  const GridSpec& g = s.grid();
  const int n2h = s.n2h();
  double sum = 0.0;
  for (int c = 0; c < s.comps(); ++c)
    for (int k1i = 0; k1i < g.n1; ++k1i)
      for (int k2 = 0; k2 < n2h; ++k2) {
        const double w = (k2 == 0 || k2 == g.n2 / 2) ? 1.0 : 2.0;
        sum += w * std::norm(s.at(c, k1i, k2));
      }
  return std::sqrt(sum);
}

Spectrum inverse_laplacian(const Spectrum& s) {
  const GridSpec& g = s.grid();
  const double l2 = l2_norm_spectral(s);
  for (int c = 0; c < s.comps(); ++c) {
    if (std::abs(s.at(c, 0, 0)) > 1e-10 * l2 && l2 > 0.0)
      throw NonZeroMean("inverse_laplacian needs mean-zero input");
  }
  Spectrum out(g, s.comps());
  const int n2h = s.n2h();
  for (int c = 0; c < s.comps(); ++c)
    for (int k1i = 0; k1i < g.n1; ++k1i) {
      const int k1 = s.k1(k1i);
      for (int k2 = 0; k2 < n2h; ++k2) {
        if (k1 == 0 && k2 == 0) {
          out.at(c, k1i, k2) = 0.0;
        } else {
          out.at(c, k1i, k2) = s.at(c, k1i, k2) / (-ksq(k1, k2));
        }
      }
    }
  return out;
}

Field inverse_laplacian(const Field& f) {
  return ifft(inverse_laplacian(fft(f)));
}

Spectrum leray_project(const Spectrum& u) {
  const GridSpec& g = u.grid();
  Spectrum out(g, 2);
  const int n2h = u.n2h();
  for (int k1i = 0; k1i < g.n1; ++k1i) {
    const int k1 = u.k1(k1i);
    for (int k2 = 0; k2 < n2h; ++k2) {
      const std::complex<double> u1 = u.at(0, k1i, k2);
      const std::complex<double> u2 = u.at(1, k1i, k2);
      if (k1 == 0 && k2 == 0) {
        out.at(0, k1i, k2) = u1;
        out.at(1, k1i, k2) = u2;
        continue;
      }
      const double kk = static_cast<double>(k1) * k1 +
                        static_cast<double>(k2) * k2;
      const std::complex<double> kdotu =
          (static_cast<double>(k1) * u1 + static_cast<double>(k2) * u2) / kk;
      out.at(0, k1i, k2) = u1 - static_cast<double>(k1) * kdotu;
      out.at(1, k1i, k2) = u2 - static_cast<double>(k2) * kdotu;
    }
  }
  return out;
}

VectorField2 leray_project(const VectorField2& u) {
  return ifft(leray_project(fft(u)));
}

Spectrum sym_antidivergence(const Spectrum& u) {
  const GridSpec& g = u.grid();
  const double l2 = l2_norm_spectral(u);
  for (int c = 0; c < 2; ++c)
    if (std::abs(u.at(c, 0, 0)) > 1e-10 * l2 && l2 > 0.0)
      throw NonZeroMean("sym_antidivergence needs mean-zero input");
  Spectrum out(g, 4);
  const int n2h = u.n2h();
  for (int k1i = 0; k1i < g.n1; ++k1i) {
    const int k1 = u.k1(k1i);
    for (int k2 = 0; k2 < n2h; ++k2) {
      if (k1 == 0 && k2 == 0) continue;
      // z = Lap^{-1} u, then T_{ij} = d_j z_i + d_i z_j - delta_{ij} div z.
      const std::complex<double> z1 = u.at(0, k1i, k2) / (-ksq(k1, k2));
      const std::complex<double> z2 = u.at(1, k1i, k2) / (-ksq(k1, k2));
      const std::complex<double> d1(0.0, kTwoPi * k1);
      const std::complex<double> d2(0.0, kTwoPi * k2);
      const std::complex<double> divz = d1 * z1 + d2 * z2;
      out.at(tensor_comp(0, 0), k1i, k2) = 2.0 * d1 * z1 - divz;
      out.at(tensor_comp(0, 1), k1i, k2) = d2 * z1 + d1 * z2;
      out.at(tensor_comp(1, 0), k1i, k2) = d2 * z1 + d1 * z2;
      out.at(tensor_comp(1, 1), k1i, k2) = 2.0 * d2 * z2 - divz;
    }
  }
  return out;
}

TensorField2 sym_antidivergence(const VectorField2& u) {
  return ifft(sym_antidivergence(fft(u)));
}

TensorField2 bilinear_antidivergence(const ScalarField2& f,
                                     const VectorField2& u) {
  const GridSpec& g = f.grid();
  VectorField2 prod = vector2(g);
  for (int c = 0; c < 2; ++c)
    for (int i = 0; i < g.n1; ++i)
      for (int j = 0; j < g.n2; ++j)
        prod.at(c, i, j) = f.at(0, i, j) * u.at(c, i, j);
  for (int c = 0; c < 2; ++c) {
    const double m = mean_of(prod, c);
    for (int i = 0; i < g.n1; ++i)
      for (int j = 0; j < g.n2; ++j) prod.at(c, i, j) -= m;
  }
  return sym_antidivergence(prod);
}

TensorField2 bilinear_antidivergence_tensor(const VectorField2& v,
                                            const TensorField2& T) {
  const GridSpec& g = v.grid();
  VectorField2 prod = tensor_vector(T, v);
  for (int c = 0; c < 2; ++c) {
    const double m = mean_of(prod, c);
    for (int i = 0; i < g.n1; ++i)
      for (int j = 0; j < g.n2; ++j) prod.at(c, i, j) -= m;
  }
  return sym_antidivergence(prod);
}

ScalarField2 divergence(const VectorField2& u) {
  Spectrum s = fft(u);
  Spectrum d1 = derivative(s, 1, 0);
  Spectrum d2 = derivative(s, 0, 1);
  Spectrum out(u.grid(), 1);
  const int n2h = s.n2h();
  for (int k1i = 0; k1i < u.grid().n1; ++k1i)
    for (int k2 = 0; k2 < n2h; ++k2)
      out.at(0, k1i, k2) = d1.at(0, k1i, k2) + d2.at(1, k1i, k2);
  return ifft(out);
}

Spectrum divergence_tensor(const Spectrum& T) {
  Spectrum d1 = derivative(T, 1, 0);
  Spectrum d2 = derivative(T, 0, 1);
  Spectrum out(T.grid(), 2);
  const int n2h = T.n2h();
  for (int k1i = 0; k1i < T.grid().n1; ++k1i)
    for (int k2 = 0; k2 < n2h; ++k2) {
      out.at(0, k1i, k2) = d1.at(tensor_comp(0, 0), k1i, k2) +
                           d2.at(tensor_comp(0, 1), k1i, k2);
      out.at(1, k1i, k2) = d1.at(tensor_comp(1, 0), k1i, k2) +
                           d2.at(tensor_comp(1, 1), k1i, k2);
    }
  return out;
}

VectorField2 divergence_tensor(const TensorField2& T) {
  return ifft(divergence_tensor(fft(T)));
}

VectorField2 gradient(const ScalarField2& f) {
  Spectrum s = fft(f);
  Spectrum d1 = derivative(s, 1, 0);
  Spectrum d2 = derivative(s, 0, 1);
  Spectrum out(f.grid(), 2);
  const int n2h = s.n2h();
  for (int k1i = 0; k1i < f.grid().n1; ++k1i)
    for (int k2 = 0; k2 < n2h; ++k2) {
      out.at(0, k1i, k2) = d1.at(0, k1i, k2);
      out.at(1, k1i, k2) = d2.at(0, k1i, k2);
    }
  return ifft(out);
}

TensorField2 gradient_vec(const VectorField2& u) {
  Spectrum s = fft(u);
  Spectrum d1 = derivative(s, 1, 0);
  Spectrum d2 = derivative(s, 0, 1);
  Spectrum out(u.grid(), 4);
  const int n2h = s.n2h();
  for (int k1i = 0; k1i < u.grid().n1; ++k1i)
    for (int k2 = 0; k2 < n2h; ++k2) {
      out.at(tensor_comp(0, 0), k1i, k2) = d1.at(0, k1i, k2);
      out.at(tensor_comp(0, 1), k1i, k2) = d2.at(0, k1i, k2);
      out.at(tensor_comp(1, 0), k1i, k2) = d1.at(1, k1i, k2);
      out.at(tensor_comp(1, 1), k1i, k2) = d2.at(1, k1i, k2);
    }
  return ifft(out);
}

ScalarField2 curl2(const VectorField2& u) {
  Spectrum s = fft(u);
  Spectrum d1 = derivative(s, 1, 0);
  Spectrum d2 = derivative(s, 0, 1);
  Spectrum out(u.grid(), 1);
  const int n2h = s.n2h();
  for (int k1i = 0; k1i < u.grid().n1; ++k1i)
    for (int k2 = 0; k2 < n2h; ++k2)
      out.at(0, k1i, k2) = d1.at(1, k1i, k2) - d2.at(0, k1i, k2);
  return ifft(out);
}

VectorField2 perp_gradient(const ScalarField2& f) {
  Spectrum s = fft(f);
  Spectrum d1 = derivative(s, 1, 0);
  Spectrum d2 = derivative(s, 0, 1);
  Spectrum out(f.grid(), 2);
  const int n2h = s.n2h();
  for (int k1i = 0; k1i < f.grid().n1; ++k1i)
    for (int k2 = 0; k2 < n2h; ++k2) {
      out.at(0, k1i, k2) = -d2.at(0, k1i, k2);
      out.at(1, k1i, k2) = d1.at(0, k1i, k2);
    }
  return ifft(out);
}

TensorField2 outer(const VectorField2& u, const VectorField2& v) {
  const GridSpec& g = u.grid();
  TensorField2 T = tensor2(g);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      double* dst = T.comp(tensor_comp(a, b));
      const double* ua = u.comp(a);
      const double* vb = v.comp(b);
      for (long i = 0; i < g.nodes(); ++i) dst[i] = ua[i] * vb[i];
    }
  return T;
}

VectorField2 tensor_vector(const TensorField2& T, const VectorField2& v) {
  const GridSpec& g = T.grid();
  VectorField2 out = vector2(g);
  for (int a = 0; a < 2; ++a) {
    double* dst = out.comp(a);
    const double* t0 = T.comp(tensor_comp(a, 0));
    const double* t1 = T.comp(tensor_comp(a, 1));
    const double* v0 = v.comp(0);
    const double* v1 = v.comp(1);
    for (long i = 0; i < g.nodes(); ++i) dst[i] = t0[i] * v0[i] + t1[i] * v1[i];
  }
  return out;
}

ScalarField2 trace(const TensorField2& T) {
  const GridSpec& g = T.grid();
  ScalarField2 out = scalar(g);
  const double* t00 = T.comp(tensor_comp(0, 0));
  const double* t11 = T.comp(tensor_comp(1, 1));
  double* dst = out.comp(0);
  for (long i = 0; i < g.nodes(); ++i) dst[i] = t00[i] + t11[i];
  return out;
}

TensorField2 transpose(const TensorField2& T) {
  const GridSpec& g = T.grid();
  TensorField2 out = tensor2(g);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      const double* src = T.comp(tensor_comp(a, b));
      double* dst = out.comp(tensor_comp(b, a));
      for (long i = 0; i < g.nodes(); ++i) dst[i] = src[i];
    }
  return out;
}

TensorField2 symmetrize(const TensorField2& T) {
  const GridSpec& g = T.grid();
  TensorField2 out = T;
  double* t01 = out.comp(tensor_comp(0, 1));
  double* t10 = out.comp(tensor_comp(1, 0));
  for (long i = 0; i < g.nodes(); ++i) {
    const double s = 0.5 * (t01[i] + t10[i]);
    t01[i] = s;
    t10[i] = s;
  }
  return out;
}

TensorField2 deviatoric(const TensorField2& T) {
  const GridSpec& g = T.grid();
  TensorField2 out = T;
  double* t00 = out.comp(tensor_comp(0, 0));
  double* t11 = out.comp(tensor_comp(1, 1));
  for (long i = 0; i < g.nodes(); ++i) {
    const double half_tr = 0.5 * (t00[i] + t11[i]);
    t00[i] -= half_tr;
    t11[i] -= half_tr;
  }
  return out;
}

ScalarField2 multiply(const ScalarField2& a, const ScalarField2& b) {
  const GridSpec& g = a.grid();
  ScalarField2 out = scalar(g);
  const double* pa = a.comp(0);
  const double* pb = b.comp(0);
  double* dst = out.comp(0);
  for (long i = 0; i < g.nodes(); ++i) dst[i] = pa[i] * pb[i];
  return out;
}

Field scale_by_scalar(const ScalarField2& a, const Field& f) {
  const GridSpec& g = f.grid();
  Field out = f;
  const double* pa = a.comp(0);
  for (int c = 0; c < f.comps(); ++c) {
    double* dst = out.comp(c);
    for (long i = 0; i < g.nodes(); ++i) dst[i] *= pa[i];
  }
  return out;
}

double mean_of(const Field& f, int c) {
  const GridSpec& g = f.grid();
  const double* p = f.comp(c);
  double sum = 0.0;
  for (long i = 0; i < g.nodes(); ++i) sum += p[i];
  return sum / static_cast<double>(g.nodes());
}

double spectral_divergence_max(const VectorField2& u) {
  Spectrum s = fft(u);
  const GridSpec& g = u.grid();
  const int n2h = s.n2h();
  double worst = 0.0;
  for (int k1i = 0; k1i < g.n1; ++k1i) {
    const int k1 = s.k1(k1i);
    for (int k2 = 0; k2 < n2h; ++k2) {
      const std::complex<double> d =
          static_cast<double>(k1) * s.at(0, k1i, k2) +
          static_cast<double>(k2) * s.at(1, k1i, k2);
      worst = std::max(worst, std::abs(d));
    }
  }
  return worst;
}

}  // namespace nsrlab
