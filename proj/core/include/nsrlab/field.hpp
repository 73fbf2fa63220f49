// Copyright 2026 The nsrlab authors
// SPDX-License-Identifier: Apache-2.0
#ifndef NSRLAB_FIELD_HPP
#define NSRLAB_FIELD_HPP

#include <complex>
#include <vector>

#include "nsrlab/grid.hpp"

namespace nsrlab {

// Real samples on one time slice, any number of components. Layout is
// component-outermost, row-major with x2 fastest: v[(c*n1 + i1)*n2 + i2],
// matching the on-disk field format byte for byte.
class Field {
 public:
  Field() = default;
  Field(const GridSpec& g, int comps)
      : g_(g), comps_(comps),
        v_(static_cast<size_t>(comps) * g.n1 * g.n2, 0.0) {}

  const GridSpec& grid() const { return g_; }
  int comps() const { return comps_; }
  size_t size() const { return v_.size(); }

  double& at(int c, int i1, int i2) {
    return v_[(static_cast<size_t>(c) * g_.n1 + i1) * g_.n2 + i2];
  }
  double at(int c, int i1, int i2) const {
    return v_[(static_cast<size_t>(c) * g_.n1 + i1) * g_.n2 + i2];
  }
  double* comp(int c) { return v_.data() + static_cast<size_t>(c) * g_.n1 * g_.n2; }
  const double* comp(int c) const {
    return v_.data() + static_cast<size_t>(c) * g_.n1 * g_.n2;
  }
  double* data() { return v_.data(); }
  const double* data() const { return v_.data(); }

  Field& operator+=(const Field& o) {
    for (size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
    return *this;
  }
  Field& operator-=(const Field& o) {
    for (size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
    return *this;
  }
  Field& operator*=(double s) {
    for (auto& x : v_) x *= s;
    return *this;
  }
  // this += s * o
  Field& axpy(double s, const Field& o) {
    for (size_t i = 0; i < v_.size(); ++i) v_[i] += s * o.v_[i];
    return *this;
  }

 private:
  GridSpec g_;
  int comps_ = 0;
  std::vector<double> v_;
};

using ScalarField2 = Field;  // 1 component
using VectorField2 = Field;  // 2 components
using TensorField2 = Field;  // 4 components, row-major (T11, T12, T21, T22)

inline int tensor_comp(int a, int b) { return 2 * a + b; }

inline ScalarField2 scalar(const GridSpec& g) { return Field(g, 1); }
inline VectorField2 vector2(const GridSpec& g) { return Field(g, 2); }
inline TensorField2 tensor2(const GridSpec& g) { return Field(g, 4); }

// Fourier coefficients of a real field: per component, the half-plane r2c
// layout n1 x (n2/2 + 1), normalized so coefficients are actual Fourier
// coefficients of the sample sequence (forward transform divided by n1*n2).
class Spectrum {
 public:
  Spectrum() = default;
  Spectrum(const GridSpec& g, int comps)
      : g_(g), comps_(comps),
        c_(static_cast<size_t>(comps) * g.n1 * (g.n2 / 2 + 1), {0.0, 0.0}) {}

  const GridSpec& grid() const { return g_; }
  int comps() const { return comps_; }
  int n2h() const { return g_.n2 / 2 + 1; }
  size_t size() const { return c_.size(); }

  std::complex<double>& at(int c, int k1i, int k2i) {
    return c_[(static_cast<size_t>(c) * g_.n1 + k1i) * n2h() + k2i];
  }
  std::complex<double> at(int c, int k1i, int k2i) const {
    return c_[(static_cast<size_t>(c) * g_.n1 + k1i) * n2h() + k2i];
  }
  std::complex<double>* comp(int c) {
    return c_.data() + static_cast<size_t>(c) * g_.n1 * n2h();
  }
  const std::complex<double>* comp(int c) const {
    return c_.data() + static_cast<size_t>(c) * g_.n1 * n2h();
  }

  // Signed frequency along axis 1 for row index k1i.
  int k1(int k1i) const { return k1i <= g_.n1 / 2 ? k1i : k1i - g_.n1; }

 private:
  GridSpec g_;
  int comps_ = 0;
  std::vector<std::complex<double>> c_;
};

}  // namespace nsrlab

#endif
