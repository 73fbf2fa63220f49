// Copyright 2026 The nsrlab authors
// SPDX-License-Identifier: Apache-2.0
#ifndef NSRLAB_POLY_HPP
#define NSRLAB_POLY_HPP

#include <vector>

#include "nsrlab/rational.hpp"

namespace nsrlab {

// Univariate polynomial with exact rational coefficients, coeffs[j] * x^j.
// The profile generators need exact derivatives, antiderivatives, products and
// definite integrals; evaluation in double is Horner on pre-converted
// coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(const Rational& a) { return Poly({a}); }
  // (a + b x)^n via repeated multiplication; exact.
  static Poly binomial_power(const Rational& a, const Rational& b, int n) {
    Poly base({a, b});
    Poly out = constant(1);
    for (int i = 0; i < n; ++i) out = out * base;
    return out;
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rational> d(c_.size() - 1);
    for (size_t j = 1; j < c_.size(); ++j) d[j - 1] = c_[j] * int(j);
    return Poly(std::move(d));
  }

  Poly derivative(int order) const {
    Poly p = *this;
    for (int i = 0; i < order; ++i) p = p.derivative();
    return p;
  }

  // Antiderivative with zero constant term.
  Poly antiderivative() const {
    std::vector<Rational> a(c_.size() + 1);
    a[0] = 0;
    for (size_t j = 0; j < c_.size(); ++j) a[j + 1] = c_[j] / int(j + 1);
    return Poly(std::move(a));
  }

  Rational integral(const Rational& lo, const Rational& hi) const {
    const Poly a = antiderivative();
    return a(hi) - a(lo);
  }

  Poly operator+(const Poly& o) const {
    std::vector<Rational> s(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t j = 0; j < c_.size(); ++j) s[j] += c_[j];
    for (size_t j = 0; j < o.c_.size(); ++j) s[j] += o.c_[j];
    return Poly(std::move(s));
  }

  Poly operator-(const Poly& o) const { return *this + o * Rational(-1); }

  Poly operator*(const Poly& o) const {
    if (zero() || o.zero()) return Poly();
    std::vector<Rational> p(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
      for (size_t j = 0; j < o.c_.size(); ++j) p[i + j] += c_[i] * o.c_[j];
    return Poly(std::move(p));
  }

  Poly operator*(const Rational& s) const {
    std::vector<Rational> p = c_;
    for (auto& q : p) q *= s;
    return Poly(std::move(p));
  }

  // x -> a + b x substitution, exact.
  Poly compose_affine(const Rational& a, const Rational& b) const {
    Poly out;
    for (int j = degree(); j >= 0; --j) {
      out = out * Poly({a, b}) + constant(c_[j]);
    }
    return out;
  }

  // Fast double evaluation; cache of double coefficients is rebuilt lazily.
  double eval(double x) const {
    if (dc_.size() != c_.size()) {
      dc_.resize(c_.size());
      for (size_t j = 0; j < c_.size(); ++j) dc_[j] = to_double(c_[j]);
    }
    double acc = 0.0;
    for (auto it = dc_.rbegin(); it != dc_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
  mutable std::vector<double> dc_;
};

}  // namespace nsrlab

#endif
