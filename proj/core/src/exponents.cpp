// Copyright 2026 The nsrlab authors
// SPDX-License-Identifier: Apache-2.0
#include "nsrlab/exponents.hpp"

#include <algorithm>

#include "nsrlab/errors.hpp"

namespace nsrlab::exponents {

std::string AffineExpr::str() const {
  if (c1 == 0) return rational_to_string(c0);
  std::string out;
  if (c1 == 1) {
    out = "alpha";
  } else if (c1 == -1) {
    out = "-alpha";
  } else {
    out = rational_to_string(c1) + "*alpha";
  }
  if (c0 > 0) out += "+" + rational_to_string(c0);
  if (c0 < 0) out += rational_to_string(c0);
  return out;
}

AffineExpr substitute(const Monomial& m, const SubstitutionParams& sp) {
  AffineExpr e;
  e.c0 = m.l + sp.a * m.m2 + 2 * sp.beta * m.k + sp.b * m.w + sp.gamma * m.n;
  e.c1 = m.m1 + m.m2 + m.w;
  return e;
}

namespace {

Monomial mono(Rational l, Rational m1, Rational m2, Rational k, Rational w,
              Rational n, bool log_factor = false) {
  Monomial m;
  m.l = std::move(l);
  m.m1 = std::move(m1);
  m.m2 = std::move(m2);
  m.k = std::move(k);
  m.w = std::move(w);
  m.n = std::move(n);
  m.log_factor = log_factor;
  return m;
}

Term make_term(std::string name, std::vector<Monomial> raw,
               const SubstitutionParams& sp) {
  Term t;
  t.name = std::move(name);
  t.raw = std::move(raw);
  for (const auto& m : t.raw) {
    t.exponents.push_back(substitute(m, sp));
    t.log_flags.push_back(m.log_factor);
  }
  return t;
}

// Convex pairing (1-sigma) * lo + sigma * hi of two summand exponents, the
// shape every interpolation product takes.
AffineExpr pair_interp(const AffineExpr& lo, const AffineExpr& hi,
                       const Rational& sigma) {
  AffineExpr e;
  e.c0 = (1 - sigma) * lo.c0 + sigma * hi.c0;
  e.c1 = (1 - sigma) * lo.c1 + sigma * hi.c1;
  return e;
}

}  // namespace

Ledger ledger(const Rational& p, const Rational& sigma, const Rational& alpha,
              const Rational& beta, const Rational& a, const Rational& b,
              const Rational& gamma, const Rational& s) {
  if (p <= 0 || p >= 1) throw BadExponent("p must lie in (0,1)");
  if (sigma <= 0 || sigma >= 1) throw BadExponent("sigma must lie in (0,1)");
  if (s <= 1) throw BadExponent("s must exceed 1");
  if (alpha <= 0) throw BadExponent("alpha must be positive");

  SubstitutionParams sp{beta, a, b, gamma};
  Ledger L;
  L.p = p;
  L.sigma = sigma;
  L.alpha = alpha;
  L.s = s;
  L.sub = sp;

  const Rational two_over_p = Rational(2) / p;
  const Rational half(1, 2);

  // Maximal-function norm of the perturbation gradient, five summands. The
  // fourth carries the logarithmic moment-counting factor.
  L.terms.push_back(make_term(
      "grad_u_hp",
      {
          mono(1, half - two_over_p, Rational(3, 2), half, 0, 0),
          mono(0, half, half, 1, -1, 0),
          mono(1, 1 - two_over_p, 2, 1, -1, 0),
          mono(two_over_p, 0, 0, 1, -1, 0, true),
          mono(0, 0, 0, 0, 0, -1),
      },
      sp));

  // Interpolation norm of the perturbation (L^1 / gradient interpolation with
  // weight sigma), four summands.
  const Rational frac = (1 - sigma) / (3 + sigma);
  L.terms.push_back(make_term(
      "u_w_sigma1",
      {
          mono(sigma, -half, sigma - half, half, 0, 0),
          mono(0, 0, 0, 1, -1, 0),
          mono(sigma, frac, frac + sigma, 1, -1, 0),
          mono(0, 0, 0, 0, 0, -1),
      },
      sp));

  // New-error pieces: transport-linear, oscillation-linear, quadratic,
  // dissipative, flux, quadrature, intermittency, time-derivative.
  L.terms.push_back(make_term(
      "r_lin1",
      {
          mono(0, 1, -1, -half, 0, 0),
          mono(0, half, half, 0, -1, 0),
          mono(0, 0, 0, 0, -1, 0),
          mono(0, 0, 0, 0, 0, -1),
          mono(0, -half, -half, -half, 0, 0),
      },
      sp));
  L.terms.push_back(make_term(
      "r_lin2",
      {
          mono(0, 1, -1, 0, 0, 0),
          mono(0, half, half, half, -1, 0),
          mono(0, 0, 0, half, -1, 0),
          mono(0, 0, 0, 0, 0, -1),
      },
      sp));
  L.terms.push_back(make_term(
      "r_lin3",
      {
          mono(0, 2, -2, 0, 0, 0),
          mono(0, 1, 1, 1, -2, 0),
          mono(0, 0, 0, 1, -2, 0),
          mono(0, 0, 0, 0, 0, -2),
      },
      sp));
  const Rational one_over_s = Rational(1) / s;
  L.terms.push_back(make_term(
      "r_delta",
      {
          mono(1, -half, half, -half, 0, 0),
          mono(1, 1 - one_over_s, 2 - one_over_s, 0, -1, 0),
          mono(0, 0, 0, 0, -1, 0),
          mono(0, 0, 0, 0, 0, -1),
      },
      sp));
  L.terms.push_back(make_term("r_y", {mono(-1, 0, 0, 1, -1, 1)}, sp));
  L.terms.push_back(make_term("r_q", {mono(-1, 0, 0, 0, 0, 0)}, sp));
  L.terms.push_back(make_term("r_g", {mono(0, 0, 0, 0, 0, -1)}, sp));
  L.terms.push_back(make_term(
      "r_time",
      {
          mono(-1, -half, -Rational(3, 2), half, 0, 1),
          mono(0, half, -Rational(3, 2), -half, 1, 0),
      },
      sp));

  // Deviation tail of the velocity increment beyond the explicit square-root
  // leading constant, five summands.
  L.terms.push_back(make_term(
      "u_l2_tail",
      {
          mono(-half, 0, 0, 0, 0, 0),
          mono(0, 1, -1, 0, 0, 0),
          mono(0, half, half, half, -1, 0),
          mono(0, 0, 0, 0, -1, 0),
          mono(0, 0, 0, 0, 0, -1),
      },
      sp));

  // Un-simplified companions of u_w_sigma1: the commutator piece and all four
  // pairings of the two-summand temporal bounds.
  {
    const AffineExpr uc_l1 =
        substitute(mono(0, half, -Rational(3, 2), half, 0, 0), sp);
    const AffineExpr grad_wp_l1 =
        substitute(mono(1, -half, half, half, 0, 0), sp);
    L.wsigma_unsimplified.push_back(pair_interp(uc_l1, grad_wp_l1, sigma));

    const AffineExpr wt_osc = substitute(mono(0, frac, frac, 1, -1, 0), sp);
    const AffineExpr wt_flat = substitute(mono(0, 0, 0, 1, -1, 0), sp);
    const AffineExpr gwt_osc =
        substitute(mono(1, frac, 1 + frac, 1, -1, 0), sp);
    const AffineExpr gwt_flat = substitute(mono(0, 0, 0, 1, -1, 0), sp);
    for (const auto& lo : {wt_osc, wt_flat})
      for (const auto& hi : {gwt_osc, gwt_flat})
        L.wsigma_unsimplified.push_back(pair_interp(lo, hi, sigma));
  }

  return L;
}

Negativity assert_all_negative(const Ledger& L) {
  Negativity out;
  out.all_negative = true;
  for (const auto& t : L.terms) {
    for (size_t j = 0; j < t.exponents.size(); ++j) {
      if (t.exponents[j].at(L.alpha) >= 0) {
        out.all_negative = false;
        out.offenders.push_back(t.name + " summand " + std::to_string(j + 1));
      }
    }
  }
  return out;
}

Feasibility feasibility(const Rational& p, const Rational& sigma,
                        const Rational& beta, const Rational& a,
                        const Rational& b) {
  if (p <= 0 || p >= 1) throw BadExponent("p must lie in (0,1)");
  if (sigma <= 0 || sigma >= 1) throw BadExponent("sigma must lie in (0,1)");
  Feasibility f;
  // alpha > 2/p
  f.components[0] = Rational(2) / p;
  // 2 alpha (1 - 1/p) < -25/2, with 1 - 1/p < 0
  f.components[1] = Rational(25, 4) / (Rational(1) / p - 1);
  // alpha (1 - sigma) > beta + sigma + a (sigma - 1/2)
  f.components[2] = (beta + sigma + a * (sigma - Rational(1, 2))) / (1 - sigma);
  // alpha (1 - sigma^2)/(3 + sigma) > 2 beta + sigma + a ((1-sigma)/(3+sigma)
  //                                   + sigma) - b
  const Rational lhs_coeff = (1 - sigma * sigma) / (3 + sigma);
  f.components[3] =
      (2 * beta + sigma + a * ((1 - sigma) / (3 + sigma) + sigma) - b) /
      lhs_coeff;
  f.alpha_min = *std::max_element(f.components.begin(), f.components.end());
  return f;
}

Rational s_max(const Rational& alpha) {
  if (alpha <= 0) throw BadExponent("alpha must be positive");
  return (5 + 2 * alpha) / (2 * alpha);
}

}  // namespace nsrlab::exponents
