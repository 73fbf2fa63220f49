// Copyright 2026 The nsrlab authors
// SPDX-License-Identifier: Apache-2.0
#ifndef NSRLAB_EXPONENTS_HPP
#define NSRLAB_EXPONENTS_HPP

#include <array>
#include <string>
#include <vector>

#include "nsrlab/rational.hpp"

namespace nsrlab::exponents {

// lambda-exponent of one error summand after the power-law substitution:
// value = c0 + c1 * alpha, both exact rationals.
struct AffineExpr {
  Rational c0 = 0;
  Rational c1 = 0;
  Rational at(const Rational& alpha) const { return c0 + c1 * alpha; }
  bool operator==(const AffineExpr&) const = default;
  std::string str() const;
};

// One summand of an error bound before substitution: a product of powers of
// the six tunables. log_factor marks an extra |log(lambda mu1)|^(1/p) factor
// that rides along without changing the power counting.
struct Monomial {
  Rational l = 0;   // lambda
  Rational m1 = 0;  // mu1 (fine concentration)
  Rational m2 = 0;  // mu2 (coarse concentration)
  Rational k = 0;   // kappa (time concentration; kappa^(1/2) is the natural unit)
  Rational w = 0;   // omega (phase speed)
  Rational n = 0;   // nu (time oscillation)
  bool log_factor = false;
};

// Power-law substitution mu1 = lambda^alpha, mu2 = lambda^(alpha+a),
// kappa^(1/2) = lambda^beta, omega = lambda^(alpha+b), nu = lambda^gamma.
struct SubstitutionParams {
  Rational beta = 4;
  Rational a = 5;
  Rational b = 11;
  Rational gamma = 1;
};

AffineExpr substitute(const Monomial& m, const SubstitutionParams& sp);

struct Term {
  std::string name;
  std::vector<Monomial> raw;          // bound summands in the six tunables
  std::vector<AffineExpr> exponents;  // the same after substitution
  std::vector<bool> log_flags;
};

struct Ledger {
  Rational p;
  Rational sigma;
  Rational alpha;
  Rational s;
  SubstitutionParams sub;
  std::vector<Term> terms;
  // Interpolation-product companions for the interpolation-norm term, kept
  // un-simplified (every pairing of the two-piece temporal bounds plus the
  // commutator piece). The suite asserts the displayed summands dominate.
  std::vector<AffineExpr> wsigma_unsimplified;
};

// Builds the full ledger of every error summand. p, sigma in (0,1); s > 1.
Ledger ledger(const Rational& p, const Rational& sigma, const Rational& alpha,
              const Rational& beta, const Rational& a, const Rational& b,
              const Rational& gamma, const Rational& s);

inline Ledger ledger(const Rational& p, const Rational& sigma,
                     const Rational& alpha, const Rational& s) {
  return ledger(p, sigma, alpha, 4, 5, 11, 1, s);
}

struct Negativity {
  bool all_negative = false;
  std::vector<std::string> offenders;  // "term_name summand j" entries
};

Negativity assert_all_negative(const Ledger& L);

// The open lower bound on alpha: the max of the four closed-form constraint
// expressions. Any alpha strictly above alpha_min (with s inside the window)
// makes every ledger exponent strictly negative.
struct Feasibility {
  std::array<Rational, 4> components;
  Rational alpha_min;
};

Feasibility feasibility(const Rational& p, const Rational& sigma,
                        const Rational& beta, const Rational& a,
                        const Rational& b);

inline Feasibility feasibility(const Rational& p, const Rational& sigma) {
  return feasibility(p, sigma, 4, 5, 11);
}

// Upper end of the admissible s-window (1, s_max) at a given alpha.
Rational s_max(const Rational& alpha);

}  // namespace nsrlab::exponents

#endif
