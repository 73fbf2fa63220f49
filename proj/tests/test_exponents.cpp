#include "doctest.h"
#include "nsrlab/exponents.hpp"
#include "nsrlab/errors.hpp"

using namespace nsrlab;
using namespace nsrlab::exponents;

namespace {

Rational R(long num, long den = 1) { return Rational(num, den); }

AffineExpr ae(Rational c0, Rational c1) {
  AffineExpr e;
  e.c0 = std::move(c0);
  e.c1 = std::move(c1);
  return e;
}

const Term& term(const Ledger& L, const std::string& name) {
  for (const auto& t : L.terms)
    if (t.name == name) return t;
  REQUIRE(false);
  static Term dummy;
  return dummy;
}

void check_term(const Ledger& L, const std::string& name,
                const std::vector<AffineExpr>& expected) {
  const Term& t = term(L, name);
  REQUIRE(t.exponents.size() == expected.size());
  for (size_t j = 0; j < expected.size(); ++j) {
    CAPTURE(name);
    CAPTURE(j);
    CHECK(t.exponents[j] == expected[j]);
  }
}

}  // namespace

TEST_CASE("ledger reproduces the frozen default-parameter displays") {
  // p = 1/2, sigma = 1/2, s = 9/8, defaults (beta,a,b,gamma) = (4,5,11,1).
  // Every expected value below is hand-substituted from the raw bound
  // monomials; zero tolerance.
  const Ledger L = ledger(R(1, 2), R(1, 2), R(10), R(9, 8));

  check_term(L, "grad_u_hp",
             {ae(R(25, 2), R(-2)), ae(R(-1, 2), R(0)), ae(R(8), R(-2)),
              ae(R(1), R(-1)), ae(R(-1), R(0))});
  check_term(L, "u_w_sigma1",
             {ae(R(9, 2), R(-1, 2)), ae(R(-3), R(-1)), ae(R(5, 7), R(-3, 14)),
              ae(R(-1), R(0))});
  check_term(L, "r_lin1",
             {ae(R(-9), R(0)), ae(R(-17, 2), R(0)), ae(R(-11), R(-1)),
              ae(R(-1), R(0)), ae(R(-13, 2), R(-1))});
  check_term(L, "r_lin2",
             {ae(R(-5), R(0)), ae(R(-9, 2), R(0)), ae(R(-7), R(-1)),
              ae(R(-1), R(0))});
  check_term(L, "r_lin3",
             {ae(R(-10), R(0)), ae(R(-9), R(0)), ae(R(-14), R(-2)),
              ae(R(-2), R(0))});
  // Dissipative term summand 2 is -5 + (5+2a)(1-1/s) = 2(1-1/s) a - 5/s.
  check_term(L, "r_delta",
             {ae(R(-1, 2), R(0)), ae(R(-40, 9), R(2, 9)), ae(R(-11), R(-1)),
              ae(R(-1), R(0))});
  check_term(L, "r_y", {ae(R(-3), R(-1))});
  check_term(L, "r_q", {ae(R(-1), R(0))});
  check_term(L, "r_g", {ae(R(-1), R(0))});
  check_term(L, "r_time", {ae(R(-7, 2), R(-2)), ae(R(-1, 2), R(0))});
  check_term(L, "u_l2_tail",
             {ae(R(-1, 2), R(0)), ae(R(-5), R(0)), ae(R(-9, 2), R(0)),
              ae(R(-11), R(-1)), ae(R(-1), R(0))});

  // Term set is exactly the eleven expected names with these summand counts.
  REQUIRE(L.terms.size() == 11);
  size_t total = 0;
  for (const auto& t : L.terms) total += t.exponents.size();
  CHECK(total == 36);
}

TEST_CASE("log factor flag rides on the fourth maximal-norm summand only") {
  const Ledger L = ledger(R(1, 2), R(1, 2), R(10), R(9, 8));
  for (const auto& t : L.terms) {
    for (size_t j = 0; j < t.log_flags.size(); ++j) {
      const bool expect = (t.name == "grad_u_hp" && j == 3);
      CHECK(t.log_flags[j] == expect);
    }
  }
}

TEST_CASE("substitution is consistent with the raw monomials") {
  const Ledger L = ledger(R(2, 5), R(3, 7), R(14), R(21, 20));
  for (const auto& t : L.terms) {
    REQUIRE(t.raw.size() == t.exponents.size());
    for (size_t j = 0; j < t.raw.size(); ++j)
      CHECK(substitute(t.raw[j], L.sub) == t.exponents[j]);
  }
}

TEST_CASE("feasibility components at p = sigma = 1/2") {
  // Independent evaluation of each closed-form constraint:
  //   alpha > 2/p                      -> 4
  //   2 alpha (1 - 1/p) < -25/2        -> alpha > 25/4
  //   alpha (1-s) > b0 + s + a(s-1/2)  -> alpha > (4 + 1/2)/(1/2) = 9
  //   fourth constraint                -> alpha > (5/7)/(3/14)    = 10/3
  const Feasibility f = feasibility(R(1, 2), R(1, 2));
  CHECK(f.components[0] == R(4));
  CHECK(f.components[1] == R(25, 4));
  CHECK(f.components[2] == R(9));
  CHECK(f.components[3] == R(10, 3));
  CHECK(f.alpha_min == R(9));
}

TEST_CASE("third feasibility component approaches 4 - 5/2 as sigma shrinks") {
  // Hand evaluation at sigma = 1/100:
  // (4 + 1/100 + 5(1/100 - 1/2)) / (99/100) = (156/100)(100/99) = 52/33.
  const Feasibility f1 = feasibility(R(1, 2), R(1, 100));
  CHECK(f1.components[2] == R(52, 33));
  const Feasibility f2 = feasibility(R(1, 2), R(1, 10000));
  CHECK(f2.components[2] > R(3, 2));
  CHECK(f2.components[2] < f1.components[2]);
  CHECK(f2.components[2] - R(3, 2) < R(1, 1000));
}

TEST_CASE("s window upper end") {
  CHECK(s_max(R(10)) == R(5, 4));
  CHECK(s_max(R(9)) == R(23, 18));
  // The dissipative summand with s at the window edge has exponent exactly 0.
  const Rational alpha = R(10);
  const Rational s_edge = s_max(alpha);
  const Ledger L = ledger(R(1, 2), R(1, 2), alpha, (1 + s_edge) / 2);
  const Term& t = term(L, "r_delta");
  CHECK(t.exponents[1].at(alpha) < 0);
  const Ledger L_edge = ledger(R(1, 2), R(1, 2), alpha, s_edge);
  CHECK(term(L_edge, "r_delta").exponents[1].at(alpha) == 0);
}

TEST_CASE("all exponents negative above the feasibility threshold") {
  const Feasibility f = feasibility(R(1, 2), R(1, 2));
  const Rational alpha = f.alpha_min + 1;
  const Ledger L =
      ledger(R(1, 2), R(1, 2), alpha, (1 + s_max(alpha)) / 2);
  const Negativity n = assert_all_negative(L);
  CHECK(n.all_negative);
  CHECK(n.offenders.empty());
}

TEST_CASE("alpha below the second constraint is flagged with its offender") {
  // alpha = 6 satisfies alpha > 2/p = 4 but violates 2 alpha (1-1/p) < -25/2,
  // which lives in the first maximal-norm summand.
  const Ledger L = ledger(R(1, 2), R(1, 2), R(6), R(9, 8));
  const Negativity n = assert_all_negative(L);
  CHECK_FALSE(n.all_negative);
  REQUIRE(!n.offenders.empty());
  CHECK(n.offenders.front() == "grad_u_hp summand 1");
}

TEST_CASE("quadrature error exponent is always negative") {
  for (long a = 1; a <= 40; ++a) {
    const Ledger L = ledger(R(1, 2), R(1, 2), R(a), R(9, 8));
    const Term& t = term(L, "r_q");
    CHECK(t.exponents[0].at(R(a)) == R(-1));
  }
}

TEST_CASE("feasibility composed with ledger is negative on a rational grid") {
  // 100 rational (p, sigma) pairs.
  for (long i = 1; i <= 10; ++i) {
    for (long j = 1; j <= 10; ++j) {
      const Rational p(i, 11);
      const Rational sigma(j, 11);
      const Feasibility f = feasibility(p, sigma);
      const Rational alpha = f.alpha_min + 1;
      const Ledger L = ledger(p, sigma, alpha, (1 + s_max(alpha)) / 2);
      const Negativity n = assert_all_negative(L);
      CAPTURE(i);
      CAPTURE(j);
      CHECK(n.all_negative);
    }
  }
}

TEST_CASE("displayed interpolation summands dominate the raw pairings") {
  for (long j = 1; j <= 10; ++j) {
    const Rational sigma(j, 11);
    const Feasibility f = feasibility(R(1, 2), sigma);
    const Rational alpha = f.alpha_min + 1;
    const Ledger L = ledger(R(1, 2), sigma, alpha, (1 + s_max(alpha)) / 2);
    Rational displayed_max;
    bool first = true;
    for (const auto& e : term(L, "u_w_sigma1").exponents) {
      const Rational v = e.at(alpha);
      if (first || v > displayed_max) displayed_max = v;
      first = false;
    }
    for (const auto& e : L.wsigma_unsimplified) {
      CAPTURE(j);
      CHECK(e.at(alpha) <= displayed_max);
    }
  }
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(ledger(R(0), R(1, 2), R(10), R(9, 8)), BadExponent);
  CHECK_THROWS_AS(ledger(R(1), R(1, 2), R(10), R(9, 8)), BadExponent);
  CHECK_THROWS_AS(ledger(R(1, 2), R(1), R(10), R(9, 8)), BadExponent);
  CHECK_THROWS_AS(ledger(R(1, 2), R(1, 2), R(10), R(1)), BadExponent);
  CHECK_THROWS_AS(ledger(R(1, 2), R(1, 2), R(0), R(9, 8)), BadExponent);
  CHECK_THROWS_AS(feasibility(R(1, 2), R(0)), BadExponent);
  CHECK_THROWS_AS(s_max(R(0)), BadExponent);
}

TEST_CASE("rational serialization") {
  CHECK(rational_to_string(R(-17, 2)) == "-17/2");
  CHECK(rational_to_string(R(4)) == "4");
  CHECK(rational_from_string("25/4") == R(25, 4));
  CHECK(rational_from_string("-9") == R(-9));
  CHECK(rational_from_string("0.5") == R(1, 2));
  CHECK(rational_from_string("-0.125") == R(-1, 8));
  CHECK(rational_from_string(".25") == R(1, 4));
  CHECK(rational_from_string("2.") == R(2));
  CHECK_THROWS_AS(rational_from_string("1/0"), ConfigError);
  CHECK_THROWS_AS(rational_from_string("x/2"), ConfigError);
  CHECK_THROWS_AS(rational_from_string("1.2.3"), ConfigError);
  CHECK_THROWS_AS(rational_from_string("."), ConfigError);
  CHECK(ae(R(-11), R(-1)).str() == "-alpha-11");
  CHECK(ae(R(25, 2), R(-2)).str() == "-2*alpha+25/2");
  CHECK(ae(R(-1), R(0)).str() == "-1");
}
