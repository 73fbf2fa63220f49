// Copyright 2026 The nsrlab authors
// SPDX-License-Identifier: Apache-2.0
//
// Command line front end. One subcommand per module; JSON reports, CSV sweep
// tables. Exit codes: 0 pass, 2 assertion failure, 3 config error, 4
// resolution exhausted.

#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "nsrlab/errors.hpp"
#include "nsrlab/exponents.hpp"
#include "nsrlab/report.hpp"

namespace {

using nsrlab::Json;
using nsrlab::Rational;

struct ExponentsArgs {
  std::string p = "1/2";
  std::string sigma = "1/2";
  std::string alpha;  // empty: feasibility minimum plus one
  std::string s;      // empty: middle of the admissible window
  std::string beta = "4", a = "5", b = "11", gamma = "1";
  std::string json_path;
  bool dry_run = false;
};

Json monomial_json(const nsrlab::exponents::Monomial& m) {
  Json j;
  j["lambda"] = nsrlab::rational_to_string(m.l);
  j["mu1"] = nsrlab::rational_to_string(m.m1);
  j["mu2"] = nsrlab::rational_to_string(m.m2);
  j["kappa"] = nsrlab::rational_to_string(m.k);
  j["omega"] = nsrlab::rational_to_string(m.w);
  j["nu"] = nsrlab::rational_to_string(m.n);
  return j;
}

int cmd_exponents(const ExponentsArgs& args) {
  namespace ex = nsrlab::exponents;
  const Rational p = nsrlab::rational_from_string(args.p);
  const Rational sigma = nsrlab::rational_from_string(args.sigma);
  const Rational beta = nsrlab::rational_from_string(args.beta);
  const Rational a = nsrlab::rational_from_string(args.a);
  const Rational b = nsrlab::rational_from_string(args.b);
  const Rational gamma = nsrlab::rational_from_string(args.gamma);

  const ex::Feasibility feas = ex::feasibility(p, sigma, beta, a, b);
  const Rational alpha = args.alpha.empty()
                             ? feas.alpha_min + 1
                             : nsrlab::rational_from_string(args.alpha);
  const Rational s = args.s.empty()
                         ? (1 + ex::s_max(alpha)) / 2
                         : nsrlab::rational_from_string(args.s);

  if (args.dry_run) {
    std::printf(
        "exponents: p=%s sigma=%s alpha=%s s=%s beta=%s a=%s b=%s gamma=%s\n",
        nsrlab::rational_to_string(p).c_str(),
        nsrlab::rational_to_string(sigma).c_str(),
        nsrlab::rational_to_string(alpha).c_str(),
        nsrlab::rational_to_string(s).c_str(),
        nsrlab::rational_to_string(beta).c_str(),
        nsrlab::rational_to_string(a).c_str(),
        nsrlab::rational_to_string(b).c_str(),
        nsrlab::rational_to_string(gamma).c_str());
    return 0;
  }

  const ex::Ledger L = ex::ledger(p, sigma, alpha, beta, a, b, gamma, s);
  const ex::Negativity neg = ex::assert_all_negative(L);

  std::printf("parameters: p=%s sigma=%s alpha=%s s=%s (window (1, %s))\n",
              nsrlab::rational_to_string(p).c_str(),
              nsrlab::rational_to_string(sigma).c_str(),
              nsrlab::rational_to_string(alpha).c_str(),
              nsrlab::rational_to_string(s).c_str(),
              nsrlab::rational_to_string(ex::s_max(alpha)).c_str());
  std::printf("alpha_min = %s  (components:",
              nsrlab::rational_to_string(feas.alpha_min).c_str());
  for (const auto& c : feas.components)
    std::printf(" %s", nsrlab::rational_to_string(c).c_str());
  std::printf(")\n\n%-12s %-28s %-14s %s\n", "term", "exponent", "value",
              "log");
  for (const auto& t : L.terms) {
    for (size_t j = 0; j < t.exponents.size(); ++j) {
      std::printf("%-12s %-28s %-14s %s\n",
                  (j == 0 ? t.name.c_str() : ""),
                  t.exponents[j].str().c_str(),
                  nsrlab::rational_to_string(t.exponents[j].at(alpha)).c_str(),
                  t.log_flags[j] ? "yes" : "");
    }
  }
  std::printf("\nall_negative: %s\n", neg.all_negative ? "true" : "false");
  for (const auto& o : neg.offenders) std::printf("  offender: %s\n", o.c_str());

  if (!args.json_path.empty()) {
    Json j;
    j["report_version"] = nsrlab::kReportVersion;
    j["command"] = "exponents";
    Json params;
    params["p"] = nsrlab::rational_to_string(p);
    params["sigma"] = nsrlab::rational_to_string(sigma);
    params["alpha"] = nsrlab::rational_to_string(alpha);
    params["s"] = nsrlab::rational_to_string(s);
    params["beta"] = nsrlab::rational_to_string(beta);
    params["a"] = nsrlab::rational_to_string(a);
    params["b"] = nsrlab::rational_to_string(b);
    params["gamma"] = nsrlab::rational_to_string(gamma);
    j["params"] = params;
    Json feas_j;
    Json comps = Json::array();
    for (const auto& c : feas.components)
      comps.push_back(nsrlab::rational_to_string(c));
    feas_j["components"] = comps;
    feas_j["alpha_min"] = nsrlab::rational_to_string(feas.alpha_min);
    feas_j["s_max_at_alpha"] = nsrlab::rational_to_string(ex::s_max(alpha));
    j["feasibility"] = feas_j;
    Json terms = Json::array();
    for (const auto& t : L.terms) {
      Json tj;
      tj["name"] = t.name;
      Json summands = Json::array();
      for (size_t k = 0; k < t.exponents.size(); ++k) {
        Json sj;
        sj["c0"] = nsrlab::rational_to_string(t.exponents[k].c0);
        sj["c1"] = nsrlab::rational_to_string(t.exponents[k].c1);
        sj["str"] = t.exponents[k].str();
        sj["value_at_alpha"] =
            nsrlab::rational_to_string(t.exponents[k].at(alpha));
        sj["log_factor"] = static_cast<bool>(t.log_flags[k]);
        sj["raw"] = monomial_json(t.raw[k]);
        summands.push_back(sj);
      }
      tj["summands"] = summands;
      terms.push_back(tj);
    }
    j["terms"] = terms;
    j["all_negative"] = neg.all_negative;
    j["offenders"] = neg.offenders;
    nsrlab::write_report(args.json_path, j);
  }
  return neg.all_negative ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"torus convex-integration laboratory"};
  app.require_subcommand(1);

  ExponentsArgs ex_args;
  CLI::App* ex_cmd = app.add_subcommand(
      "exponents", "exact rational error-exponent ledger and feasibility");
  ex_cmd->add_option("--p", ex_args.p, "integrability exponent in (0,1)");
  ex_cmd->add_option("--sigma", ex_args.sigma, "interpolation order in (0,1)");
  ex_cmd->add_option("--alpha", ex_args.alpha,
                     "concentration exponent (default: alpha_min + 1)");
  ex_cmd->add_option("--s", ex_args.s,
                     "auxiliary integrability (default: mid-window)");
  ex_cmd->add_option("--beta", ex_args.beta, "time-concentration exponent");
  ex_cmd->add_option("--a", ex_args.a, "coarse/fine concentration gap");
  ex_cmd->add_option("--b", ex_args.b, "phase-speed exponent gap");
  ex_cmd->add_option("--gamma", ex_args.gamma, "time-oscillation exponent");
  ex_cmd->add_option("--json", ex_args.json_path, "write JSON report here");
  ex_cmd->add_flag("--dry-run", ex_args.dry_run, "print resolved config only");

  CLI11_PARSE(app, argc, argv);

  try {
    if (ex_cmd->parsed()) return cmd_exponents(ex_args);
  } catch (const nsrlab::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return e.exit_code();
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
  return 3;
}
