// Copyright 2026 The nsrlab authors
// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "nsrlab/exponents.hpp"

namespace {

void BM_ExponentLedger(benchmark::State& state) {
  using namespace nsrlab;
  for (auto _ : state) {
    auto L = exponents::ledger(Rational(1, 2), Rational(1, 2), Rational(10),
                               Rational(9, 8));
    benchmark::DoNotOptimize(L);
  }
}
BENCHMARK(BM_ExponentLedger);

}  // namespace

BENCHMARK_MAIN();
