// Copyright 2026 The nsrlab authors
// SPDX-License-Identifier: Apache-2.0
#include "nsrlab/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <vector>

namespace nsrlab {

namespace {

// One reusable plan pair per grid size. FFTW planning is not thread safe;
// execution with the new-array interface is.
struct PlanPair {
  fftw_plan fwd = nullptr;
  fftw_plan bwd = nullptr;
  double* real_buf = nullptr;
  fftw_complex* cplx_buf = nullptr;
  int n1 = 0, n2 = 0;
};

std::mutex plan_mutex;

PlanPair& plan_for(int n1, int n2) {
  static std::map<std::pair<int, int>, PlanPair> cache;
  std::lock_guard<std::mutex> lock(plan_mutex);
  auto [it, inserted] = cache.try_emplace({n1, n2});
  PlanPair& p = it->second;
  if (inserted) {
    p.n1 = n1;
    p.n2 = n2;
    p.real_buf = fftw_alloc_real(static_cast<size_t>(n1) * n2);
    p.cplx_buf = fftw_alloc_complex(static_cast<size_t>(n1) * (n2 / 2 + 1));
    p.fwd = fftw_plan_dft_r2c_2d(n1, n2, p.real_buf, p.cplx_buf, FFTW_ESTIMATE);
    p.bwd = fftw_plan_dft_c2r_2d(n1, n2, p.cplx_buf, p.real_buf, FFTW_ESTIMATE);
  }
  return p;
}

}  // namespace

Spectrum fft(const Field& f) {
  const GridSpec& g = f.grid();
  PlanPair& p = plan_for(g.n1, g.n2);
  Spectrum out(g, f.comps());
  const size_t nreal = static_cast<size_t>(g.n1) * g.n2;
  const size_t ncplx = static_cast<size_t>(g.n1) * (g.n2 / 2 + 1);
  const double scale = 1.0 / static_cast<double>(nreal);
  std::lock_guard<std::mutex> lock(plan_mutex);
  for (int c = 0; c < f.comps(); ++c) {
    const double* src = f.comp(c);
    for (size_t i = 0; i < nreal; ++i) p.real_buf[i] = src[i];
    fftw_execute(p.fwd);
    std::complex<double>* dst = out.comp(c);
    for (size_t i = 0; i < ncplx; ++i)
      dst[i] = scale * std::complex<double>(p.cplx_buf[i][0], p.cplx_buf[i][1]);
  }
  return out;
}

Field ifft(const Spectrum& s) {
  const GridSpec& g = s.grid();
  PlanPair& p = plan_for(g.n1, g.n2);
  Field out(g, s.comps());
  const size_t nreal = static_cast<size_t>(g.n1) * g.n2;
  const size_t ncplx = static_cast<size_t>(g.n1) * (g.n2 / 2 + 1);
  std::lock_guard<std::mutex> lock(plan_mutex);
  for (int c = 0; c < s.comps(); ++c) {
    const std::complex<double>* src = s.comp(c);
    for (size_t i = 0; i < ncplx; ++i) {
      p.cplx_buf[i][0] = src[i].real();
      p.cplx_buf[i][1] = src[i].imag();
    }
    fftw_execute(p.bwd);
    double* dst = out.comp(c);
    for (size_t i = 0; i < nreal; ++i) dst[i] = p.real_buf[i];
  }
  return out;
}

}  // namespace nsrlab
