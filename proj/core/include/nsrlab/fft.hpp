// Copyright 2026 The nsrlab authors
// SPDX-License-Identifier: Apache-2.0
#ifndef NSRLAB_FFT_HPP
#define NSRLAB_FFT_HPP

#include "nsrlab/field.hpp"

namespace nsrlab {

// Forward/backward real transforms of every component. Plans are cached per
// grid size behind a mutex and created with FFTW_ESTIMATE so plan choice (and
// therefore bit-level output) does not depend on runtime timings.
Spectrum fft(const Field& f);
Field ifft(const Spectrum& s);

}  // namespace nsrlab

#endif
