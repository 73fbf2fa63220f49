// Copyright 2026 The nsrlab authors
// SPDX-License-Identifier: Apache-2.0
#ifndef NSRLAB_ERRORS_HPP
#define NSRLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nsrlab {

// Base class for all failures raised by the library. `exit_code` is what the
// command line tool should return when the error escapes: 2 for violated
// mathematical preconditions or invariants, 3 for bad configuration, 4 for
// resolution limits that no amount of retrying at this grid size can fix.
class Error : public std::runtime_error {
 public:
  Error(const std::string& what, int exit_code = 2)
      : std::runtime_error(what), exit_code_(exit_code) {}
  int exit_code() const { return exit_code_; }

 private:
  int exit_code_;
};

#define NSRLAB_DEFINE_ERROR(NAME, CODE)                      \
  class NAME : public Error {                                \
   public:                                                   \
    explicit NAME(const std::string& what)                   \
        : Error(std::string(#NAME) + ": " + what, CODE) {}   \
  }

NSRLAB_DEFINE_ERROR(NonZeroMean, 2);
NSRLAB_DEFINE_ERROR(BadExponent, 2);
NSRLAB_DEFINE_ERROR(OutOfRange, 2);
NSRLAB_DEFINE_ERROR(UnderResolved, 2);
NSRLAB_DEFINE_ERROR(SupportViolation, 2);
NSRLAB_DEFINE_ERROR(SingularGram, 2);
NSRLAB_DEFINE_ERROR(NotDivergenceFree, 2);
NSRLAB_DEFINE_ERROR(BadWindow, 2);
NSRLAB_DEFINE_ERROR(SmoothnessTooLow, 2);
NSRLAB_DEFINE_ERROR(ResolutionExhausted, 4);
NSRLAB_DEFINE_ERROR(ConfigError, 3);

#undef NSRLAB_DEFINE_ERROR

}  // namespace nsrlab

#endif
