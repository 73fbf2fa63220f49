// Copyright 2026 The nsrlab authors
// SPDX-License-Identifier: Apache-2.0
#ifndef NSRLAB_RATIONAL_HPP
#define NSRLAB_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <string>

#include "nsrlab/errors.hpp"

namespace nsrlab {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// Renders as "num/den" in lowest terms, or plain "num" for integers, matching
// the report file convention.
inline std::string rational_to_string(const Rational& r) {
  const BigInt num = numerator(r);
  const BigInt den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

// Base-10 only; leading zeros are stripped so they are never read as an
// octal prefix.
inline BigInt int_from_string(const std::string& s) {
  size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
    throw ConfigError("cannot parse integer '" + s + "'");
  const size_t firstnz = s.find_first_not_of('0', start);
  BigInt mag((firstnz == std::string::npos) ? "0" : s.substr(firstnz));
  return s[0] == '-' ? BigInt(-mag) : mag;
}

inline Rational rational_from_string(const std::string& s) {
  const auto slash = s.find('/');
  const auto dot = s.find('.');
  try {
    if (slash != std::string::npos) {
      const BigInt num = int_from_string(s.substr(0, slash));
      const BigInt den = int_from_string(s.substr(slash + 1));
      if (den == 0) throw ConfigError("zero denominator in '" + s + "'");
      return Rational(num, den);
    }
    if (dot != std::string::npos) {
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      if (digits.empty() || digits == "-" || digits == "+")
        throw ConfigError("cannot parse rational '" + s + "'");
      const size_t frac_len = s.size() - dot - 1;
      BigInt den = 1;
      for (size_t i = 0; i < frac_len; ++i) den *= 10;
      return Rational(int_from_string(digits), den);
    }
    return Rational(int_from_string(s));
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception&) {
    throw ConfigError("cannot parse rational '" + s + "'");
  }
}

// x^(num/den) for rational exponents with double base, used when evaluating
// parameter monomials numerically.
inline double pow_rational(double base, const Rational& e) {
  return std::pow(base, to_double(e));
}

}  // namespace nsrlab

#endif
