// Copyright 2026 The nsrlab authors
// SPDX-License-Identifier: Apache-2.0
#ifndef NSRLAB_FIELD_IO_HPP
#define NSRLAB_FIELD_IO_HPP

#include <string>

#include "nsrlab/field.hpp"

namespace nsrlab {

// On-disk field format: raw little-endian IEEE 754 doubles, component
// outermost, row-major with x2 fastest (the in-memory layout verbatim), plus
// a JSON sidecar at <path>.json recording n1, n2, components, time_index and
// the grid tag "T2-unit".
void write_field(const std::string& path, const Field& f, int time_index = 0);

struct LoadedField {
  Field field;
  int time_index = 0;
};
LoadedField read_field(const std::string& path);

}  // namespace nsrlab

#endif
