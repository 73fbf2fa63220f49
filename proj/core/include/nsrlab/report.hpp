// Copyright 2026 The nsrlab authors
// SPDX-License-Identifier: Apache-2.0
#ifndef NSRLAB_REPORT_HPP
#define NSRLAB_REPORT_HPP

#include <string>

#include "json.hpp"

namespace nsrlab {

using Json = nlohmann::ordered_json;

inline constexpr int kReportVersion = 1;

// Writes text to `path` atomically (temp file in the same directory, fsync,
// rename) so partially written reports never appear under the final name.
void write_file_atomic(const std::string& path, const std::string& text);

inline void write_report(const std::string& path, const Json& j) {
  write_file_atomic(path, j.dump(2) + "\n");
}

}  // namespace nsrlab

#endif
