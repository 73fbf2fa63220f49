// Copyright 2026 The nsrlab authors
// SPDX-License-Identifier: Apache-2.0
#include "nsrlab/report.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <system_error>

#include "nsrlab/errors.hpp"

namespace nsrlab {

void write_file_atomic(const std::string& path, const std::string& text) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  const fs::path dir = target.parent_path().empty() ? fs::path(".")
                                                    : target.parent_path();
  std::error_code ec;
  fs::create_directories(dir, ec);
  const std::string tmp =
      (dir / (target.filename().string() + ".tmp.XXXXXX")).string();
  std::string tmpbuf = tmp;
  const int fd = mkstemp(tmpbuf.data());
  if (fd < 0) throw ConfigError("cannot create temp file near " + path);
  bool ok = true;
  size_t off = 0;
  while (off < text.size()) {
    const ssize_t n = ::write(fd, text.data() + off, text.size() - off);
    if (n <= 0) {
      ok = false;
      break;
    }
    off += static_cast<size_t>(n);
  }
  if (ok) ok = ::fsync(fd) == 0;
  ::close(fd);
  if (!ok || std::rename(tmpbuf.c_str(), path.c_str()) != 0) {
    std::remove(tmpbuf.c_str());
    throw ConfigError("cannot write " + path);
  }
}

}  // namespace nsrlab
