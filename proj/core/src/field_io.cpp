// Copyright 2026 The nsrlab authors
// SPDX-License-Identifier: Apache-2.0
#include "nsrlab/field_io.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>

#include "nsrlab/errors.hpp"
#include "nsrlab/report.hpp"

static_assert(std::endian::native == std::endian::little,
              "field files are little-endian; big-endian hosts need swaps");

namespace nsrlab {

void write_field(const std::string& path, const Field& f, int time_index) {
  {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("cannot open " + path + " for writing");
    out.write(reinterpret_cast<const char*>(f.data()),
              static_cast<std::streamsize>(f.size() * sizeof(double)));
    if (!out) throw ConfigError("short write to " + path);
  }
  Json j;
  j["n1"] = f.grid().n1;
  j["n2"] = f.grid().n2;
  j["components"] = f.comps();
  j["time_index"] = time_index;
  j["grid"] = "T2-unit";
  write_file_atomic(path + ".json", j.dump(2) + "\n");
}

LoadedField read_field(const std::string& path) {
  Json j;
  {
    std::ifstream side(path + ".json");
    if (!side) throw ConfigError("missing sidecar " + path + ".json");
    try {
      side >> j;
    } catch (const std::exception& e) {
      throw ConfigError("bad sidecar " + path + ".json: " + e.what());
    }
  }
  for (const char* key : {"n1", "n2", "components", "time_index", "grid"})
    if (!j.contains(key))
      throw ConfigError(std::string("sidecar missing key ") + key);
  if (j["grid"] != "T2-unit") throw ConfigError("unknown grid tag in sidecar");
  const int n1 = j["n1"], n2 = j["n2"], comps = j["components"];
  if (n1 != n2) throw ConfigError("sidecar grid is not square");
  LoadedField out{Field(GridSpec(n1, n2), comps), j["time_index"]};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open " + path);
  in.read(reinterpret_cast<char*>(out.field.data()),
          static_cast<std::streamsize>(out.field.size() * sizeof(double)));
  if (in.gcount() !=
      static_cast<std::streamsize>(out.field.size() * sizeof(double)))
    throw ConfigError("truncated field file " + path);
  char extra;
  if (in.read(&extra, 1) && in.gcount() > 0)
    throw ConfigError("trailing bytes in field file " + path);
  return out;
}

}  // namespace nsrlab
