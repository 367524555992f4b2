// Copyright 2026 The pbe developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pbe/csv.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace pbe {

std::string format_double(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return std::string(buf);
}

namespace {

std::string escape_field(const std::string& raw) {
  const bool needs_quotes =
      raw.find_first_of(",\"\r\n") != std::string::npos;
  if (!needs_quotes) return raw;
  std::string out = "\"";
  for (char c : raw) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string render_cell(const CsvCell& cell) {
  if (const auto* i = std::get_if<std::int64_t>(&cell)) {
    return std::to_string(*i);
  }
  if (const auto* d = std::get_if<double>(&cell)) {
    return format_double(*d);
  }
  return escape_field(std::get<std::string>(cell));
}

}  // namespace

void emit_csv(const std::vector<std::string>& header,
              const std::vector<CsvRow>& rows, const std::string& path) {
  for (const auto& row : rows) {
    if (row.size() != header.size()) {
      throw std::invalid_argument("emit_csv: row width differs from header");
    }
  }
  std::ofstream out(path, std::ios::binary);  // "\n" endings on all platforms
  if (!out) throw std::runtime_error("emit_csv: cannot open " + path);
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) out << ',';
    out << escape_field(header[i]);
  }
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << render_cell(row[i]);
    }
    out << '\n';
  }
  out.flush();
  if (!out) throw std::runtime_error("emit_csv: write failed for " + path);
}

}  // namespace pbe
