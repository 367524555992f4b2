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

#pragma once

/**
 * @file csv.hpp
 * @brief RFC-4180-style CSV emission with deterministic float formatting.
 */

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace pbe {

using CsvCell = std::variant<std::int64_t, double, std::string>;
using CsvRow = std::vector<CsvCell>;

/** Doubles rendered with 17 significant digits (%.17g): lossless re-parse. */
std::string format_double(double v);

/**
 * Writes header + rows; fields containing commas, quotes, or newlines are
 * quoted per RFC 4180. Rows must match the header width. Throws
 * std::runtime_error on I/O failure.
 */
void emit_csv(const std::vector<std::string>& header,
              const std::vector<CsvRow>& rows, const std::string& path);

}  // namespace pbe
