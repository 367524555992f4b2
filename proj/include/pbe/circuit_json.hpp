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
 * @file circuit_json.hpp
 * @brief JSON (de)serialisation of circuits.
 *
 * Schema:
 *   { "num_qubits": n, "gates": [ ... ] }
 * with one object per gate:
 *   - bare gates:             {"kind": "h"|"x"|"y"|"p", "target": t}
 *     plus {"angle": a} for "p";
 *   - X with controls:        {"kind": "cx", "target": t,
 *                              "controls": [[q, polarity], ...]}
 *   - other controlled gates: base kind plus the "controls" array.
 * On input, "cx" normalises to X-with-controls, and the legacy spelling
 * {"kind": "ctrl", "angle": a, ...} normalises to Phase-with-controls.
 * Angles round-trip exactly (shortest-representation doubles).
 */

#include <nlohmann/json.hpp>
#include <string>

#include "pbe/circuit.hpp"

namespace pbe {

nlohmann::json circuit_to_json(const Circuit& circ);
Circuit circuit_from_json(const nlohmann::json& j);

/** File helpers; throw std::runtime_error on I/O failure. */
void save_circuit(const Circuit& circ, const std::string& path);
Circuit load_circuit(const std::string& path);

}  // namespace pbe
