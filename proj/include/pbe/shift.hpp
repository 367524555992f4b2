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
 * @file shift.hpp
 * @brief Cyclic shift permutations on the computational basis.
 *
 * L |k> = |(k + 1) mod N> and R |k> = |(k - 1) mod N> for N = 2^n, realised
 * as ripple incrementer / decrementer cascades of multi-controlled X gates.
 * The cascade stays within the n work qubits (no clean ancilla is added);
 * resource counts borrow one scratch qubit inside transpile_count only.
 */

#include <cstdint>

#include "pbe/circuit.hpp"

namespace pbe {

enum class ShiftDirection { Left, Right };

struct ShiftSpec {
  ShiftDirection dir = ShiftDirection::Left;
  std::int64_t power = 1;  // Number of unit shifts; reduced mod 2^n.
};

/**
 * Builds L^power or R^power on n >= 1 qubits as `power mod 2^n` repetitions
 * of the unit cascade. The unit left shift (increment) applies, for
 * m = n-1 down to 1, an X on qubit m controlled on qubits 0..m-1 all being
 * |1>, then a final X on qubit 0; the right shift uses |0> polarities.
 */
Circuit build_shift(int n, const ShiftSpec& spec);

}  // namespace pbe
