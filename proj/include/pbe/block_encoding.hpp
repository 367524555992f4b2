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
 * @file block_encoding.hpp
 * @brief The block-encoding contract shared by all circuit builders.
 *
 * A BlockEncoding holds a circuit on n_work + n_anc qubits such that, with
 * the ancilla register prepared and post-selected on |flag> (the all-zeros
 * state unless stated otherwise), the induced map on the work register is
 * A / alpha for the encoded matrix A. Work qubits occupy indices
 * [0, n_work); ancillas sit above them, so with little-endian ordering the
 * encoded block of the full unitary is the top-left 2^n_work square block
 * when flag = 0.
 */

#include <cstdint>

#include "pbe/circuit.hpp"

namespace pbe {

struct BlockEncoding {
  Circuit circuit;
  int n_work = 0;
  int n_anc = 0;
  double alpha = 1.0;          // Subnormalisation: block * alpha = A.
  std::int64_t flag = 0;       // Ancilla basis state selecting the block.

  int total_qubits() const { return n_work + n_anc; }

  void check() const {
    if (n_work < 0 || n_anc < 0)
      throw std::invalid_argument("BlockEncoding: negative register size");
    if (circuit.num_qubits != n_work + n_anc)
      throw std::invalid_argument("BlockEncoding: circuit width mismatch");
    if (alpha <= 0)
      throw std::invalid_argument("BlockEncoding: alpha must be positive");
    if (flag < 0 || (n_anc < 63 && flag >= (std::int64_t{1} << n_anc)))
      throw std::invalid_argument("BlockEncoding: flag out of range");
  }
};

}  // namespace pbe
