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

#include "pbe/shift.hpp"

namespace pbe {

namespace {

void add_unit_shift(Circuit& circ, int n, ShiftDirection dir) {
  // Increment ripples the carry from the top bit down: flipping bit m is
  // conditioned on all lower bits being 1 (increment) or 0 (decrement).
  const int polarity = (dir == ShiftDirection::Left) ? 1 : 0;
  for (int m = n - 1; m >= 1; --m) {
    Gate g = x(m);
    for (int c = 0; c < m; ++c) g.controls.push_back(Control{c, polarity});
    circ.add(std::move(g));
  }
  circ.add(x(0));
}

}  // namespace

Circuit build_shift(int n, const ShiftSpec& spec) {
  if (n < 1) throw std::invalid_argument("build_shift: need n >= 1");
  if (n > 62) throw std::invalid_argument("build_shift: n too large");
  const std::int64_t N = std::int64_t{1} << n;
  std::int64_t reps = ((spec.power % N) + N) % N;  // Canonical non-negative.

  Circuit circ(n);
  for (std::int64_t r = 0; r < reps; ++r) add_unit_shift(circ, n, spec.dir);
  return circ;
}

}  // namespace pbe
