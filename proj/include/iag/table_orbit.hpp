// Copyright 2026 The iag Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef IAG_TABLE_ORBIT_HPP_
#define IAG_TABLE_ORBIT_HPP_

#include <cstdint>
#include <vector>

namespace iag {

// The symmetry group acting on n-variable tables: variable
// permutations, per-variable input negations, and output complement
// (NPN equivalence).  RI verdicts and, under uniform prior and
// accuracy, cpl values are invariant along orbits, so the exhaustive
// sweeps solve one representative per orbit.
class TableOrbit {
 public:
  explicit TableOrbit(int num_vars);  // num_vars <= 4

  // Smallest table code in the orbit of `code`.
  uint64_t canonical(uint64_t code) const;

  int num_vars() const { return n_; }

 private:
  int n_;
  uint32_t size_;  // 2^n
  // One index remap per (permutation, flip mask) pair.
  std::vector<std::vector<uint8_t>> remaps_;
};

}  // namespace iag

#endif  // IAG_TABLE_ORBIT_HPP_
