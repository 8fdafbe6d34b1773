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

#include "iag/table_orbit.hpp"

#include <algorithm>
#include <numeric>

#include "iag/errors.hpp"

namespace iag {

TableOrbit::TableOrbit(int num_vars) : n_(num_vars), size_(1u << num_vars) {
  if (num_vars < 0 || num_vars > 4)
    throw ValidationError("orbit reduction supports num_vars <= 4");
  std::vector<int> perm(n_);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (uint32_t flip = 0; flip < size_; ++flip) {
      std::vector<uint8_t> remap(size_);
      for (uint32_t x = 0; x < size_; ++x) {
        uint32_t y = 0;
        for (int i = 0; i < n_; ++i)
          if ((x >> i) & 1u) y |= 1u << perm[i];
        remap[x] = static_cast<uint8_t>(y ^ flip);
      }
      remaps_.push_back(std::move(remap));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

uint64_t TableOrbit::canonical(uint64_t code) const {
  const uint64_t mask =
      (size_ == 64) ? ~0ull : ((1ull << size_) - 1);
  uint64_t best = ~0ull;
  for (const auto& remap : remaps_) {
    uint64_t mapped = 0;
    for (uint32_t x = 0; x < size_; ++x)
      if ((code >> remap[x]) & 1ull) mapped |= 1ull << x;
    best = std::min({best, mapped, (~mapped) & mask});
  }
  return best;
}

}  // namespace iag
