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

#ifndef IAG_COMPLEXITY_HPP_
#define IAG_COMPLEXITY_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "iag/prob.hpp"
#include "iag/rational.hpp"
#include "iag/truth_table.hpp"

namespace iag {

// Parameters of the test-complexity measure: least budget k for which
// some strategy has positive expected payoff at certainty threshold q.
struct ComplexitySpec {
  TruthTable tt;
  ProductPrior prior;
  AccuracyVector alpha;
  Rational q;        // 0 < q <= 1/2
  int k_max = 64;    // search cap; termination at q < 1/2 is expected
                     // but not proven, so the cap is mandatory

  ComplexitySpec(TruthTable t, ProductPrior pr, AccuracyVector al, Rational q_,
                 int k_max_ = 64);
};

// The best achievable certainty at a given budget, with the records
// that achieve it.  `attaining` holds canonical non-contradictory
// count profiles; they have total length k except in the degenerate
// case where only a shorter record (possibly the empty one, i.e. the
// prior) achieves the maximum, which is then reported as the marker.
struct OptimalSequenceSet {
  int k;
  Rational certainty;  // max over |S| = k of |Pr(phi|S) - 1/2|
  std::vector<OutcomeCounts> attaining;
};

struct MaxCertaintyOptions {
  // Cap on enumerated count profiles across all lengths.
  uint64_t max_profiles = 20'000'000;
  bool collect_attaining = true;
};

// Maximum of |Pr(phi|S) - 1/2| over all test-outcome sequences of
// length exactly k.  Contradictory observations cancel in the
// posterior, so the search enumerates non-contradictory count profiles
// of every length j <= k with j = k (mod 2).
OptimalSequenceSet max_certainty(const TruthTable& tt,
                                 const ProductPrior& prior,
                                 const AccuracyVector& alpha, int k,
                                 const MaxCertaintyOptions& options = {});

struct CplResult {
  bool bounded;
  int k;  // the complexity when bounded, otherwise the search cap
};

// Least k <= k_max with max_certainty(k) > q, strictly.  At q = 1/2 no
// formula passes the strict test and the cap is reported honestly.
CplResult test_complexity(const ComplexitySpec& spec,
                          const MaxCertaintyOptions& options = {});

// Exhaustive cpl sweep over every n-variable table under the uniform
// prior and a uniform accuracy, checking that the n-variable XOR and
// its negation attain the maximum.
struct CplSweep {
  int n;
  Rational q;
  Rational alpha;
  int k_max;
  std::vector<int32_t> cpl;  // indexed by table code; -1 = unbounded
  int32_t xor_cpl;           // cpl of the n-variable XOR (and negation)
  bool xor_is_max;           // XOR and its negation attain the maximum
  std::vector<std::pair<int32_t, uint64_t>> distribution;  // cpl -> count

  int32_t max_cpl() const;
};

struct SweepOptions {
  int jobs = 0;  // 0: IAG_JOBS env var, else the OpenMP default
  MaxCertaintyOptions certainty;
};

// Requires n <= 4 (the sweep is exhaustive over 2^(2^n) tables).
CplSweep xor_maximality_check(int n, const Rational& alpha, const Rational& q,
                              int k_max = 64, const SweepOptions& options = {});
// Serial reference implementation, no symmetry reduction, no threads.
CplSweep xor_maximality_check_serial(int n, const Rational& alpha,
                                     const Rational& q, int k_max = 64,
                                     const MaxCertaintyOptions& options = {});

}  // namespace iag

#endif  // IAG_COMPLEXITY_HPP_
