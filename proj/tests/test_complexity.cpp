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

#include <doctest.h>

#include <bit>
#include <random>
#include "iag/complexity.hpp"
#include "iag/formula.hpp"
#include "oracles.hpp"

using namespace iag;

namespace {

Rational R(long num, long den = 1) { return Rational(num, den); }

const Rational kQ(15, 34);  // threshold of payoffs (1, -16)

int cpl(const TruthTable& tt, const Rational& q, int k_max = 64) {
  ComplexitySpec spec(tt, ProductPrior::uniform(tt.num_vars()),
                      AccuracyVector::uniform(tt.num_vars(), R(1, 4)), q,
                      k_max);
  CplResult r = test_complexity(spec);
  REQUIRE(r.bounded);
  return r.k;
}

Rational cert(const TruthTable& tt, int k) {
  return max_certainty(tt, ProductPrior::uniform(tt.num_vars()),
                       AccuracyVector::uniform(tt.num_vars(), R(1, 4)), k)
      .certainty;
}

}  // namespace

TEST_CASE("spec construction") {
  TruthTable v1 = table_from_text("v1", 2);
  CHECK_THROWS_AS(ComplexitySpec(v1, ProductPrior::uniform(2),
                                 AccuracyVector::uniform(2, R(1, 4)), R(0)),
                  ValidationError);
  CHECK_THROWS_AS(ComplexitySpec(v1, ProductPrior::uniform(2),
                                 AccuracyVector::uniform(2, R(1, 4)), R(2, 3)),
                  ValidationError);
  CHECK_THROWS_AS(ComplexitySpec(v1, ProductPrior::uniform(1),
                                 AccuracyVector::uniform(2, R(1, 4)), kQ),
                  ValidationError);
}

TEST_CASE("certainty of short test budgets") {
  TruthTable v1 = table_from_text("v1", 2);
  CHECK(cert(v1, 2) == R(2, 5));
  CHECK(cert(v1, 3) == R(13, 28));
  CHECK(cert(v1, 0) == 0);

  OptimalSequenceSet s =
      max_certainty(table_from_text("v1|v2", 2), ProductPrior::uniform(2),
                    AccuracyVector::uniform(2, R(1, 4)), 2);
  CHECK(s.certainty == R(9, 20));  // 19/20 - 1/2
  REQUIRE(s.attaining.size() == 2);
  // attained by hammering either variable twice
  for (const OutcomeCounts& c : s.attaining) {
    CHECK(c.total() == 2);
    CHECK((c.t(0) == 2 || c.t(1) == 2));
  }

  // constants sit at certainty 1/2 immediately
  CHECK(cert(TruthTable::constant(2, true), 0) == R(1, 2));
}

TEST_CASE("worked test complexities") {
  CHECK(cpl(TruthTable::constant(2, true), kQ) == 0);
  CHECK(cpl(table_from_text("v1", 2), kQ) == 3);
  CHECK(cpl(table_from_text("v1^v2", 2), kQ) == 7);
  CHECK(cpl(table_from_text("v1|v2", 2), kQ) == 2);
}

TEST_CASE("three and five variable cross checks") {
  CHECK(cpl(TruthTable::xor_all(3), R(1, 3)) == 8);

  // majority of five: four agreeing tests of four distinct variables
  TruthTable maj(5);
  for (uint32_t a = 0; a < 32; ++a)
    if (std::popcount(a) >= 3) maj.set_bit(a, true);
  CHECK(cpl(maj, R(1, 3), 8) == 4);
  OptimalSequenceSet s = max_certainty(maj, ProductPrior::uniform(5),
                                       AccuracyVector::uniform(5, R(1, 4)), 4);
  CHECK(s.certainty == R(11, 32));
  CHECK(s.attaining.size() == 10);  // C(5,4) variable picks x 2 polarities
}

TEST_CASE("certainty is monotone in the budget") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<uint64_t> code(0, 255);
  std::uniform_int_distribution<int> num(1, 5);
  for (int trial = 0; trial < 15; ++trial) {
    int n = 1 + trial % 3;
    TruthTable tt =
        TruthTable::from_bits(n, code(rng) & ((1u << (1 << n)) - 1));
    std::vector<Rational> p, al;
    for (int i = 0; i < n; ++i) {
      p.emplace_back(num(rng), 6);
      al.emplace_back(num(rng) - 1, 12);
    }
    ProductPrior prior(p);
    AccuracyVector alpha(al);
    Rational prev(-1);
    for (int k = 0; k <= 5; ++k) {
      Rational c = max_certainty(tt, prior, alpha, k).certainty;
      CHECK(c >= prev);
      prev = c;
    }
  }
}

TEST_CASE("count enumeration matches the ordered-sequence oracle") {
  // The profile enumeration must agree with brute force over all
  // (2n)^k ordered sequences, contradictory ones included.
  std::mt19937 rng(32);
  std::uniform_int_distribution<uint64_t> code(0, 255);
  for (int trial = 0; trial < 10; ++trial) {
    int n = 1 + trial % 2;
    TruthTable tt =
        TruthTable::from_bits(n, code(rng) & ((1u << (1 << n)) - 1));
    ProductPrior prior = ProductPrior::uniform(n);
    AccuracyVector alpha =
        AccuracyVector::uniform(n, trial % 2 ? R(1, 4) : R(1, 6));
    for (int k = 0; k <= 4; ++k) {
      CHECK(max_certainty(tt, prior, alpha, k).certainty ==
            oracle::brute_force_certainty(tt, prior, alpha, k));
    }
  }
}

TEST_CASE("complexity is complement symmetric") {
  for (int code = 0; code < 256; ++code) {
    TruthTable t = TruthTable::from_bits(3, code);
    ComplexitySpec a(t, ProductPrior::uniform(3),
                     AccuracyVector::uniform(3, R(1, 4)), kQ, 16);
    ComplexitySpec b(t.complement(), ProductPrior::uniform(3),
                     AccuracyVector::uniform(3, R(1, 4)), kQ, 16);
    CplResult ra = test_complexity(a), rb = test_complexity(b);
    CHECK(ra.bounded == rb.bounded);
    CHECK(ra.k == rb.k);
  }
}

TEST_CASE("antisymmetrisation never lowers complexity") {
  // Exhaustive at n <= 3 under the uniform prior.
  for (int n = 1; n <= 3; ++n) {
    for (int code = 0; code < (1 << (1 << n)); ++code) {
      TruthTable t = TruthTable::from_bits(n, code);
      int base = cpl(t, kQ, 32);
      for (int v = 0; v < n; ++v)
        CHECK(cpl(t.antisymmetrize(v), kQ, 32) >= base);
    }
  }
}

TEST_CASE("per-length domination bounds complexity") {
  // If phi's best certainty at every budget dominates psi's up to
  // cpl(psi), then cpl(phi) <= cpl(psi).
  std::mt19937 rng(33);
  std::uniform_int_distribution<uint64_t> code(0, 255);
  int checked = 0;
  for (int trial = 0; trial < 80 && checked < 12; ++trial) {
    TruthTable phi = TruthTable::from_bits(3, code(rng));
    TruthTable psi = TruthTable::from_bits(3, code(rng));
    ProductPrior prior = ProductPrior::uniform(3);
    AccuracyVector alpha = AccuracyVector::uniform(3, R(1, 4));
    ComplexitySpec spec_psi(psi, prior, alpha, kQ, 12);
    CplResult rp = test_complexity(spec_psi);
    if (!rp.bounded) continue;
    bool dominates = true;
    for (int k = 0; k <= rp.k && dominates; ++k)
      dominates = max_certainty(phi, prior, alpha, k).certainty >=
                  max_certainty(psi, prior, alpha, k).certainty;
    if (!dominates) continue;
    ++checked;
    ComplexitySpec spec_phi(phi, prior, alpha, kQ, 12);
    CplResult rf = test_complexity(spec_phi);
    REQUIRE(rf.bounded);
    CHECK(rf.k <= rp.k);
  }
  CHECK(checked > 0);
}

TEST_CASE("xor maximality sweeps") {
  CplSweep sweep = xor_maximality_check(2, R(1, 4), kQ);
  CHECK(sweep.xor_cpl == 7);
  CHECK(sweep.xor_is_max);
  CHECK(sweep.max_cpl() == 7);
  CHECK(sweep.cpl[0b0110] == 7);   // XOR
  CHECK(sweep.cpl[0b1001] == 7);   // XNOR
  CHECK(sweep.cpl[0b0111] == 2);   // disjunction
  CHECK(sweep.cpl[0b1111] == 0);   // constant
  uint64_t total = 0;
  for (auto [value, count] : sweep.distribution) total += count;
  CHECK(total == 16);

  // n=1: the XOR family is just the two literals.
  CplSweep one = xor_maximality_check(1, R(1, 4), kQ);
  CHECK(one.xor_is_max);
  CHECK(one.xor_cpl == 3);
}

TEST_CASE("parallel sweep equals the serial reference") {
  CplSweep serial = xor_maximality_check_serial(2, R(1, 4), R(1, 3));
  SweepOptions opts;
  for (int jobs : {1, 2, 3}) {
    opts.jobs = jobs;
    CplSweep parallel = xor_maximality_check(2, R(1, 4), R(1, 3), 64, opts);
    CHECK(parallel.cpl == serial.cpl);
    CHECK(parallel.xor_cpl == serial.xor_cpl);
  }
}

TEST_CASE("enumeration cap is enforced") {
  MaxCertaintyOptions opts;
  opts.max_profiles = 5;
  CHECK_THROWS_AS(max_certainty(table_from_text("v1|v2", 2),
                                ProductPrior::uniform(2),
                                AccuracyVector::uniform(2, R(1, 4)), 6, opts),
                  ResourceError);
}

TEST_CASE("q at one half reports the cap honestly") {
  ComplexitySpec spec(table_from_text("v1|v2", 2), ProductPrior::uniform(2),
                      AccuracyVector::uniform(2, R(1, 4)), R(1, 2), 6);
  CplResult r = test_complexity(spec);
  CHECK_FALSE(r.bounded);
  CHECK(r.k == 6);
}
