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

#include "iag/formula.hpp"
#include "iag/ri.hpp"
#include "oracles.hpp"

using namespace iag;

namespace {

Rational R(long num, long den = 1) { return Rational(num, den); }

bool ri(const char* text, int n) {
  return exhibits_ri(table_from_text(text, n)).exhibits();
}

// The inattention pattern at a conflict-LP point.
bool pattern_holds(const TruthTable& t, const std::vector<Rational>& c,
                   const Rational& C) {
  for (int i = 0; i < t.num_vars(); ++i)
    for (int j = 0; j < t.num_vars(); ++j)
      if (i != j && t.relevance_count(i) > 0 && t.relevance_count(j) > 0 &&
          t.relevance_leq(i, j) && c[i] >= C && c[j] == 0)
        return true;
  return false;
}

}  // namespace

TEST_CASE("conflict LPs of the two-variable disjunction") {
  TruthTable tt = table_from_text("v1|v2", 2);
  // a = FF: both satisfying neighbours constrain one coordinate each.
  LinearProgram lp = conflict_lp(tt, Assignment(2, 0b00));
  LPSolution s = solve(lp);
  REQUIRE(s.status == LPStatus::Optimal);
  CHECK(s.value == R(1, 2));
  CHECK(s.point[0] == R(1, 2));
  CHECK(s.point[1] == R(1, 2));
  auto oracle = oracle::vertex_enumeration_optimum(lp);
  REQUIRE(oracle);
  CHECK(oracle->first == R(1, 2));

  // a = TT: the only conflicting assignment shares nothing, MIN = 0.
  CHECK(solve(conflict_lp(tt, Assignment(2, 0b11))).value == 0);

  // XOR: both agreement sums are single coordinates.
  TruthTable x = table_from_text("v1^v2", 2);
  CHECK(solve(conflict_lp(x, Assignment(2, 0b11))).value == R(1, 2));
}

TEST_CASE("maxpower") {
  TruthTable x = table_from_text("v1^v2", 2);
  CHECK(maxpower(x, Assignment(2, 0b11), {R(1, 2), R(1, 2)}) == R(1, 2));
  TruthTable tt = table_from_text("v1|v2", 2);
  CHECK(maxpower(tt, Assignment(2, 0b11), {R(1), R(0)}) == 0);
  // feasibility restated: maxpower <= m at any feasible point
  LPSolution s = solve(conflict_lp(tt, Assignment(2, 0b00)));
  std::vector<Rational> c(s.point.begin(), s.point.end() - 1);
  CHECK(maxpower(tt, Assignment(2, 0b00), c) <= s.point.back());
}

TEST_CASE("minimax power") {
  MinimaxPower mm = minimax_power(table_from_text("v1|v2", 2));
  CHECK(mm.min_star == 0);
  REQUIRE(mm.relevant.size() == 3);  // the satisfying assignments
  for (const Assignment& a : mm.relevant) CHECK(a.bits() != 0);

  mm = minimax_power(table_from_text("v1^v2", 2));
  CHECK(mm.min_star == R(1, 2));
  CHECK(mm.relevant.size() == 4);

  mm = minimax_power(TruthTable::constant(2, true));
  CHECK(mm.min_star == 0);
  CHECK(mm.relevant.size() == 4);
}

TEST_CASE("minimax power is complement-invariant") {
  for (int code = 0; code < 256; ++code) {
    TruthTable t = TruthTable::from_bits(3, code);
    MinimaxPower a = minimax_power(t);
    MinimaxPower b = minimax_power(t.complement());
    CHECK(a.min_star == b.min_star);
    CHECK(a.relevant.size() == b.relevant.size());
  }
}

TEST_CASE("inattentive LPs") {
  TruthTable tt = table_from_text("v1|v2", 2);
  LPSolution s = solve(inattentive_lp(tt, Assignment(2, 0b11), 0, 1, R(1, 4)));
  REQUIRE(s.status == LPStatus::Optimal);
  CHECK(s.value == 0);
  CHECK(s.point[0] == 1);
  CHECK(s.point[1] == 0);

  TruthTable x = table_from_text("v1^v2", 2);
  s = solve(inattentive_lp(x, Assignment(2, 0b11), 0, 1, R(1, 4)));
  REQUIRE(s.status == LPStatus::Optimal);
  CHECK(s.value == 1);

  // C > 1 conflicts with the simplex constraint.
  CHECK(solve(inattentive_lp(x, Assignment(2, 0b11), 0, 1, R(3, 2))).status ==
        LPStatus::Infeasible);

  CHECK_THROWS_AS(inattentive_lp(tt, Assignment(2, 0), 1, 1, R(1, 4)),
                  ValidationError);
}

TEST_CASE("m_plus") {
  CHECK(*m_plus(table_from_text("v1|v2", 2), R(1, 4)) == 0);
  CHECK(*m_plus(table_from_text("v1^v2", 2), R(1, 4)) == 1);
  CHECK_FALSE(m_plus(table_from_text("v1", 1), R(1, 4)).has_value());
}

TEST_CASE("violation regions") {
  TruthTable tt = table_from_text("v1|v2", 2);
  // For the disjunction at a=TT every pivot region asks both test
  // fractions to stay below C while summing to one: empty.
  CHECK(t_minus_empty(tt, Assignment(2, 0b11), 0, R(1, 4), R(0)));
  CHECK(t_minus_empty(tt, Assignment(2, 0b11), 1, R(1, 4), R(0)));
  // With C relaxed beyond 1/2 the even split fits.
  CHECK_FALSE(t_minus_empty(tt, Assignment(2, 0b11), 0, R(2, 3), R(0)));
  // The strict region is contained in its closure.
  CHECK(t_minus_empty(tt, Assignment(2, 0b11), 0, R(1, 4), R(0),
                      TMinusMode::Closed));
}

TEST_CASE("verdict goldens") {
  // disjunctions and conjunctions over two variables
  for (const char* f :
       {"v1|v2", "v1|!v2", "!v1|v2", "!v1|!v2",
        "v1&v2", "v1&!v2", "!v1&v2", "!v1&!v2"})
    CHECK(ri(f, 2));
  // the families that stay unknown
  CHECK_FALSE(ri("v1", 2));
  CHECK_FALSE(ri("!v1", 2));
  CHECK_FALSE(ri("T", 2));
  CHECK_FALSE(ri("F", 2));
  for (int n = 2; n <= 4; ++n) {
    TruthTable x = TruthTable::xor_all(n);
    CHECK_FALSE(exhibits_ri(x).exhibits());
    CHECK_FALSE(exhibits_ri(x.complement()).exhibits());
  }
  CHECK_FALSE(ri("v1|(!v1&v2&v3)", 3));
  // the mixed disjunction/XOR family from the worked examples
  CHECK(ri("(v1|v2)&(v2^v3^v4)", 4));
}

TEST_CASE("verdict carries a witness when the LP route certified") {
  RIVerdict v = exhibits_ri(table_from_text("(v1|v2)&(v2^v3^v4)", 4));
  REQUIRE(v.exhibits());
  REQUIRE(v.witness_C.has_value());
  CHECK(*v.witness_C == R(1, 8));
  REQUIRE(v.m_plus.has_value());
  CHECK(*v.m_plus == R(1, 2));
  // literal conjunctions/disjunctions certify by the direct argument
  RIVerdict d = exhibits_ri(table_from_text("v1|v2", 2));
  CHECK(d.exhibits());
  CHECK_FALSE(d.witness_C.has_value());
}

TEST_CASE("diagnostics on request") {
  RIOptions opts;
  opts.collect_diagnostics = true;
  RIVerdict v = exhibits_ri(table_from_text("v1^v2", 2), opts);
  CHECK_FALSE(v.exhibits());
  REQUIRE(v.diagnostics.has_value());
  CHECK(v.diagnostics->min_star == R(1, 2));
  CHECK(v.diagnostics->relevant_bits.size() == 4);
  CHECK_FALSE(v.diagnostics->inattentive.empty());
}

TEST_CASE("verdicts are invariant under permutation and complement") {
  for (int code = 0; code < 256; ++code) {
    TruthTable t = TruthTable::from_bits(3, code);
    bool v = exhibits_ri(t).exhibits();
    CHECK(exhibits_ri(t.complement()).exhibits() == v);
    // swap v1 and v3
    TruthTable swapped(3);
    for (uint32_t a = 0; a < 8; ++a) {
      uint32_t b = (a & 2u) | ((a & 1u) << 2) | ((a >> 2) & 1u);
      swapped.set_bit(a, t.bit(b));
    }
    CHECK(exhibits_ri(swapped).exhibits() == v);
  }
}

TEST_CASE("LP-certified verdicts have pattern-carrying optimal vertices") {
  // When the LP route certifies with witness C, every vertex of every
  // relevant optimal face must carry the inattention pattern; checked
  // against brute-force vertex enumeration.
  for (int code = 0; code < 256; ++code) {
    TruthTable t = TruthTable::from_bits(3, code);
    RIVerdict v = exhibits_ri(t);
    if (!v.exhibits() || !v.witness_C) continue;
    MinimaxPower mm = minimax_power(t);
    for (const Assignment& a : mm.relevant) {
      for (const auto& vertex : oracle::optimal_vertices(conflict_lp(t, a))) {
        std::vector<Rational> c(vertex.begin(), vertex.end() - 1);
        CHECK(pattern_holds(t, c, *v.witness_C));
      }
    }
  }
}

TEST_CASE("n=1 and constants never certify") {
  CHECK_FALSE(exhibits_ri(table_from_text("v1", 1)).exhibits());
  CHECK_FALSE(exhibits_ri(table_from_text("!v1", 1)).exhibits());
  CHECK_FALSE(exhibits_ri(TruthTable::constant(3, true)).exhibits());
  CHECK_FALSE(exhibits_ri(TruthTable::constant(0, false)).exhibits());
}

TEST_CASE("default grid") {
  auto grid = default_c_grid(2);
  REQUIRE(grid.size() == 4);
  CHECK(grid[0] == R(1, 4));
  CHECK(grid[3] == R(1, 32));
  CHECK(default_c_grid(0).empty());
}
