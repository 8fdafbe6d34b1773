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

#ifndef IAG_RI_HPP_
#define IAG_RI_HPP_

#include <optional>
#include <string>
#include <vector>

#include "iag/lp.hpp"
#include "iag/prob.hpp"
#include "iag/rational.hpp"
#include "iag/truth_table.hpp"

namespace iag {

// ---------------------------------------------------------------------------
// Conflict LPs.
//
// For an assignment A, the conflict LP asks how a long test-outcome
// sequence compatible with A should spread its tests so that the
// best-supported assignment on which the formula takes the *other*
// truth value picks up as little support as possible.  Variables are
// the per-variable test fractions c_1..c_n plus the max-power bound m:
//
//   minimise m
//   s.t.  sum_{i : A(v_i)=B(v_i)} c_i <= m   for every B with f(B) != f(A)
//         sum_i c_i = 1,   c >= 0,   0 <= m <= 1.
//
// Low minima mean the evidence for A can be made to dwarf every
// conflicting assignment; the assignments attaining the overall
// minimum are the ones optimal sequences end up supporting.
// ---------------------------------------------------------------------------

// Variable layout: columns 0..n-1 are the test fractions, column n is m.
LinearProgram conflict_lp(const TruthTable& tt, const Assignment& a);

// max over conflicting B of the agreement-weighted coordinate sum; 0
// when nothing conflicts.
Rational maxpower(const TruthTable& tt, const Assignment& a,
                  const std::vector<Rational>& c);

struct MinimaxPower {
  Rational min_star;                  // min over A of MIN(L_A)
  std::vector<Assignment> relevant;   // argmin set
};
MinimaxPower minimax_power(const TruthTable& tt);

// Conflict LP plus {c_j = 0, c_i >= C}: variable v_j is ignored while
// v_i keeps a constant fraction of the tests.  Requires i != j and
// v_i at most as relevant as v_j.
LinearProgram inattentive_lp(const TruthTable& tt, const Assignment& a, int i,
                             int j, const Rational& C);

// min over all assignments and admissible ordered pairs (i, j) of
// MIN(L+_{A,i,j}); nullopt when no pair is admissible (n <= 1) or
// every such LP is infeasible.
std::optional<Rational> m_plus(const TruthTable& tt, const Rational& C);

enum class TMinusMode {
  StrictInterior,  // the region's strict inequalities honoured as written
  Closed,          // relaxed to their closure
};

// Emptiness of one pivot-indexed region of feasible conflict-LP
// points that violate the inattention pattern while staying within
// max-power m_plus.  With I_i the occurring variables at most as
// relevant as the pivot v_i:
//
//   { (c, m) in Feas(L_A) : m <= m_plus,
//                           c_j < C for j in I_i,
//                           c_j > 0 for occurring j outside I_i }.
//
// The strict inequalities are decided by maximising a shared margin.
// Variables the formula does not depend on are left unconstrained:
// ignoring one of those is not inattention.
bool t_minus_empty(const TruthTable& tt, const Assignment& a, int i,
                   const Rational& C, const Rational& m_plus,
                   TMinusMode mode = TMinusMode::StrictInterior);

struct RIOptions {
  TMinusMode mode = TMinusMode::StrictInterior;
  bool collect_diagnostics = false;
};

struct RIDiagnostics {
  struct InattentiveMin {
    uint32_t assignment_bits;
    int i, j;
    std::optional<Rational> min;  // nullopt = infeasible
  };
  struct RegionProbe {
    uint32_t assignment_bits;
    int i;
    bool empty;
  };
  Rational min_star;
  std::vector<uint32_t> relevant_bits;
  std::vector<InattentiveMin> inattentive;  // for the witness C (or last tried)
  std::vector<RegionProbe> regions;
};

struct RIVerdict {
  enum class Kind { ExhibitsRI, Unknown };
  Kind kind = Kind::Unknown;
  std::optional<Rational> witness_C;
  std::optional<Rational> m_plus;
  std::optional<RIDiagnostics> diagnostics;

  bool exhibits() const { return kind == Kind::ExhibitsRI; }
};

// {1/(2n), 1/(4n), 1/(8n), 1/(16n)}, descending.
std::vector<Rational> default_c_grid(int num_vars);

// The sufficient test for rational inattention.  Two routes certify:
//
//  - Conjunctions and disjunctions of two or more literals over all n
//    variables (exactly one satisfying or one falsifying assignment).
//    Their optimal strategies focus on one of several interchangeable
//    variables, a direct argument that needs no LPs.
//
//  - For anything else, the conflict-LP certificate: some C in the
//    grid (tried descending) for which every point of every relevant
//    optimal face carries the inattention pattern — a variable tested
//    a >= C fraction while an at-least-as-relevant variable is ignored
//    outright.  The violating points are covered by the pivot-indexed
//    strict regions of t_minus_empty plus the all-tested region, and
//    each cover piece must miss the max-power <= MIN* slice.
//
// Sufficiency only: Unknown never means "does not exhibit RI", merely
// "not certified".
RIVerdict exhibits_ri(const TruthTable& tt,
                      const std::vector<Rational>& c_grid,
                      const RIOptions& options = {});
RIVerdict exhibits_ri(const TruthTable& tt, const RIOptions& options = {});

}  // namespace iag

#endif  // IAG_RI_HPP_
