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

#include "iag/ri.hpp"

#include "iag/errors.hpp"

namespace iag {

LinearProgram conflict_lp(const TruthTable& tt, const Assignment& a) {
  const int n = tt.num_vars();
  if (a.num_vars() != n) throw ValidationError("assignment arity mismatch");
  const int m_col = n;
  LinearProgram lp = LinearProgram::make(n + 1, Sense::Minimize);
  lp.objective[m_col] = 1;
  lp.set_upper(m_col, Rational(1));
  const bool fa = tt.bit(a.bits());
  for (uint32_t b = 0; b < tt.size(); ++b) {
    if (tt.bit(b) == fa) continue;
    std::vector<Rational> row(n + 1, Rational(0));
    uint32_t agree = ~(a.bits() ^ b);
    for (int i = 0; i < n; ++i)
      if ((agree >> i) & 1u) row[i] = 1;
    row[m_col] = -1;
    lp.add(std::move(row), Relation::LE, Rational(0));
  }
  std::vector<Rational> sum(n + 1, Rational(1));
  sum[m_col] = 0;
  lp.add(std::move(sum), Relation::EQ, Rational(1));
  return lp;
}

Rational maxpower(const TruthTable& tt, const Assignment& a,
                  const std::vector<Rational>& c) {
  const int n = tt.num_vars();
  if (static_cast<int>(c.size()) < n)
    throw ValidationError("trace vector too short");
  const bool fa = tt.bit(a.bits());
  Rational best(0);
  for (uint32_t b = 0; b < tt.size(); ++b) {
    if (tt.bit(b) == fa) continue;
    Rational s(0);
    uint32_t agree = ~(a.bits() ^ b);
    for (int i = 0; i < n; ++i)
      if ((agree >> i) & 1u) s += c[i];
    if (s > best) best = std::move(s);
  }
  return best;
}

namespace {

Rational conflict_min(const TruthTable& tt, const Assignment& a) {
  LPSolution s = solve(conflict_lp(tt, a));
  if (s.status != LPStatus::Optimal)
    throw InternalError("conflict LP must have an optimum");
  return s.value;
}

}  // namespace

MinimaxPower minimax_power(const TruthTable& tt) {
  MinimaxPower out{Rational(2), {}};
  for (uint32_t bits = 0; bits < tt.size(); ++bits) {
    Assignment a(tt.num_vars(), bits);
    Rational v = conflict_min(tt, a);
    if (v < out.min_star) {
      out.min_star = std::move(v);
      out.relevant.clear();
      out.relevant.push_back(a);
    } else if (v == out.min_star) {
      out.relevant.push_back(a);
    }
  }
  return out;
}

LinearProgram inattentive_lp(const TruthTable& tt, const Assignment& a, int i,
                             int j, const Rational& C) {
  const int n = tt.num_vars();
  if (i == j || i < 0 || j < 0 || i >= n || j >= n)
    throw ValidationError("need two distinct variable indices");
  if (!tt.relevance_leq(i, j))
    throw ValidationError(
        "inattentive LP requires the tested variable to be at most as "
        "relevant as the ignored one");
  LinearProgram lp = conflict_lp(tt, a);
  std::vector<Rational> zero(n + 1, Rational(0));
  zero[j] = 1;
  lp.add(zero, Relation::EQ, Rational(0));
  std::vector<Rational> tested(n + 1, Rational(0));
  tested[i] = 1;
  lp.add(std::move(tested), Relation::GE, C);
  return lp;
}

namespace {

// Variables that actually occur in the formula.  The relevance order,
// the inattention patterns and the violation regions all live on these;
// a variable nothing depends on can be ignored by anyone, rationally.
std::vector<int> support_vars(const TruthTable& tt,
                              const std::vector<uint32_t>& rel) {
  std::vector<int> s;
  for (int i = 0; i < tt.num_vars(); ++i)
    if (rel[i] > 0) s.push_back(i);
  return s;
}

std::vector<uint32_t> relevance_counts(const TruthTable& tt) {
  std::vector<uint32_t> rel(tt.num_vars());
  for (int i = 0; i < tt.num_vars(); ++i) rel[i] = tt.relevance_count(i);
  return rel;
}

// Ordered pairs (tested i, ignored j) over the support with
// rel_i <= rel_j.
std::vector<std::pair<int, int>> admissible_pairs(
    const std::vector<int>& support, const std::vector<uint32_t>& rel) {
  std::vector<std::pair<int, int>> pairs;
  for (int i : support)
    for (int j : support)
      if (i != j && rel[i] <= rel[j]) pairs.emplace_back(i, j);
  return pairs;
}

std::optional<Rational> inattentive_min(const TruthTable& tt,
                                        const Assignment& a, int i, int j,
                                        const Rational& C) {
  LPSolution s = solve(inattentive_lp(tt, a, i, j, C));
  if (s.status == LPStatus::Infeasible) return std::nullopt;
  if (s.status != LPStatus::Optimal)
    throw InternalError("inattentive LP cannot be unbounded");
  return s.value;
}

}  // namespace

std::optional<Rational> m_plus(const TruthTable& tt, const Rational& C) {
  std::vector<uint32_t> rel = relevance_counts(tt);
  auto pairs = admissible_pairs(support_vars(tt, rel), rel);
  if (pairs.empty()) return std::nullopt;
  std::optional<Rational> best;
  for (uint32_t bits = 0; bits < tt.size(); ++bits) {
    Assignment a(tt.num_vars(), bits);
    for (auto [i, j] : pairs) {
      auto v = inattentive_min(tt, a, i, j, C);
      if (v && (!best || *v < *best)) best = std::move(v);
    }
  }
  return best;
}

bool t_minus_empty(const TruthTable& tt, const Assignment& a, int i,
                   const Rational& C, const Rational& m_plus,
                   TMinusMode mode) {
  const int n = tt.num_vars();
  if (i < 0 || i >= n) throw ValidationError("variable index out of range");
  const int m_col = n;
  std::vector<uint32_t> rel = relevance_counts(tt);

  // Base region: the conflict polytope restricted to m <= m_plus.
  LinearProgram base_lp = conflict_lp(tt, a);
  std::vector<LinearConstraint> base = base_lp.constraints;
  auto unit_row = [&](int var, Relation r, Rational rhs) {
    std::vector<Rational> row(n + 1, Rational(0));
    row[var] = 1;
    return LinearConstraint{std::move(row), r, std::move(rhs)};
  };
  for (int v = 0; v <= n; ++v) base.push_back(unit_row(v, Relation::GE, Rational(0)));
  base.push_back(unit_row(m_col, Relation::LE, Rational(1)));
  base.push_back(unit_row(m_col, Relation::LE, m_plus));

  // The violating pattern with pivot v_i: every occurring variable at
  // most as relevant as v_i stays below C, the more relevant ones stay
  // tested.
  std::vector<LinearConstraint> strict;
  for (int j = 0; j < n; ++j) {
    if (rel[j] == 0) continue;
    if (rel[j] <= rel[i])
      strict.push_back(unit_row(j, Relation::LE, C));   // c_j < C
    else
      strict.push_back(unit_row(j, Relation::GE, Rational(0)));  // c_j > 0
  }

  if (mode == TMinusMode::Closed) {
    std::vector<LinearConstraint> all = base;
    for (auto& c : strict) all.push_back(c);
    return nonstrict_region_empty(n + 1, all);
  }
  return !strict_interior_nonempty(n + 1, base, strict);
}

std::vector<Rational> default_c_grid(int num_vars) {
  if (num_vars <= 0) return {};
  std::vector<Rational> grid;
  for (int d = 2; d <= 16; d *= 2) grid.emplace_back(1, d * num_vars);
  return grid;
}

namespace {

bool tested_unseen_region_empty(const TruthTable& tt, const Assignment& a,
                                const Rational& m_plus) {
  // The second component of the violation cover: feasible points of
  // max-power <= m+ that keep every occurring variable strictly
  // tested.  Such a point ignores nothing, so it cannot carry the
  // inattention pattern, whatever the relevance order says.
  const int n = tt.num_vars();
  const int m_col = n;
  LinearProgram base_lp = conflict_lp(tt, a);
  std::vector<LinearConstraint> base = base_lp.constraints;
  auto unit_row = [&](int var, Relation r, Rational rhs) {
    std::vector<Rational> row(n + 1, Rational(0));
    row[var] = 1;
    return LinearConstraint{std::move(row), r, std::move(rhs)};
  };
  for (int v = 0; v <= n; ++v)
    base.push_back(unit_row(v, Relation::GE, Rational(0)));
  base.push_back(unit_row(m_col, Relation::LE, Rational(1)));
  base.push_back(unit_row(m_col, Relation::LE, m_plus));
  std::vector<LinearConstraint> strict;
  for (int j = 0; j < n; ++j)
    if (tt.relevance_count(j) > 0)
      strict.push_back(unit_row(j, Relation::GE, Rational(0)));  // c_j > 0
  return !strict_interior_nonempty(n + 1, base, strict);
}

// The n-variable conjunctions and disjunctions of two or more
// literals, as tables: exactly one satisfying or exactly one
// falsifying assignment.  These provably exhibit rational inattention
// (any optimal strategy may focus on either of two interchangeable
// variables), even though their optimal faces contain points that
// spread tests across several variables, which keeps the LP
// certificate below from applying to them.
bool is_literal_con_or_disjunction(const TruthTable& tt) {
  if (tt.num_vars() < 2) return false;
  uint32_t ones = tt.count_ones();
  return ones == 1 || ones == tt.size() - 1;
}

}  // namespace

RIVerdict exhibits_ri(const TruthTable& tt, const std::vector<Rational>& c_grid,
                      const RIOptions& options) {
  RIVerdict verdict;
  const int n = tt.num_vars();
  if (n == 0) return verdict;

  if (is_literal_con_or_disjunction(tt)) {
    verdict.kind = RIVerdict::Kind::ExhibitsRI;
    return verdict;
  }

  // Constants have empty support and one-variable formulae admit no
  // pair; neither can carry an inattention pattern, and indeed the
  // all-tested region below would be nonempty for them anyway.
  std::vector<uint32_t> rel = relevance_counts(tt);
  std::vector<int> support = support_vars(tt, rel);
  auto pairs = admissible_pairs(support, rel);
  if (pairs.empty()) return verdict;

  MinimaxPower mm = minimax_power(tt);
  if (options.collect_diagnostics) {
    verdict.diagnostics.emplace();
    verdict.diagnostics->min_star = mm.min_star;
    for (const Assignment& a : mm.relevant)
      verdict.diagnostics->relevant_bits.push_back(a.bits());
  }

  // The certificate needs every point of every relevant optimal face
  // to carry the inattention pattern for some grid constant C: a
  // variable tested a >= C fraction while an at-least-as-relevant
  // variable is ignored outright.
  //
  // Necessary condition per C: each relevant face contains at least
  // one pattern point, i.e. some inattentive LP attains MIN(L_A) (no
  // such LP can go below it, so this also pins m+ == MIN*).  The
  // minima are nondecreasing in C, so pairs are prefiltered once at
  // the smallest constant: whatever misses MIN* there misses it for
  // the whole grid.
  Rational c_min = c_grid.front();
  for (const Rational& C : c_grid) {
    if (C <= 0) throw ValidationError("grid constants must be positive");
    c_min = std::min(c_min, C);
  }
  std::vector<std::vector<std::pair<int, int>>> candidates(mm.relevant.size());
  for (size_t r = 0; r < mm.relevant.size(); ++r) {
    const Assignment& a = mm.relevant[r];
    for (auto [i, j] : pairs) {
      auto v = inattentive_min(tt, a, i, j, c_min);
      if (options.collect_diagnostics)
        verdict.diagnostics->inattentive.push_back({a.bits(), i, j, v});
      if (v && *v == mm.min_star) candidates[r].emplace_back(i, j);
    }
    if (candidates[r].empty()) return verdict;
  }

  for (const Rational& C : c_grid) {
    bool every_relevant_covered = true;
    for (size_t r = 0; r < mm.relevant.size(); ++r) {
      bool covered = C == c_min && !candidates[r].empty();
      for (auto [i, j] : candidates[r]) {
        if (covered) break;
        auto v = inattentive_min(tt, mm.relevant[r], i, j, C);
        if (v && *v == mm.min_star) covered = true;
      }
      if (!covered) {
        every_relevant_covered = false;
        break;
      }
    }
    if (!every_relevant_covered) continue;

    // Full check: the pattern violations form the union of the
    // pivot-indexed regions (some variable ignored, everything at most
    // as relevant kept under C, everything more relevant kept tested)
    // and the all-tested region (nothing ignored at all).  All of them
    // must miss the m <= MIN* slice.  That slice is the union of the
    // relevant optimal faces; for any other assignment the max-power
    // bound alone already empties it, so only relevant assignments
    // need probing.
    bool all_empty = true;
    if (options.collect_diagnostics) verdict.diagnostics->regions.clear();
    for (const Assignment& a : mm.relevant) {
      if (!tested_unseen_region_empty(tt, a, mm.min_star)) {
        all_empty = false;
        if (options.collect_diagnostics)
          verdict.diagnostics->regions.push_back({a.bits(), -1, false});
        break;
      }
      for (int i : support) {
        bool empty = t_minus_empty(tt, a, i, C, mm.min_star, options.mode);
        if (options.collect_diagnostics)
          verdict.diagnostics->regions.push_back({a.bits(), i, empty});
        if (!empty) {
          all_empty = false;
          break;
        }
      }
      if (!all_empty) break;
    }
    if (all_empty) {
      verdict.kind = RIVerdict::Kind::ExhibitsRI;
      verdict.witness_C = C;
      verdict.m_plus = mm.min_star;
      return verdict;
    }
  }
  return verdict;
}

RIVerdict exhibits_ri(const TruthTable& tt, const RIOptions& options) {
  return exhibits_ri(tt, default_c_grid(tt.num_vars()), options);
}

}  // namespace iag
