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

#ifndef IAG_GAME_HPP_
#define IAG_GAME_HPP_

#include <functional>
#include <unordered_map>
#include <vector>

#include "iag/prob.hpp"
#include "iag/rational.hpp"
#include "iag/truth_table.hpp"

namespace iag {

// Full parameter set of one information-acquisition game: formula,
// prior, test budget, accuracies and payoffs.
struct GameSpec {
  TruthTable tt;
  ProductPrior prior;
  int budget;  // k >= 0
  AccuracyVector alpha;
  Payoffs payoffs;

  GameSpec(TruthTable t, ProductPrior pr, int k, AccuracyVector al, Payoffs po);
  int num_vars() const { return tt.num_vars(); }
};

// A pure strategy over canonical histories: which variable to test
// after each partial record, and what to do after a full record.
// Posteriors depend on a history only through its OutcomeCounts, so
// this domain loses nothing against order-sensitive strategies.
struct Strategy {
  std::unordered_map<OutcomeCounts, int, OutcomeCountsHash> tests;
  std::unordered_map<OutcomeCounts, Action, OutcomeCountsHash> actions;
};

// Pr(next observation of v_i is `value` | history) under the
// posterior over assignments.
Rational outcome_probability(const GameSpec& game, const OutcomeCounts& counts,
                             int var, bool value);

struct SolveOptions {
  // Cap on distinct canonical histories the solver may visit.
  size_t max_states = 5'000'000;
};

struct SolveResult {
  Rational value;
  Strategy strategy;
  size_t states_visited;
};

// Optimal expected payoff by backward induction over canonical
// histories.  Ties between test variables break toward the lowest
// index; final actions follow best_action's deterministic rule.
Rational optimal_value(const GameSpec& game, const SolveOptions& opts = {});
SolveResult optimal_strategy(const GameSpec& game,
                             const SolveOptions& opts = {});

// Exact expected payoff of a fixed strategy.  Throws if the strategy
// is undefined at a reachable history.
Rational evaluate_strategy(const GameSpec& game, const Strategy& strategy,
                           const SolveOptions& opts = {});

// Exact expected payoff under a test policy given as a function, with
// best_action played at the leaves.
Rational policy_value(const GameSpec& game,
                      const std::function<int(const OutcomeCounts&)>& pick,
                      const SolveOptions& opts = {});

// The heuristic that tests a uniformly random variable at every step
// and plays best_action at the end.  Exact expectation (no sampling).
Rational random_test_value(const GameSpec& game, const SolveOptions& opts = {});

// Seeded Monte-Carlo estimate of the same quantity, for CLI
// cross-checks only.  Returns a double on purpose: it is an estimate.
double random_test_value_mc(const GameSpec& game, uint64_t seed,
                            uint64_t rounds);

// Tests each variable exactly k/n times (requires n | k), then plays
// best_action.
Rational uniform_split_value(const GameSpec& game,
                             const SolveOptions& opts = {});

// Helper strategies used by the CLI and tests.

// Tests `var` at every step; best_action at the end.
Strategy always_test(const GameSpec& game, int var);
// Tests variables round-robin in index order; best_action at the end.
Strategy round_robin(const GameSpec& game);
// Tests var 0 then var 1 (k = 2) and guesses T iff both observations
// were T; no guess otherwise.
Strategy test_both_guess_tt(const GameSpec& game);
// Tests `var` twice (k = 2) and guesses T iff both observations were T.
Strategy test_twice_guess_tt(const GameSpec& game, int var);

}  // namespace iag

#endif  // IAG_GAME_HPP_
