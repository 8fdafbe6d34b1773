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

#include "iag/game.hpp"

#include <random>

#include "iag/errors.hpp"

namespace iag {

GameSpec::GameSpec(TruthTable t, ProductPrior pr, int k, AccuracyVector al,
                   Payoffs po)
    : tt(std::move(t)), prior(std::move(pr)), budget(k), alpha(std::move(al)),
      payoffs(std::move(po)) {
  if (budget < 0) throw ValidationError("test budget must be nonnegative");
  if (prior.num_vars() != tt.num_vars() || alpha.num_vars() != tt.num_vars())
    throw ValidationError("prior/accuracy arity must match the formula");
  if (tt.num_vars() == 0 && budget > 0)
    throw ValidationError("no variables to test");
}

namespace {

// C(k+2n, 2n): the exact count of canonical histories the exhaustive
// solvers visit.  Checked up front so a hopeless budget fails fast
// instead of after millions of states.
Integer full_state_bound(int n, int k) {
  Integer bound = 1;
  for (int i = 1; i <= 2 * n; ++i) {
    bound *= k + i;
    bound /= i;
  }
  return bound;
}

void check_state_bound(const GameSpec& game, const SolveOptions& opts) {
  if (full_state_bound(game.num_vars(), game.budget) >
      Integer(opts.max_states))
    throw ResourceError(
        "canonical history count C(k+2n,2n) exceeds the state cap (" +
        std::to_string(opts.max_states) +
        "); raise the cap or lower the budget");
}

// Shared per-solve machinery: posterior weights per history with a
// visited-state budget.
class Engine {
 public:
  Engine(const GameSpec& game, const SolveOptions& opts)
      : game_(game), opts_(opts) {}

  // Sum over satisfying / all assignments of weights given counts.
  struct Mass { Rational sat, total; };
  const Mass& mass(const OutcomeCounts& c) {
    auto it = mass_.find(c);
    if (it != mass_.end()) return it->second;
    if (mass_.size() >= opts_.max_states)
      throw ResourceError(
          "history state cap exceeded (" + std::to_string(opts_.max_states) +
          " canonical histories); raise the cap or lower the budget");
    Mass m{Rational(0), Rational(0)};
    int n = game_.num_vars();
    for (uint32_t bits = 0; bits < (1u << n); ++bits) {
      Assignment a(n, bits);
      Rational w = weight(game_.prior, game_.alpha, c, a);
      if (game_.tt.bit(bits)) m.sat += w;
      m.total += std::move(w);
    }
    return mass_.emplace(c, std::move(m)).first->second;
  }

  Rational posterior(const OutcomeCounts& c) {
    const Mass& m = mass(c);
    return m.sat / m.total;
  }

  // Pr(next observation of var is `value` | counts).  Summing the
  // child weights over outcomes reproduces the parent weights, so this
  // is a ratio of already-memoised masses.
  Rational step_probability(const OutcomeCounts& c, int var, bool value) {
    const Mass& here = mass(c);
    const Mass& there = mass(c.with_observation(var, value));
    // Each observation multiplies the weight of agreeing assignments
    // by o and leaves the rest; the update also rescales everything by
    // (1/2 - alpha).  Work with the rescaled masses directly:
    // Pr = (1/2 - a) * total(child) / total(parent).
    return (Rational(1, 2) - game_.alpha.alpha(var)) * there.total /
           here.total;
  }

  const GameSpec& game() const { return game_; }
  size_t states() const { return mass_.size(); }

 private:
  const GameSpec& game_;
  const SolveOptions& opts_;
  std::unordered_map<OutcomeCounts, Mass, OutcomeCountsHash> mass_;
};

class BackwardInduction {
 public:
  BackwardInduction(const GameSpec& game, const SolveOptions& opts,
                    bool record)
      : eng_(game, opts), record_(record) {}

  Rational value(const OutcomeCounts& c, uint32_t depth) {
    auto it = memo_.find(c);
    if (it != memo_.end()) return it->second;
    const GameSpec& g = eng_.game();
    Rational v;
    if (depth == static_cast<uint32_t>(g.budget)) {
      ActionValue av = best_action(eng_.posterior(c), g.payoffs);
      if (record_) strategy_.actions.emplace(c, av.action);
      v = std::move(av.value);
    } else {
      int best = -1;
      for (int i = 0; i < g.num_vars(); ++i) {
        Rational vi = eng_.step_probability(c, i, true) *
                          value(c.with_observation(i, true), depth + 1) +
                      eng_.step_probability(c, i, false) *
                          value(c.with_observation(i, false), depth + 1);
        if (best < 0 || vi > v) {
          best = i;
          v = std::move(vi);
        }
      }
      if (record_) strategy_.tests.emplace(c, best);
    }
    memo_.emplace(c, v);
    return v;
  }

  Strategy take_strategy() { return std::move(strategy_); }
  size_t states() const { return memo_.size(); }

 private:
  Engine eng_;
  bool record_;
  Strategy strategy_;
  std::unordered_map<OutcomeCounts, Rational, OutcomeCountsHash> memo_;
};

}  // namespace

Rational outcome_probability(const GameSpec& game, const OutcomeCounts& counts,
                             int var, bool value) {
  if (var < 0 || var >= game.num_vars())
    throw ValidationError("variable index out of range");
  SolveOptions opts;
  Engine eng(game, opts);
  return eng.step_probability(counts, var, value);
}

Rational optimal_value(const GameSpec& game, const SolveOptions& opts) {
  check_state_bound(game, opts);
  BackwardInduction bi(game, opts, /*record=*/false);
  return bi.value(OutcomeCounts(), 0);
}

SolveResult optimal_strategy(const GameSpec& game, const SolveOptions& opts) {
  check_state_bound(game, opts);
  BackwardInduction bi(game, opts, /*record=*/true);
  Rational v = bi.value(OutcomeCounts(), 0);
  return {std::move(v), bi.take_strategy(), bi.states()};
}

namespace {

// Core expectation recursion shared by the fixed-policy evaluators.
class PolicyEval {
 public:
  PolicyEval(const GameSpec& game, const SolveOptions& opts,
             std::function<int(const OutcomeCounts&)> pick,
             std::function<Rational(Engine&, const OutcomeCounts&)> leaf)
      : eng_(game, opts), pick_(std::move(pick)), leaf_(std::move(leaf)) {}

  Rational value(const OutcomeCounts& c, uint32_t depth) {
    auto it = memo_.find(c);
    if (it != memo_.end()) return it->second;
    const GameSpec& g = eng_.game();
    Rational v;
    if (depth == static_cast<uint32_t>(g.budget)) {
      v = leaf_(eng_, c);
    } else {
      int i = pick_(c);
      if (i < 0 || i >= g.num_vars())
        throw ValidationError("policy picked an invalid variable");
      v = eng_.step_probability(c, i, true) *
              value(c.with_observation(i, true), depth + 1) +
          eng_.step_probability(c, i, false) *
              value(c.with_observation(i, false), depth + 1);
    }
    memo_.emplace(c, v);
    return v;
  }

 private:
  Engine eng_;
  std::function<int(const OutcomeCounts&)> pick_;
  std::function<Rational(Engine&, const OutcomeCounts&)> leaf_;
  std::unordered_map<OutcomeCounts, Rational, OutcomeCountsHash> memo_;
};

}  // namespace

Rational evaluate_strategy(const GameSpec& game, const Strategy& strategy,
                           const SolveOptions& opts) {
  PolicyEval ev(
      game, opts,
      [&](const OutcomeCounts& c) {
        auto it = strategy.tests.find(c);
        if (it == strategy.tests.end())
          throw ValidationError("strategy undefined at reachable history " +
                                (c.empty() ? std::string("(empty)") : c.to_string()));
        return it->second;
      },
      [&](Engine& eng, const OutcomeCounts& c) {
        auto it = strategy.actions.find(c);
        if (it == strategy.actions.end())
          throw ValidationError("strategy has no final action at history " +
                                (c.empty() ? std::string("(empty)") : c.to_string()));
        switch (it->second) {
          case Action::NoGuess: return Rational(0);
          case Action::GuessT:
            return guess_value(eng.posterior(c), eng.game().payoffs, Guess::T);
          case Action::GuessF:
            return guess_value(eng.posterior(c), eng.game().payoffs, Guess::F);
        }
        throw InternalError("bad action");
      });
  return ev.value(OutcomeCounts(), 0);
}

Rational policy_value(const GameSpec& game,
                      const std::function<int(const OutcomeCounts&)>& pick,
                      const SolveOptions& opts) {
  PolicyEval ev(game, opts, pick, [](Engine& eng, const OutcomeCounts& c) {
    return best_action(eng.posterior(c), eng.game().payoffs).value;
  });
  return ev.value(OutcomeCounts(), 0);
}

namespace {

class RandomTestEval {
 public:
  RandomTestEval(const GameSpec& game, const SolveOptions& opts)
      : eng_(game, opts) {}

  Rational value(const OutcomeCounts& c, uint32_t depth) {
    auto it = memo_.find(c);
    if (it != memo_.end()) return it->second;
    const GameSpec& g = eng_.game();
    Rational v;
    if (depth == static_cast<uint32_t>(g.budget)) {
      v = best_action(eng_.posterior(c), g.payoffs).value;
    } else {
      Rational sum(0);
      for (int i = 0; i < g.num_vars(); ++i) {
        sum += eng_.step_probability(c, i, true) *
                   value(c.with_observation(i, true), depth + 1) +
               eng_.step_probability(c, i, false) *
                   value(c.with_observation(i, false), depth + 1);
      }
      v = sum / g.num_vars();
    }
    memo_.emplace(c, v);
    return v;
  }

 private:
  Engine eng_;
  std::unordered_map<OutcomeCounts, Rational, OutcomeCountsHash> memo_;
};

}  // namespace

Rational random_test_value(const GameSpec& game, const SolveOptions& opts) {
  if (game.num_vars() == 0) {
    return best_action(posterior_formula(game.tt, game.prior, game.alpha, {}),
                       game.payoffs)
        .value;
  }
  check_state_bound(game, opts);
  RandomTestEval ev(game, opts);
  return ev.value(OutcomeCounts(), 0);
}

double random_test_value_mc(const GameSpec& game, uint64_t seed,
                            uint64_t rounds) {
  if (rounds == 0) throw ValidationError("need at least one round");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick_var(0, game.num_vars() - 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int n = game.num_vars();
  // Draw nature's assignment, simulate noisy tests, then score the
  // exact best action at the observed record.
  double total = 0;
  for (uint64_t r = 0; r < rounds; ++r) {
    uint32_t bits = 0;
    for (int i = 0; i < n; ++i)
      if (unit(rng) < static_cast<double>(game.prior.p(i))) bits |= 1u << i;
    Assignment a(n, bits);
    OutcomeCounts c;
    for (int step = 0; step < game.budget; ++step) {
      int i = pick_var(rng);
      double acc = 0.5 + static_cast<double>(game.alpha.alpha(i));
      bool correct = unit(rng) < acc;
      c.add_observations(i, correct ? a.value(i) : !a.value(i), 1);
    }
    ActionValue av =
        best_action(posterior_formula(game.tt, game.prior, game.alpha, c),
                    game.payoffs);
    switch (av.action) {
      case Action::NoGuess: break;
      case Action::GuessT:
        total += static_cast<double>(game.tt.eval(a) ? game.payoffs.g
                                                     : game.payoffs.b);
        break;
      case Action::GuessF:
        total += static_cast<double>(!game.tt.eval(a) ? game.payoffs.g
                                                      : game.payoffs.b);
        break;
    }
  }
  return total / static_cast<double>(rounds);
}

Rational uniform_split_value(const GameSpec& game, const SolveOptions& opts) {
  const int n = game.num_vars();
  if (n == 0 || game.budget % n != 0)
    throw ValidationError("uniform split requires n to divide k");
  const uint32_t per_var = game.budget / n;
  return policy_value(
      game,
      [&](const OutcomeCounts& c) {
        for (int i = 0; i < n; ++i)
          if (c.t(i) + c.f(i) < per_var) return i;
        throw InternalError("uniform split ran out of budgeted tests");
      },
      opts);
}

namespace {

// Fills a strategy's maps by walking every reachable history under a
// pick function and an action function.
void fill_strategy(const GameSpec& game, Strategy& s,
                   const std::function<int(const OutcomeCounts&)>& pick,
                   const std::function<Action(const OutcomeCounts&)>& act,
                   const OutcomeCounts& c, uint32_t depth) {
  if (depth == static_cast<uint32_t>(game.budget)) {
    s.actions.emplace(c, act(c));
    return;
  }
  if (s.tests.count(c)) return;
  int i = pick(c);
  s.tests.emplace(c, i);
  fill_strategy(game, s, pick, act, c.with_observation(i, true), depth + 1);
  fill_strategy(game, s, pick, act, c.with_observation(i, false), depth + 1);
}

Action best_action_at(const GameSpec& game, const OutcomeCounts& c) {
  return best_action(posterior_formula(game.tt, game.prior, game.alpha, c),
                     game.payoffs)
      .action;
}

}  // namespace

Strategy always_test(const GameSpec& game, int var) {
  Strategy s;
  fill_strategy(
      game, s, [=](const OutcomeCounts&) { return var; },
      [&](const OutcomeCounts& c) { return best_action_at(game, c); },
      OutcomeCounts(), 0);
  return s;
}

Strategy round_robin(const GameSpec& game) {
  Strategy s;
  fill_strategy(
      game, s,
      [&](const OutcomeCounts& c) {
        return static_cast<int>(c.total() % game.num_vars());
      },
      [&](const OutcomeCounts& c) { return best_action_at(game, c); },
      OutcomeCounts(), 0);
  return s;
}

Strategy test_both_guess_tt(const GameSpec& game) {
  if (game.budget != 2 || game.num_vars() < 2)
    throw ValidationError("test_both_guess_tt expects k = 2 and n >= 2");
  Strategy s;
  fill_strategy(
      game, s,
      [](const OutcomeCounts& c) { return c.total() == 0 ? 0 : 1; },
      [](const OutcomeCounts& c) {
        return (c.t(0) == 1 && c.t(1) == 1) ? Action::GuessT : Action::NoGuess;
      },
      OutcomeCounts(), 0);
  return s;
}

Strategy test_twice_guess_tt(const GameSpec& game, int var) {
  if (game.budget != 2)
    throw ValidationError("test_twice_guess_tt expects k = 2");
  Strategy s;
  fill_strategy(
      game, s, [=](const OutcomeCounts&) { return var; },
      [=](const OutcomeCounts& c) {
        return c.t(var) == 2 ? Action::GuessT : Action::NoGuess;
      },
      OutcomeCounts(), 0);
  return s;
}

}  // namespace iag
