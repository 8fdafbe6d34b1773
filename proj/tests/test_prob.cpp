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

#include <random>

#include "iag/formula.hpp"
#include "iag/game.hpp"
#include "iag/prob.hpp"
#include "oracles.hpp"

using namespace iag;

namespace {

Rational R(long num, long den = 1) { return Rational(num, den); }

OutcomeCounts obs(const char* text, int n) {
  return OutcomeCounts::parse(text, n);
}

struct TwoVarOr {
  TruthTable tt = table_from_text("v1|v2", 2);
  ProductPrior prior = ProductPrior::uniform(2);
  AccuracyVector alpha = AccuracyVector::uniform(2, R(1, 4));
};

// Random small game generator shared by the property tests.
struct RandomGame {
  TruthTable tt;
  ProductPrior prior;
  AccuracyVector alpha;
};

RandomGame random_game(std::mt19937& rng, int n) {
  std::uniform_int_distribution<uint64_t> code(0, (1u << (1 << n)) - 1);
  std::uniform_int_distribution<int> num(1, 5);
  std::vector<Rational> p, al;
  for (int i = 0; i < n; ++i) {
    p.emplace_back(num(rng), 6);          // 1/6 .. 5/6
    al.emplace_back(num(rng) - 1, 12);    // 0 .. 4/12 < 1/2
  }
  return {TruthTable::from_bits(n, code(rng)), ProductPrior(std::move(p)),
          AccuracyVector(std::move(al))};
}

OutcomeCounts random_counts(std::mt19937& rng, int n, int len) {
  OutcomeCounts c;
  std::uniform_int_distribution<int> var(0, n - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int i = 0; i < len; ++i) c.add_observations(var(rng), coin(rng), 1);
  return c;
}

}  // namespace

TEST_CASE("odds") {
  CHECK(odds(R(1, 4)) == 3);
  CHECK(odds(R(0)) == 1);
  CHECK(odds(R(1, 6)) == 2);
  CHECK_THROWS_AS(odds(R(1, 2)), ValidationError);
  CHECK_THROWS_AS(odds(R(-1, 10)), ValidationError);
}

TEST_CASE("domain type invariants") {
  CHECK_THROWS_AS(ProductPrior({R(0), R(1, 2)}), ValidationError);
  CHECK_THROWS_AS(ProductPrior({R(1)}), ValidationError);
  CHECK_THROWS_AS(AccuracyVector({R(1, 2)}), ValidationError);
  CHECK_THROWS_AS(Payoffs(R(0), R(-1)), ValidationError);
  CHECK_THROWS_AS(Payoffs(R(1), R(0)), ValidationError);
}

TEST_CASE("weights") {
  TwoVarOr g;
  CHECK(weight(g.prior, g.alpha, {}, Assignment(2, 0b01)) == R(1, 4));
  // two agreeing observations of v1 multiply the prior by odds^2 = 9
  OutcomeCounts c = obs("v1:T*2", 2);
  CHECK(weight(g.prior, g.alpha, c, Assignment(2, 0b01)) == R(9, 4));
  CHECK(weight(g.prior, g.alpha, c, Assignment(2, 0b10)) == R(1, 4));
}

TEST_CASE("posterior over assignments") {
  TwoVarOr g;
  CHECK(posterior_assignment(g.prior, g.alpha, {}, Assignment(2, 3)) ==
        R(1, 4));
  // n=1: a single agreeing test takes a uniform prior to 3/4.
  ProductPrior p1 = ProductPrior::uniform(1);
  AccuracyVector a1 = AccuracyVector::uniform(1, R(1, 4));
  CHECK(posterior_assignment(p1, a1, obs("v1:T", 1), Assignment(1, 1)) ==
        R(3, 4));
  // weights 9,9,1,1 per quadrant normalise to 9/20.
  CHECK(posterior_assignment(g.prior, g.alpha, obs("v1:T*2", 2),
                             Assignment(2, 0b11)) == R(9, 20));
}

TEST_CASE("posterior normalisation is exact") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 1 + trial % 3;
    RandomGame g = random_game(rng, n);
    OutcomeCounts c = random_counts(rng, n, trial % 6);
    Rational total(0);
    for (uint32_t bits = 0; bits < (1u << n); ++bits)
      total += posterior_assignment(g.prior, g.alpha, c, Assignment(n, bits));
    CHECK(total == 1);
  }
}

TEST_CASE("posterior of the worked two-variable disjunction") {
  TwoVarOr g;
  auto post = [&](const char* s) {
    return posterior_formula(g.tt, g.prior, g.alpha, obs(s, 2));
  };
  CHECK(post("") == R(3, 4));
  CHECK(post("v1:F") == R(5, 8));
  CHECK(post("v1:F*2") == R(11, 20));
  CHECK(post("v1:T*2") == R(19, 20));
  CHECK(post("v1:T,v2:T") == R(15, 16));
}

TEST_CASE("posterior_formula complements add to one") {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 1 + trial % 3;
    RandomGame g = random_game(rng, n);
    OutcomeCounts c = random_counts(rng, n, trial % 5);
    Rational p = posterior_formula(g.tt, g.prior, g.alpha, c);
    Rational q = posterior_formula(g.tt.complement(), g.prior, g.alpha, c);
    CHECK(p + q == 1);
  }
}

TEST_CASE("threshold") {
  CHECK(threshold(Payoffs(R(1), R(-16))) == R(15, 34));
  CHECK(threshold(Payoffs(R(3), R(-3))) == 0);
  CHECK(threshold(Payoffs(R(1), R(-1, 3))) == R(-1, 4));
}

TEST_CASE("guess values and best action") {
  Payoffs pay(R(1), R(-16));
  CHECK(guess_value(R(19, 20), pay, Guess::T) == R(3, 20));
  CHECK(guess_value(R(15, 16), pay, Guess::T) == R(-1, 16));
  Payoffs sym(R(2), R(-2));
  CHECK(guess_value(R(1, 2), sym, Guess::T) == 0);
  CHECK(guess_value(R(1, 2), sym, Guess::F) == 0);

  ActionValue a = best_action(R(19, 20), pay);
  CHECK(a.action == Action::GuessT);
  CHECK(a.value == R(3, 20));
  a = best_action(R(15, 16), pay);
  CHECK(a.action == Action::NoGuess);
  CHECK(a.value == 0);
  a = best_action(R(1, 2), pay);
  CHECK(a.action == Action::NoGuess);
  // positive tie at p = 1/2 prefers GuessT
  a = best_action(R(1, 2), Payoffs(R(3), R(-1)));
  CHECK(a.action == Action::GuessT);
  CHECK(a.value == 1);
}

TEST_CASE("best action positivity matches the threshold strictly") {
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> num(0, 40);
  Payoffs pay(R(1), R(-16));
  Rational q = threshold(pay);
  for (int trial = 0; trial < 200; ++trial) {
    Rational p(num(rng), 40);
    ActionValue a = best_action(p, pay);
    bool beyond = abs(p - R(1, 2)) > q;
    CHECK((a.value > 0) == beyond);
    CHECK((a.action != Action::NoGuess) == beyond);
  }
}

TEST_CASE("characteristic fraction basics") {
  TwoVarOr g;
  CHECK(characteristic_fraction(g.tt, g.prior, g.alpha, {}) == R(1, 3));
  CHECK_THROWS_AS(characteristic_fraction(TruthTable::constant(2, false),
                                          g.prior, g.alpha, {}),
                  ValidationError);
}

TEST_CASE("characteristic fraction of the worked three-variable formula") {
  // (v1 & v2) | (!v2 & !v3) after observing v2 false once and v1 true
  // once, uniform prior, equal odds o = 3:
  // (o + o^2 + 1 + 1) / (o + o^2 + o + o) = 14/18 = 7/9.
  TruthTable tt = table_from_text("(v1&v2)|(!v2&!v3)", 3);
  ProductPrior prior = ProductPrior::uniform(3);
  AccuracyVector alpha = AccuracyVector::uniform(3, R(1, 4));
  CHECK(characteristic_fraction(tt, prior, alpha, obs("v2:F,v1:T", 3)) ==
        R(7, 9));
}

TEST_CASE("reciprocal under complement") {
  std::mt19937 rng(10);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 1 + trial % 3;
    RandomGame g = random_game(rng, n);
    if (g.tt.is_constant()) continue;
    OutcomeCounts c = random_counts(rng, n, trial % 5);
    Rational cf = characteristic_fraction(g.tt, g.prior, g.alpha, c);
    Rational cf_neg =
        characteristic_fraction(g.tt.complement(), g.prior, g.alpha, c);
    CHECK(cf * cf_neg == 1);
  }
}

TEST_CASE("ordering inversion between cf and the posterior") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + trial % 3;
    RandomGame g = random_game(rng, n);
    if (g.tt.is_constant()) continue;
    OutcomeCounts c1 = random_counts(rng, n, trial % 6);
    OutcomeCounts c2 = random_counts(rng, n, (trial + 3) % 6);
    Rational p1 = posterior_formula(g.tt, g.prior, g.alpha, c1);
    Rational p2 = posterior_formula(g.tt, g.prior, g.alpha, c2);
    Rational f1 = characteristic_fraction(g.tt, g.prior, g.alpha, c1);
    Rational f2 = characteristic_fraction(g.tt, g.prior, g.alpha, c2);
    CHECK((p1 > p2) == (f1 < f2));
  }
}

TEST_CASE("traces of the worked sequences") {
  // S = (v1~T x3, v1~F x1, v2~T x1)
  OutcomeCounts c = obs("v1:T*3,v1:F,v2:T", 2);
  auto tr = trace_of(c, Assignment(2, 0b11));
  CHECK(tr == std::vector<Rational>{R(3, 5), R(1, 5)});
  tr = trace_of(c, Assignment(2, 0b10));
  CHECK(tr == std::vector<Rational>{R(1, 5), R(1, 5)});
  tr = trace_of(obs("v1:T*4,v2:F", 2), Assignment(2, 0b01));
  CHECK(tr == std::vector<Rational>{R(4, 5), R(1, 5)});
  CHECK_THROWS_AS(trace_of(OutcomeCounts(), Assignment(2, 0)),
                  ValidationError);
}

TEST_CASE("trace entries of compatible sequences sum to one") {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 1 + trial % 3;
    std::uniform_int_distribution<int> var(0, n - 1);
    std::uniform_int_distribution<uint32_t> bits(0, (1u << n) - 1);
    Assignment a(n, bits(rng));
    OutcomeCounts c;
    for (int i = 0; i < 1 + trial % 5; ++i) {
      int v = var(rng);
      c.add_observations(v, a.value(v), 1);
    }
    Rational sum(0);
    for (const Rational& x : trace_of(c, a)) sum += x;
    CHECK(sum == 1);
  }
}

TEST_CASE("cancelling contradictions") {
  OutcomeCounts c = obs("v1:T*3,v1:F", 2);
  OutcomeCounts r = c.cancel_contradictions();
  CHECK(r.t(0) == 2);
  CHECK(r.f(0) == 0);
  CHECK(obs("v1:T*2,v1:F*2", 2).cancel_contradictions().empty());

  std::mt19937 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + trial % 3;
    RandomGame g = random_game(rng, n);
    OutcomeCounts counts = random_counts(rng, n, trial % 8);
    CHECK(posterior_formula(g.tt, g.prior, g.alpha, counts) ==
          posterior_formula(g.tt, g.prior, g.alpha,
                            counts.cancel_contradictions()));
  }
}

TEST_CASE("projection equals conditioning for product priors") {
  std::mt19937 rng(14);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + trial % 2;
    RandomGame g = random_game(rng, n);
    OutcomeCounts c = random_counts(rng, n, trial % 6);
    int var = trial % n;
    bool b = trial % 2;
    // Pr(phi | S, v=b) = Pr(phi and v=b | S) / Pr(v=b | S)
    TruthTable v = TruthTable::variable(n, var);
    if (!b) v = v.complement();
    Rational joint = posterior_formula(g.tt & v, g.prior, g.alpha, c);
    Rational marginal = posterior_formula(v, g.prior, g.alpha, c);
    Rational projected =
        posterior_formula(g.tt.project(var, b), g.prior, g.alpha, c);
    CHECK(joint == projected * marginal);
  }
}

TEST_CASE("posterior agrees with the ordered-sequence route") {
  // The count-level formula must match per-test likelihood updating
  // over any ordering of the same observations.
  std::mt19937 rng(15);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 1 + trial % 2;
    RandomGame g = random_game(rng, n);
    GameSpec game(g.tt, g.prior, 0, g.alpha, Payoffs(R(1), R(-1)));
    std::uniform_int_distribution<int> var(0, n - 1);
    std::uniform_int_distribution<int> coin(0, 1);
    std::vector<oracle::Step> seq;
    OutcomeCounts c;
    for (int i = 0; i < trial % 6; ++i) {
      int v = var(rng);
      bool out = coin(rng);
      seq.push_back({v, out});
      c.add_observations(v, out, 1);
    }
    Rational direct = posterior_formula(g.tt, g.prior, g.alpha, c);
    CHECK(direct == oracle::seq_posterior(game, seq));
    std::shuffle(seq.begin(), seq.end(), rng);
    CHECK(direct == oracle::seq_posterior(game, seq));
  }
}

TEST_CASE("uniform prior flip symmetry") {
  // With a uniform prior, flipping every recorded outcome of one
  // variable reflects that variable's posterior around 1/2.
  std::mt19937 rng(16);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 1 + trial % 3;
    ProductPrior prior = ProductPrior::uniform(n);
    RandomGame g = random_game(rng, n);
    OutcomeCounts c = random_counts(rng, n, trial % 6);
    int var = trial % n;
    OutcomeCounts flipped;
    for (const auto& e : c.entries()) {
      flipped.add_observations(e.var, true, e.var == var ? e.f : e.t);
      flipped.add_observations(e.var, false, e.var == var ? e.t : e.f);
    }
    TruthTable v = TruthTable::variable(n, var);
    Rational p = posterior_formula(v, prior, g.alpha, c);
    Rational pf = posterior_formula(v, prior, g.alpha, flipped);
    CHECK(p == 1 - pf);
  }
}

TEST_CASE("observation syntax") {
  OutcomeCounts c = obs("v1:T, v2:F*3 ,v1:T", 2);
  CHECK(c.t(0) == 2);
  CHECK(c.f(1) == 3);
  CHECK(c.total() == 5);
  CHECK(obs("", 4).empty());
  CHECK_THROWS_AS(obs("v3:T", 2), ValidationError);
  CHECK_THROWS_AS(obs("v1:X", 2), ValidationError);
  CHECK_THROWS_AS(obs("v1", 2), ValidationError);
  CHECK_THROWS_AS(obs("v1:T,", 2), ValidationError);
  CHECK_THROWS_AS(obs("v0:T", 2), ValidationError);
  // round trip
  CHECK(OutcomeCounts::parse(c.to_string(), 2) == c);
}
