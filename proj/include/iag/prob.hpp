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

#ifndef IAG_PROB_HPP_
#define IAG_PROB_HPP_

#include <cstdint>
#include <string_view>
#include <vector>

#include "iag/rational.hpp"
#include "iag/truth_table.hpp"

namespace iag {

// Independent per-variable prior, open-minded: 0 < p_i < 1 for every
// variable, so every assignment has positive probability.
class ProductPrior {
 public:
  explicit ProductPrior(std::vector<Rational> p);
  static ProductPrior uniform(int num_vars);

  int num_vars() const { return static_cast<int>(p_.size()); }
  const Rational& p(int var) const { return p_.at(var); }
  // Pr(A) as the product over variables.
  Rational probability(const Assignment& a) const;

 private:
  std::vector<Rational> p_;
};

// Test accuracies: a test of v_i reports the true value with
// probability 1/2 + alpha_i.  We require alpha_i < 1/2 strictly; the
// odds transform is undefined at 1/2 and the noiseless game is out of
// scope here.
class AccuracyVector {
 public:
  explicit AccuracyVector(std::vector<Rational> alpha);
  static AccuracyVector uniform(int num_vars, const Rational& alpha);

  int num_vars() const { return static_cast<int>(alpha_.size()); }
  const Rational& alpha(int var) const { return alpha_.at(var); }
  Rational odds(int var) const;

 private:
  std::vector<Rational> alpha_;
};

// Likelihood ratio of a correct observation: (1/2+a)/(1/2-a).
Rational odds(const Rational& alpha_i);

struct Payoffs {
  Rational g;  // correct guess, > 0
  Rational b;  // wrong guess, < 0
  Payoffs(Rational good, Rational bad);
};

// (b+g)/(2(b-g)); a guess is profitable iff |Pr(phi|S) - 1/2| exceeds
// this threshold strictly.  Negative when g > -b.
Rational threshold(const Payoffs& payoffs);

// Canonical, order-free record of a test-outcome sequence: per
// variable, how many observations said T and how many said F.  Stored
// sparsely as sorted (var, t, f) entries with t + f > 0.
class OutcomeCounts {
 public:
  OutcomeCounts() = default;

  uint32_t t(int var) const;
  uint32_t f(int var) const;
  // n+ of the underlying sequence: t(var) if a(var) else f(var).
  uint32_t agreeing(int var, bool value) const;
  uint32_t total() const;
  bool empty() const { return entries_.empty(); }

  OutcomeCounts with_observation(int var, bool value) const;
  void add_observations(int var, bool value, uint32_t count);

  // (t, f) -> (t - min, f - min) per variable.  Posteriors are
  // invariant under this reduction.
  OutcomeCounts cancel_contradictions() const;
  bool contradictory() const;

  // Observation syntax: "v1:T,v1:F" with repeat shorthand "v2:T*3".
  // Whitespace is allowed around separators; an empty string is the
  // empty record.
  static OutcomeCounts parse(std::string_view text, int num_vars);
  std::string to_string() const;

  struct Entry { int var; uint32_t t, f; };
  const std::vector<Entry>& entries() const { return entries_; }

  bool operator==(const OutcomeCounts& o) const;
  size_t hash() const;

 private:
  std::vector<Entry> entries_;  // sorted by var, all with t + f > 0
};

struct OutcomeCountsHash {
  size_t operator()(const OutcomeCounts& c) const { return c.hash(); }
};

// Unnormalised posterior weight r(A,S) = Pr(A) * prod_i o_i^{n+_i}.
Rational weight(const ProductPrior& prior, const AccuracyVector& alpha,
                const OutcomeCounts& counts, const Assignment& a);

// Pr(A | S), exact; sums to one over assignments.
Rational posterior_assignment(const ProductPrior& prior,
                              const AccuracyVector& alpha,
                              const OutcomeCounts& counts,
                              const Assignment& a);

// Pr(phi | S) = sum over satisfying assignments of Pr(A | S).
Rational posterior_formula(const TruthTable& tt, const ProductPrior& prior,
                           const AccuracyVector& alpha,
                           const OutcomeCounts& counts);

enum class Guess { T, F };

// Expected payoff of guessing when Pr(phi|S) = p.
Rational guess_value(const Rational& p, const Payoffs& payoffs, Guess guess);

enum class Action { NoGuess, GuessT, GuessF };

struct ActionValue {
  Action action;
  Rational value;  // 0 for NoGuess
};

// Best final move at posterior p.  NoGuess whenever no guess has
// strictly positive value; between equally good positive guesses
// (only possible at p = 1/2) GuessT is preferred, so the result is
// deterministic.
ActionValue best_action(const Rational& p, const Payoffs& payoffs);

// Falsifying weight over satisfying weight; ordered inversely to
// Pr(phi|S).  Undefined for the constant-F table.
Rational characteristic_fraction(const TruthTable& tt,
                                 const ProductPrior& prior,
                                 const AccuracyVector& alpha,
                                 const OutcomeCounts& counts);

// Per-variable fractions of observations agreeing with A; sums to one
// exactly when the sequence is compatible with A.
std::vector<Rational> trace_of(const OutcomeCounts& counts,
                               const Assignment& a);

const char* to_string(Action a);

}  // namespace iag

#endif  // IAG_PROB_HPP_
