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

#include "iag/prob.hpp"

#include <algorithm>
#include <cctype>

namespace iag {

ProductPrior::ProductPrior(std::vector<Rational> p) : p_(std::move(p)) {
  for (const Rational& pi : p_)
    if (pi <= 0 || pi >= 1)
      throw ValidationError(
          "prior must be open-minded: 0 < Pr(v_i=T) < 1 for every variable");
}

ProductPrior ProductPrior::uniform(int num_vars) {
  return ProductPrior(std::vector<Rational>(num_vars, Rational(1, 2)));
}

Rational ProductPrior::probability(const Assignment& a) const {
  if (a.num_vars() != num_vars())
    throw ValidationError("assignment arity does not match prior");
  Rational r(1);
  for (int i = 0; i < num_vars(); ++i)
    r *= a.value(i) ? p_[i] : (1 - p_[i]);
  return r;
}

AccuracyVector::AccuracyVector(std::vector<Rational> alpha)
    : alpha_(std::move(alpha)) {
  for (const Rational& a : alpha_)
    if (a < 0 || a >= Rational(1, 2))
      throw ValidationError(
          "accuracies must satisfy 0 <= alpha_i < 1/2 (alpha = 1/2 makes "
          "the odds infinite)");
}

AccuracyVector AccuracyVector::uniform(int num_vars, const Rational& alpha) {
  return AccuracyVector(std::vector<Rational>(num_vars, alpha));
}

Rational AccuracyVector::odds(int var) const { return iag::odds(alpha_.at(var)); }

Rational odds(const Rational& alpha_i) {
  if (alpha_i < 0 || alpha_i >= Rational(1, 2))
    throw ValidationError("odds requires 0 <= alpha < 1/2");
  return (Rational(1, 2) + alpha_i) / (Rational(1, 2) - alpha_i);
}

Payoffs::Payoffs(Rational good, Rational bad)
    : g(std::move(good)), b(std::move(bad)) {
  if (g <= 0 || b >= 0) throw ValidationError("payoffs require g > 0 > b");
}

Rational threshold(const Payoffs& payoffs) {
  return (payoffs.b + payoffs.g) / (2 * (payoffs.b - payoffs.g));
}

uint32_t OutcomeCounts::t(int var) const {
  for (const Entry& e : entries_)
    if (e.var == var) return e.t;
  return 0;
}

uint32_t OutcomeCounts::f(int var) const {
  for (const Entry& e : entries_)
    if (e.var == var) return e.f;
  return 0;
}

uint32_t OutcomeCounts::agreeing(int var, bool value) const {
  return value ? t(var) : f(var);
}

uint32_t OutcomeCounts::total() const {
  uint32_t s = 0;
  for (const Entry& e : entries_) s += e.t + e.f;
  return s;
}

OutcomeCounts OutcomeCounts::with_observation(int var, bool value) const {
  OutcomeCounts c = *this;
  c.add_observations(var, value, 1);
  return c;
}

void OutcomeCounts::add_observations(int var, bool value, uint32_t count) {
  if (var < 0) throw ValidationError("negative variable index");
  if (count == 0) return;
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), var,
      [](const Entry& e, int v) { return e.var < v; });
  if (it == entries_.end() || it->var != var)
    it = entries_.insert(it, Entry{var, 0, 0});
  if (value) it->t += count;
  else it->f += count;
}

OutcomeCounts OutcomeCounts::cancel_contradictions() const {
  OutcomeCounts out;
  for (const Entry& e : entries_) {
    uint32_t m = std::min(e.t, e.f);
    if (e.t - m > 0) out.entries_.push_back(Entry{e.var, e.t - m, 0});
    else if (e.f - m > 0) out.entries_.push_back(Entry{e.var, 0, e.f - m});
  }
  return out;
}

bool OutcomeCounts::contradictory() const {
  for (const Entry& e : entries_)
    if (e.t > 0 && e.f > 0) return true;
  return false;
}

OutcomeCounts OutcomeCounts::parse(std::string_view text, int num_vars) {
  OutcomeCounts out;
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != 'v')
      throw ValidationError("observation must look like v1:T or v2:F*3");
    ++pos;
    int var = 0;
    size_t digits = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      var = var * 10 + (text[pos] - '0');
      ++pos; ++digits;
      if (var > TruthTable::kMaxVars) throw ValidationError("variable index too large");
    }
    if (digits == 0 || var == 0) throw ValidationError("bad variable index in observation");
    if (var > num_vars)
      throw ValidationError("observation mentions v" + std::to_string(var) +
                            " beyond the declared variable count");
    if (pos >= text.size() || text[pos] != ':')
      throw ValidationError("expected ':' after variable in observation");
    ++pos;
    if (pos >= text.size() || (text[pos] != 'T' && text[pos] != 'F'))
      throw ValidationError("observation outcome must be T or F");
    bool value = text[pos] == 'T';
    ++pos;
    uint32_t count = 1;
    if (pos < text.size() && text[pos] == '*') {
      ++pos;
      count = 0;
      size_t cd = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        count = count * 10 + (text[pos] - '0');
        ++pos; ++cd;
        if (count > 1000000) throw ValidationError("observation repeat count too large");
      }
      if (cd == 0) throw ValidationError("expected digits after '*'");
    }
    out.add_observations(var - 1, value, count);
    skip_ws();
    if (pos < text.size()) {
      if (text[pos] != ',') throw ValidationError("expected ',' between observations");
      ++pos;
      skip_ws();
      if (pos == text.size()) throw ValidationError("trailing ',' in observations");
    }
  }
  return out;
}

std::string OutcomeCounts::to_string() const {
  std::string s;
  for (const Entry& e : entries_) {
    if (e.t) {
      if (!s.empty()) s += ",";
      s += "v" + std::to_string(e.var + 1) + ":T";
      if (e.t > 1) s += "*" + std::to_string(e.t);
    }
    if (e.f) {
      if (!s.empty()) s += ",";
      s += "v" + std::to_string(e.var + 1) + ":F";
      if (e.f > 1) s += "*" + std::to_string(e.f);
    }
  }
  return s;
}

bool OutcomeCounts::operator==(const OutcomeCounts& o) const {
  if (entries_.size() != o.entries_.size()) return false;
  for (size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].var != o.entries_[i].var ||
        entries_[i].t != o.entries_[i].t || entries_[i].f != o.entries_[i].f)
      return false;
  }
  return true;
}

size_t OutcomeCounts::hash() const {
  size_t h = 0x51ed270b;
  for (const Entry& e : entries_) {
    h ^= std::hash<uint64_t>()((uint64_t(e.var) << 48) ^
                               (uint64_t(e.t) << 24) ^ e.f) +
         0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

Rational weight(const ProductPrior& prior, const AccuracyVector& alpha,
                const OutcomeCounts& counts, const Assignment& a) {
  Rational w = prior.probability(a);
  for (const auto& e : counts.entries()) {
    uint32_t exp = a.value(e.var) ? e.t : e.f;
    if (exp) w *= rat_pow(alpha.odds(e.var), exp);
  }
  return w;
}

namespace {

// All 2^n weights in assignment-index order, with the per-variable odd
// powers computed once.
std::vector<Rational> all_weights(const ProductPrior& prior,
                                  const AccuracyVector& alpha,
                                  const OutcomeCounts& counts) {
  int n = prior.num_vars();
  if (alpha.num_vars() != n)
    throw ValidationError("prior/accuracy arity mismatch");
  struct Pow { int var; Rational on_t, on_f; };
  std::vector<Pow> pows;
  for (const auto& e : counts.entries()) {
    if (e.var >= n) throw ValidationError("observation of undeclared variable");
    Rational o = alpha.odds(e.var);
    pows.push_back({e.var, rat_pow(o, e.t), rat_pow(o, e.f)});
  }
  std::vector<Rational> w(size_t(1) << n);
  for (uint32_t bits = 0; bits < w.size(); ++bits) {
    Assignment a(n, bits);
    Rational v = prior.probability(a);
    for (const Pow& p : pows) v *= a.value(p.var) ? p.on_t : p.on_f;
    w[bits] = std::move(v);
  }
  return w;
}

}  // namespace

Rational posterior_assignment(const ProductPrior& prior,
                              const AccuracyVector& alpha,
                              const OutcomeCounts& counts,
                              const Assignment& a) {
  std::vector<Rational> w = all_weights(prior, alpha, counts);
  Rational total(0);
  for (const Rational& x : w) total += x;
  return w[a.bits()] / total;
}

Rational posterior_formula(const TruthTable& tt, const ProductPrior& prior,
                           const AccuracyVector& alpha,
                           const OutcomeCounts& counts) {
  if (tt.num_vars() != prior.num_vars())
    throw ValidationError("table/prior arity mismatch");
  std::vector<Rational> w = all_weights(prior, alpha, counts);
  Rational sat(0), total(0);
  for (uint32_t bits = 0; bits < w.size(); ++bits) {
    total += w[bits];
    if (tt.bit(bits)) sat += w[bits];
  }
  return sat / total;
}

Rational guess_value(const Rational& p, const Payoffs& payoffs, Guess guess) {
  if (guess == Guess::T) return payoffs.g * p + payoffs.b * (1 - p);
  return payoffs.g * (1 - p) + payoffs.b * p;
}

ActionValue best_action(const Rational& p, const Payoffs& payoffs) {
  Rational vt = guess_value(p, payoffs, Guess::T);
  Rational vf = guess_value(p, payoffs, Guess::F);
  if (vt <= 0 && vf <= 0) return {Action::NoGuess, Rational(0)};
  if (vt >= vf) return {Action::GuessT, std::move(vt)};
  return {Action::GuessF, std::move(vf)};
}

Rational characteristic_fraction(const TruthTable& tt,
                                 const ProductPrior& prior,
                                 const AccuracyVector& alpha,
                                 const OutcomeCounts& counts) {
  if (tt.num_vars() != prior.num_vars())
    throw ValidationError("table/prior arity mismatch");
  if (tt.count_ones() == 0)
    throw ValidationError(
        "characteristic fraction is undefined for the constant-F table");
  std::vector<Rational> w = all_weights(prior, alpha, counts);
  Rational sat(0), fal(0);
  for (uint32_t bits = 0; bits < w.size(); ++bits)
    (tt.bit(bits) ? sat : fal) += w[bits];
  return fal / sat;
}

std::vector<Rational> trace_of(const OutcomeCounts& counts,
                               const Assignment& a) {
  uint32_t len = counts.total();
  if (len == 0) throw ValidationError("trace of the empty sequence is undefined");
  std::vector<Rational> tr(a.num_vars(), Rational(0));
  for (const auto& e : counts.entries()) {
    if (e.var >= a.num_vars())
      throw ValidationError("observation of undeclared variable");
    tr[e.var] = Rational(a.value(e.var) ? e.t : e.f, len);
  }
  return tr;
}

const char* to_string(Action a) {
  switch (a) {
    case Action::NoGuess: return "NoGuess";
    case Action::GuessT: return "GuessT";
    case Action::GuessF: return "GuessF";
  }
  return "?";
}

}  // namespace iag
