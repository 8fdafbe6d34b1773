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

#include "iag/truth_table.hpp"

#include <bit>

namespace iag {

std::string Assignment::to_string() const {
  std::string s = "{";
  for (int i = 0; i < num_vars_; ++i) {
    if (i) s += ", ";
    s += "v" + std::to_string(i + 1) + "=" + (value(i) ? "T" : "F");
  }
  return s + "}";
}

namespace {
size_t word_count(int num_vars) {
  uint32_t bits = 1u << num_vars;
  return (bits + 63u) / 64u;
}
}  // namespace

TruthTable::TruthTable(int num_vars) : num_vars_(num_vars) {
  if (num_vars < 0 || num_vars > kMaxVars)
    throw ValidationError("num_vars must be in [0, " +
                          std::to_string(kMaxVars) + "]");
  words_.assign(word_count(num_vars), 0);
}

TruthTable TruthTable::constant(int num_vars, bool value) {
  TruthTable t(num_vars);
  if (value) {
    for (auto& w : t.words_) w = ~0ull;
    // keep bits beyond 2^n zero
    uint32_t tail = t.size() & 63u;
    if (tail) t.words_.back() &= (1ull << tail) - 1;
  }
  return t;
}

TruthTable TruthTable::variable(int num_vars, int var) {
  TruthTable t(num_vars);
  t.check_var(var);
  for (uint32_t a = 0; a < t.size(); ++a)
    if ((a >> var) & 1u) t.set_bit(a, true);
  return t;
}

TruthTable TruthTable::xor_all(int num_vars) {
  TruthTable t(num_vars);
  for (uint32_t a = 0; a < t.size(); ++a)
    t.set_bit(a, std::popcount(a) & 1u);
  return t;
}

TruthTable TruthTable::from_bits(int num_vars, uint64_t bits) {
  TruthTable t(num_vars);
  if (num_vars > 6) throw ValidationError("from_bits requires num_vars <= 6");
  uint64_t mask = (t.size() == 64) ? ~0ull : ((1ull << t.size()) - 1);
  if (bits & ~mask) throw ValidationError("table bits beyond 2^n are set");
  t.words_[0] = bits;
  return t;
}

TruthTable TruthTable::from_bit_string(int num_vars, std::string_view s) {
  TruthTable t(num_vars);
  if (s.size() != t.size())
    throw ValidationError("bit string must have exactly 2^n characters");
  for (uint32_t i = 0; i < t.size(); ++i) {
    if (s[i] == '1') t.set_bit(i, true);
    else if (s[i] != '0') throw ValidationError("bit string must be 0/1 only");
  }
  return t;
}

void TruthTable::set_bit(uint32_t index, bool value) {
  if (index >= size()) throw ValidationError("table index out of range");
  uint64_t m = 1ull << (index & 63u);
  if (value) words_[index >> 6] |= m;
  else words_[index >> 6] &= ~m;
}

bool TruthTable::eval(const Assignment& a) const {
  if (a.num_vars() != num_vars_)
    throw ValidationError("assignment has wrong number of variables");
  return bit(a.bits());
}

bool TruthTable::is_constant() const {
  uint32_t ones = count_ones();
  return ones == 0 || ones == size();
}

uint32_t TruthTable::count_ones() const {
  uint32_t c = 0;
  for (uint64_t w : words_) c += std::popcount(w);
  return c;
}

TruthTable TruthTable::complement() const {
  TruthTable t(num_vars_);
  for (size_t i = 0; i < words_.size(); ++i) t.words_[i] = ~words_[i];
  uint32_t tail = size() & 63u;
  if (tail) t.words_.back() &= (1ull << tail) - 1;
  return t;
}

TruthTable TruthTable::operator&(const TruthTable& o) const {
  if (num_vars_ != o.num_vars_) throw ValidationError("arity mismatch");
  TruthTable t(num_vars_);
  for (size_t i = 0; i < words_.size(); ++i) t.words_[i] = words_[i] & o.words_[i];
  return t;
}

TruthTable TruthTable::operator|(const TruthTable& o) const {
  if (num_vars_ != o.num_vars_) throw ValidationError("arity mismatch");
  TruthTable t(num_vars_);
  for (size_t i = 0; i < words_.size(); ++i) t.words_[i] = words_[i] | o.words_[i];
  return t;
}

TruthTable TruthTable::operator^(const TruthTable& o) const {
  if (num_vars_ != o.num_vars_) throw ValidationError("arity mismatch");
  TruthTable t(num_vars_);
  for (size_t i = 0; i < words_.size(); ++i) t.words_[i] = words_[i] ^ o.words_[i];
  return t;
}

uint32_t TruthTable::relevance_count(int var) const {
  check_var(var);
  uint32_t m = 1u << var, c = 0;
  for (uint32_t a = 0; a < size(); ++a)
    if (bit(a | m) != bit(a & ~m)) ++c;
  return c;
}

TruthTable TruthTable::project(int var, bool b) const {
  check_var(var);
  TruthTable t(num_vars_);
  uint32_t m = 1u << var;
  for (uint32_t a = 0; a < size(); ++a)
    t.set_bit(a, bit(b ? (a | m) : (a & ~m)));
  return t;
}

bool TruthTable::antisymmetric_in(int var) const {
  check_var(var);
  uint32_t m = 1u << var;
  for (uint32_t a = 0; a < size(); ++a)
    if (!(a & m) && bit(a) == bit(a | m)) return false;
  return true;
}

TruthTable TruthTable::antisymmetrize(int var) const {
  check_var(var);
  TruthTable high = project(var, true);
  TruthTable v = variable(num_vars_, var);
  return (v & high) | (v.complement() & high.complement());
}

int TruthTable::v_count() const {
  int c = 0;
  for (int i = 0; i < num_vars_; ++i)
    if (!antisymmetric_in(i)) ++c;
  return c;
}

size_t TruthTable::hash() const {
  size_t h = std::hash<int>()(num_vars_);
  for (uint64_t w : words_)
    h ^= std::hash<uint64_t>()(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

std::string TruthTable::to_bit_string() const {
  std::string s(size(), '0');
  for (uint32_t i = 0; i < size(); ++i)
    if (bit(i)) s[i] = '1';
  return s;
}

TruthTableRange::TruthTableRange(int num_vars) : num_vars_(num_vars) {
  if (num_vars < 0 || num_vars > 5)
    throw ValidationError("table enumeration supports num_vars <= 5");
  count_ = 1ull << (1u << num_vars);
}

TruthTable TruthTableRange::iterator::operator*() const {
  TruthTable t(num_vars_);
  for (uint32_t i = 0; i < t.size(); ++i)
    t.set_bit(i, (code_ >> i) & 1ull);
  return t;
}

}  // namespace iag
