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

#ifndef IAG_TRUTH_TABLE_HPP_
#define IAG_TRUTH_TABLE_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "iag/errors.hpp"

namespace iag {

// A truth assignment to variables v1..vn, packed into a bit mask.
// Bit i (0-based) holds the value of v_{i+1}; the mask doubles as the
// index of the assignment in a truth table.
class Assignment {
 public:
  Assignment(int num_vars, uint32_t bits) : num_vars_(num_vars), bits_(bits) {
    if (num_vars < 0 || (num_vars < 32 && bits >= (1u << num_vars)))
      throw ValidationError("assignment bits out of range for num_vars");
  }

  int num_vars() const { return num_vars_; }
  uint32_t bits() const { return bits_; }
  bool value(int var) const { return (bits_ >> var) & 1u; }
  Assignment with(int var, bool b) const {
    uint32_t m = 1u << var;
    return Assignment(num_vars_, b ? (bits_ | m) : (bits_ & ~m));
  }
  bool operator==(const Assignment& o) const {
    return num_vars_ == o.num_vars_ && bits_ == o.bits_;
  }
  std::string to_string() const;  // e.g. "{v1=T, v2=F}"

 private:
  int num_vars_;
  uint32_t bits_;
};

// A Boolean function of n variables as its 2^n-entry truth table.
// This is the semantic identity of a formula: two formulae are treated
// as the same object exactly when their tables coincide.  Bit at index
// a is the value of the function on the assignment encoded by a.
class TruthTable {
 public:
  static constexpr int kMaxVars = 16;

  explicit TruthTable(int num_vars);  // the constant-F table
  static TruthTable constant(int num_vars, bool value);
  static TruthTable variable(int num_vars, int var);
  static TruthTable xor_all(int num_vars);
  // For n <= 6 the whole table fits one machine word.
  static TruthTable from_bits(int num_vars, uint64_t bits);
  // Parses the 2^n-character 0/1 string, index-ascending.
  static TruthTable from_bit_string(int num_vars, std::string_view s);

  int num_vars() const { return num_vars_; }
  uint32_t size() const { return 1u << num_vars_; }

  bool bit(uint32_t index) const {
    return (words_[index >> 6] >> (index & 63u)) & 1u;
  }
  void set_bit(uint32_t index, bool value);
  bool eval(const Assignment& a) const;

  bool is_constant() const;
  uint32_t count_ones() const;
  uint64_t low_word() const { return words_[0]; }

  TruthTable complement() const;
  TruthTable operator&(const TruthTable& o) const;
  TruthTable operator|(const TruthTable& o) const;
  TruthTable operator^(const TruthTable& o) const;

  // |{A : f(A[v->T]) != f(A[v->F])}|, counted over all 2^n assignments.
  // This is the relevance measure that orders variables.
  uint32_t relevance_count(int var) const;
  // v_{i+1} is at most as relevant as v_{j+1}.
  bool relevance_leq(int i, int j) const {
    return relevance_count(i) <= relevance_count(j);
  }

  // f with v fixed to b; the result ignores v but keeps n variables.
  TruthTable project(int var, bool b) const;
  // f(A) == !f(A') whenever A, A' differ exactly at v.
  bool antisymmetric_in(int var) const;
  // (v & f[v->T]) | (!v & !f[v->T]); antisymmetric in v, and preserves
  // antisymmetry in every other variable.
  TruthTable antisymmetrize(int var) const;
  // Number of variables the function is not antisymmetric in.  Zero
  // exactly for the n-variable XOR and its negation.
  int v_count() const;
  bool is_xor_or_negation() const { return v_count() == 0; }

  bool operator==(const TruthTable& o) const {
    return num_vars_ == o.num_vars_ && words_ == o.words_;
  }
  bool operator!=(const TruthTable& o) const { return !(*this == o); }
  size_t hash() const;

  std::string to_bit_string() const;  // index-ascending 0/1 string

 private:
  void check_var(int var) const {
    if (var < 0 || var >= num_vars_)
      throw ValidationError("variable index out of range");
  }

  int num_vars_;
  std::vector<uint64_t> words_;
};

struct TruthTableHash {
  size_t operator()(const TruthTable& t) const { return t.hash(); }
};

// Yields every n-variable table exactly once, in increasing order of
// the table bits read as an integer.  Requires n <= 5 so the number of
// tables fits in 64 bits with room for the end sentinel.
class TruthTableRange {
 public:
  explicit TruthTableRange(int num_vars);

  class iterator {
   public:
    iterator(int num_vars, uint64_t code) : num_vars_(num_vars), code_(code) {}
    TruthTable operator*() const;
    iterator& operator++() { ++code_; return *this; }
    bool operator!=(const iterator& o) const { return code_ != o.code_; }

   private:
    int num_vars_;
    uint64_t code_;
  };

  iterator begin() const { return iterator(num_vars_, 0); }
  iterator end() const { return iterator(num_vars_, count_); }
  uint64_t count() const { return count_; }

 private:
  int num_vars_;
  uint64_t count_;
};

}  // namespace iag

#endif  // IAG_TRUTH_TABLE_HPP_
