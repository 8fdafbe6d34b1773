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

#ifndef IAG_FORMULA_HPP_
#define IAG_FORMULA_HPP_

#include <memory>
#include <string>
#include <string_view>

#include "iag/errors.hpp"
#include "iag/truth_table.hpp"

namespace iag {

// Parse tree for the input syntax.  The AST exists only at this
// boundary: everything downstream identifies a formula with its truth
// table.
//
// Grammar (ASCII only):
//   or   := xor ('|' xor)*
//   xor  := and ('^' and)*
//   and  := not ('&' not)*
//   not  := '!' not | atom
//   atom := 'v' digits | 'T' | 'F' | '(' or ')'
struct FormulaAst {
  enum class Kind { Var, Const, Not, And, Or, Xor };

  Kind kind;
  int var = 0;         // 1-based index, Kind::Var
  bool value = false;  // Kind::Const
  std::unique_ptr<FormulaAst> lhs, rhs;

  int max_var_index() const;
};

class ParseError : public ValidationError {
 public:
  ParseError(size_t position, const std::string& what)
      : ValidationError("parse error at position " +
                        std::to_string(position) + ": " + what),
        position_(position) {}
  size_t position() const { return position_; }

 private:
  size_t position_;
};

FormulaAst parse_formula(std::string_view text);

// Lowers the AST to an n-variable table, compositionally over the
// connectives.  Rejects variable indices above n.
TruthTable lower(const FormulaAst& ast, int num_vars);

// Convenience: parse and lower in one step.
TruthTable table_from_text(std::string_view text, int num_vars);

}  // namespace iag

#endif  // IAG_FORMULA_HPP_
