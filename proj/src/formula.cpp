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

#include "iag/formula.hpp"

#include <cctype>

namespace iag {

int FormulaAst::max_var_index() const {
  switch (kind) {
    case Kind::Var: return var;
    case Kind::Const: return 0;
    case Kind::Not: return lhs->max_var_index();
    default:
      return std::max(lhs->max_var_index(), rhs->max_var_index());
  }
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  FormulaAst parse() {
    FormulaAst ast = parse_or();
    skip_ws();
    if (pos_ != text_.size())
      throw ParseError(pos_, "unexpected trailing input");
    return ast;
  }

 private:
  static std::unique_ptr<FormulaAst> box(FormulaAst&& a) {
    return std::make_unique<FormulaAst>(std::move(a));
  }

  FormulaAst binary(FormulaAst::Kind kind, FormulaAst&& l, FormulaAst&& r) {
    FormulaAst a;
    a.kind = kind;
    a.lhs = box(std::move(l));
    a.rhs = box(std::move(r));
    return a;
  }

  FormulaAst parse_or() {
    FormulaAst l = parse_xor();
    while (peek() == '|') {
      ++pos_;
      l = binary(FormulaAst::Kind::Or, std::move(l), parse_xor());
    }
    return l;
  }

  FormulaAst parse_xor() {
    FormulaAst l = parse_and();
    while (peek() == '^') {
      ++pos_;
      l = binary(FormulaAst::Kind::Xor, std::move(l), parse_and());
    }
    return l;
  }

  FormulaAst parse_and() {
    FormulaAst l = parse_not();
    while (peek() == '&') {
      ++pos_;
      l = binary(FormulaAst::Kind::And, std::move(l), parse_not());
    }
    return l;
  }

  FormulaAst parse_not() {
    if (peek() == '!') {
      ++pos_;
      FormulaAst a;
      a.kind = FormulaAst::Kind::Not;
      a.lhs = box(parse_not());
      return a;
    }
    return parse_atom();
  }

  FormulaAst parse_atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      FormulaAst inner = parse_or();
      if (peek() != ')') throw ParseError(pos_, "expected ')'");
      ++pos_;
      return inner;
    }
    if (c == 'T' || c == 'F') {
      ++pos_;
      FormulaAst a;
      a.kind = FormulaAst::Kind::Const;
      a.value = (c == 'T');
      return a;
    }
    if (c == 'v') {
      size_t start = pos_++;
      size_t digits = 0;
      long idx = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        idx = idx * 10 + (text_[pos_] - '0');
        if (idx > TruthTable::kMaxVars)
          throw ParseError(start, "variable index too large");
        ++pos_;
        ++digits;
      }
      if (digits == 0) throw ParseError(start, "expected digits after 'v'");
      if (idx == 0) throw ParseError(start, "variable indices start at v1");
      FormulaAst a;
      a.kind = FormulaAst::Kind::Var;
      a.var = static_cast<int>(idx);
      return a;
    }
    throw ParseError(pos_, pos_ < text_.size()
                               ? std::string("unexpected character '") + c + "'"
                               : std::string("unexpected end of input"));
  }

  // Returns the next non-space character without consuming it, or '\0'.
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  std::string_view text_;
  size_t pos_ = 0;
};

}  // namespace

FormulaAst parse_formula(std::string_view text) { return Parser(text).parse(); }

TruthTable lower(const FormulaAst& ast, int num_vars) {
  switch (ast.kind) {
    case FormulaAst::Kind::Var:
      if (ast.var > num_vars)
        throw ValidationError("formula mentions v" + std::to_string(ast.var) +
                              " but only " + std::to_string(num_vars) +
                              " variables are declared");
      return TruthTable::variable(num_vars, ast.var - 1);
    case FormulaAst::Kind::Const:
      return TruthTable::constant(num_vars, ast.value);
    case FormulaAst::Kind::Not:
      return lower(*ast.lhs, num_vars).complement();
    case FormulaAst::Kind::And:
      return lower(*ast.lhs, num_vars) & lower(*ast.rhs, num_vars);
    case FormulaAst::Kind::Or:
      return lower(*ast.lhs, num_vars) | lower(*ast.rhs, num_vars);
    case FormulaAst::Kind::Xor:
      return lower(*ast.lhs, num_vars) ^ lower(*ast.rhs, num_vars);
  }
  throw InternalError("unreachable AST kind");
}

TruthTable table_from_text(std::string_view text, int num_vars) {
  return lower(parse_formula(text), num_vars);
}

}  // namespace iag
