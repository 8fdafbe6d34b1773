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

#ifndef IAG_RATIONAL_HPP_
#define IAG_RATIONAL_HPP_

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "iag/errors.hpp"

namespace iag {

// Exact arithmetic carrier for every probability, payoff and LP
// coefficient in the library.  cpp_rational keeps values reduced with a
// positive denominator, which is exactly the invariant we need.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

// a^e for nonnegative integer exponents, exact.
inline Rational rat_pow(const Rational& a, unsigned e) {
  using boost::multiprecision::pow;
  if (e == 0) return Rational(1);
  return Rational(pow(numerator(a), e), pow(denominator(a), e));
}

inline std::string to_string(const Rational& r) { return r.str(); }

// Parses `a/b` or an integer literal.  Decimal literals are rejected:
// they silently lose exactness, and every number in this library is
// meant to be exact.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ValidationError("empty rational literal");
  if (s.find('.') != std::string::npos ||
      s.find('e') != std::string::npos || s.find('E') != std::string::npos) {
    throw ValidationError("decimal literals are not accepted (use a/b): '" +
                          s + "'");
  }
  try {
    Rational r(s);
    return r;
  } catch (const std::exception&) {
    throw ValidationError("malformed rational literal: '" + s + "'");
  }
}

}  // namespace iag

#endif  // IAG_RATIONAL_HPP_
