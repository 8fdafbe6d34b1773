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

#ifndef IAG_LP_HPP_
#define IAG_LP_HPP_

#include <optional>
#include <string>
#include <vector>

#include "iag/rational.hpp"

namespace iag {

enum class Relation { LE, EQ, GE };
enum class Sense { Minimize, Maximize };

struct LinearConstraint {
  std::vector<Rational> coeffs;
  Relation rel;
  Rational rhs;
};

// An LP over exact rationals.  Variables default to a lower bound of 0
// and no upper bound; set_free removes the lower bound.  The problems
// in this library are tiny (a handful of variables, at most a few
// dozen rows), so everything is dense.
struct LinearProgram {
  int num_vars = 0;
  Sense sense = Sense::Minimize;
  std::vector<Rational> objective;
  std::vector<std::optional<Rational>> lower;  // nullopt = free
  std::vector<std::optional<Rational>> upper;
  std::vector<LinearConstraint> constraints;

  static LinearProgram make(int num_vars, Sense sense);
  void add(std::vector<Rational> coeffs, Relation rel, Rational rhs);
  void set_free(int var) { lower.at(var).reset(); }
  void set_lower(int var, Rational l) { lower.at(var) = std::move(l); }
  void set_upper(int var, Rational u) { upper.at(var) = std::move(u); }
};

enum class LPStatus { Optimal, Infeasible, Unbounded };

// When Optimal, `point` satisfies every constraint exactly and
// objective(point) == value.
struct LPSolution {
  LPStatus status;
  Rational value;
  std::vector<Rational> point;
};

// Primal simplex over exact rationals, two phases, Bland's rule for
// anti-cycling.  Deterministic: identical input yields identical
// status, value and point.
LPSolution solve(const LinearProgram& lp);

// Exact check, no tolerances; used by tests and assertions.
bool satisfies(const LinearProgram& lp, const std::vector<Rational>& point);

// Plain-text rendering ("minimise ..., subject to ...") for bug reports.
std::string dump(const LinearProgram& lp);

// Emptiness of {x : all constraints hold}, variables unrestricted
// beyond the given rows.  Decided by minimising a uniform slack s over
// {f_i(x) <= c_i + s}: the region is empty iff min s > 0.
bool nonstrict_region_empty(int num_vars,
                            const std::vector<LinearConstraint>& constraints);

struct StrictProbe {
  bool nonempty;
  Rational margin;               // best achievable uniform margin
  std::vector<Rational> point;   // witness when nonempty
};

// Decides whether some point satisfies `base` and every constraint in
// `strict` strictly.  A single margin variable eps is inserted into
// each strict row (f <= c becomes f <= c - eps, f >= c becomes
// f >= c + eps) and maximised; the strict region is nonempty iff the
// optimum eps is positive.  EQ rows are not allowed in `strict`.
StrictProbe strict_interior_probe(int num_vars,
                                  const std::vector<LinearConstraint>& base,
                                  const std::vector<LinearConstraint>& strict);

inline bool strict_interior_nonempty(
    int num_vars, const std::vector<LinearConstraint>& base,
    const std::vector<LinearConstraint>& strict) {
  return strict_interior_probe(num_vars, base, strict).nonempty;
}

}  // namespace iag

#endif  // IAG_LP_HPP_
