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

#include "iag/lp.hpp"

#include <sstream>

#include "iag/errors.hpp"

namespace iag {

LinearProgram LinearProgram::make(int num_vars, Sense sense) {
  LinearProgram lp;
  lp.num_vars = num_vars;
  lp.sense = sense;
  lp.objective.assign(num_vars, Rational(0));
  lp.lower.assign(num_vars, Rational(0));
  lp.upper.assign(num_vars, std::nullopt);
  return lp;
}

void LinearProgram::add(std::vector<Rational> coeffs, Relation rel,
                        Rational rhs) {
  if (static_cast<int>(coeffs.size()) != num_vars)
    throw ValidationError("constraint coefficient count mismatch");
  constraints.push_back({std::move(coeffs), rel, std::move(rhs)});
}

namespace {

// Dense simplex tableau in standard form: rows Ay = b with b >= 0 and
// y >= 0, plus a maintained reduced-cost row.  Column order is fixed,
// which together with Bland's rule makes the solver deterministic.
class Tableau {
 public:
  Tableau(int rows, int cols)
      : m_(rows), n_(cols), a_(rows, std::vector<Rational>(cols + 1)),
        obj_(cols + 1), basis_(rows, -1) {}

  Rational& at(int r, int c) { return a_[r][c]; }
  Rational& rhs(int r) { return a_[r][n_]; }
  int basis(int r) const { return basis_[r]; }
  void set_basis(int r, int c) { basis_[r] = c; }

  // Installs the cost vector and prices out the current basis.
  void load_costs(const std::vector<Rational>& c) {
    for (int j = 0; j <= n_; ++j) obj_[j] = (j < n_) ? c[j] : Rational(0);
    for (int r = 0; r < m_; ++r) {
      const Rational& cb = c[basis_[r]];
      if (cb == 0) continue;
      for (int j = 0; j <= n_; ++j) obj_[j] -= cb * a_[r][j];
    }
  }

  // Minimises the loaded cost row.  `allowed` masks columns that may
  // enter the basis.  Returns false when unbounded.
  bool run(const std::vector<char>& allowed) {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < n_; ++j) {
        if (allowed[j] && obj_[j] < 0) { enter = j; break; }  // Bland
      }
      if (enter < 0) return true;
      int leave = -1;
      Rational best;
      for (int r = 0; r < m_; ++r) {
        if (a_[r][enter] <= 0) continue;
        Rational ratio = a_[r][n_] / a_[r][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis_[r] < basis_[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }

  void pivot(int r, int c) {
    Rational inv = a_[r][c];
    for (int j = 0; j <= n_; ++j) a_[r][j] /= inv;
    for (int i = 0; i < m_; ++i) {
      if (i == r || a_[i][c] == 0) continue;
      Rational f = a_[i][c];
      for (int j = 0; j <= n_; ++j) a_[i][j] -= f * a_[r][j];
    }
    if (obj_[c] != 0) {
      Rational f = obj_[c];
      for (int j = 0; j <= n_; ++j) obj_[j] -= f * a_[r][j];
    }
    basis_[r] = c;
  }

  // Current objective (the row tracks its negation in the rhs slot).
  Rational objective_value() const { return -obj_[n_]; }

  // Value of column c in the current basic solution.
  Rational column_value(int c) const {
    for (int r = 0; r < m_; ++r)
      if (basis_[r] == c) return a_[r][n_];
    return Rational(0);
  }

  int rows() const { return m_; }
  int cols() const { return n_; }

  // Removes row r (used for redundant rows left over from phase 1).
  void drop_row(int r) {
    a_.erase(a_.begin() + r);
    basis_.erase(basis_.begin() + r);
    --m_;
  }

  const std::vector<Rational>& row(int r) const { return a_[r]; }

 private:
  int m_, n_;
  std::vector<std::vector<Rational>> a_;
  std::vector<Rational> obj_;
  std::vector<int> basis_;
};

struct VarMap {
  // Column(s) representing original variable j after substitution.
  int pos_col;            // y >= 0 part
  int neg_col;            // second column for free variables, else -1
  Rational shift;         // x = shift + y (finite lower bound)
};

}  // namespace

LPSolution solve(const LinearProgram& lp) {
  const int n = lp.num_vars;
  if (n <= 0) throw ValidationError("LP must have at least one variable");
  if (static_cast<int>(lp.objective.size()) != n ||
      static_cast<int>(lp.lower.size()) != n ||
      static_cast<int>(lp.upper.size()) != n)
    throw ValidationError("LP field sizes inconsistent with num_vars");

  // Substitute bounds away: x = shift + y with y >= 0, or x = y+ - y-
  // for free variables.  Upper bounds become ordinary rows.
  std::vector<VarMap> vmap(n);
  int cols = 0;
  for (int j = 0; j < n; ++j) {
    if (lp.lower[j]) {
      vmap[j] = {cols++, -1, *lp.lower[j]};
    } else {
      vmap[j] = {cols, cols + 1, Rational(0)};
      cols += 2;
    }
  }

  struct Row { std::vector<Rational> a; Relation rel; Rational b; };
  std::vector<Row> rows;
  auto add_row = [&](const std::vector<Rational>& coeffs, Relation rel,
                     const Rational& rhs) {
    Row row{std::vector<Rational>(cols, Rational(0)), rel, rhs};
    for (int j = 0; j < n; ++j) {
      if (coeffs[j] == 0) continue;
      row.a[vmap[j].pos_col] += coeffs[j];
      if (vmap[j].neg_col >= 0) row.a[vmap[j].neg_col] -= coeffs[j];
      row.b -= coeffs[j] * vmap[j].shift;
    }
    rows.push_back(std::move(row));
  };

  for (const auto& c : lp.constraints) add_row(c.coeffs, c.rel, c.rhs);
  for (int j = 0; j < n; ++j) {
    if (!lp.upper[j]) continue;
    std::vector<Rational> coeffs(n, Rational(0));
    coeffs[j] = 1;
    add_row(coeffs, Relation::LE, *lp.upper[j]);
  }

  // Normalise to b >= 0, then append slack/surplus and artificials.
  const int m = static_cast<int>(rows.size());
  int slack_cols = 0, art_cols = 0;
  for (auto& row : rows) {
    if (row.b < 0) {
      for (auto& v : row.a) v = -v;
      row.b = -row.b;
      if (row.rel == Relation::LE) row.rel = Relation::GE;
      else if (row.rel == Relation::GE) row.rel = Relation::LE;
    }
    if (row.rel != Relation::EQ) ++slack_cols;
    if (row.rel != Relation::LE) ++art_cols;
  }

  const int total = cols + slack_cols + art_cols;
  Tableau t(m, total);
  int next_slack = cols, next_art = cols + slack_cols;
  std::vector<char> is_artificial(total, 0);
  for (int r = 0; r < m; ++r) {
    for (int j = 0; j < cols; ++j) t.at(r, j) = rows[r].a[j];
    t.rhs(r) = rows[r].b;
    switch (rows[r].rel) {
      case Relation::LE:
        t.at(r, next_slack) = 1;
        t.set_basis(r, next_slack++);
        break;
      case Relation::GE:
        t.at(r, next_slack++) = -1;
        t.at(r, next_art) = 1;
        is_artificial[next_art] = 1;
        t.set_basis(r, next_art++);
        break;
      case Relation::EQ:
        t.at(r, next_art) = 1;
        is_artificial[next_art] = 1;
        t.set_basis(r, next_art++);
        break;
    }
  }

  std::vector<char> allow_all(total, 1);

  // Phase 1: drive the artificials to zero.
  if (art_cols > 0) {
    std::vector<Rational> phase1(total, Rational(0));
    for (int j = 0; j < total; ++j)
      if (is_artificial[j]) phase1[j] = 1;
    t.load_costs(phase1);
    if (!t.run(allow_all))
      throw InternalError("phase-1 LP cannot be unbounded");
    if (t.objective_value() != 0)
      return {LPStatus::Infeasible, Rational(0), {}};

    // Pivot leftover artificials out of the basis; rows that cannot be
    // pivoted are redundant and dropped.
    for (int r = t.rows() - 1; r >= 0; --r) {
      if (!is_artificial[t.basis(r)]) continue;
      int c = -1;
      for (int j = 0; j < total; ++j) {
        if (!is_artificial[j] && t.row(r)[j] != 0) { c = j; break; }
      }
      if (c >= 0) t.pivot(r, c);
      else t.drop_row(r);
    }
  }

  // Phase 2 on the real objective (artificials barred from entering).
  std::vector<Rational> cost(total, Rational(0));
  const bool maximize = lp.sense == Sense::Maximize;
  for (int j = 0; j < n; ++j) {
    Rational cj = maximize ? -lp.objective[j] : lp.objective[j];
    cost[vmap[j].pos_col] += cj;
    if (vmap[j].neg_col >= 0) cost[vmap[j].neg_col] -= cj;
  }
  std::vector<char> allowed(total, 1);
  for (int j = 0; j < total; ++j)
    if (is_artificial[j]) allowed[j] = 0;
  t.load_costs(cost);
  if (!t.run(allowed)) return {LPStatus::Unbounded, Rational(0), {}};

  // Reconstruct the original point and recompute the objective from
  // the input data; the tableau value is only cross-checked in tests.
  std::vector<Rational> point(n);
  Rational value(0);
  for (int j = 0; j < n; ++j) {
    point[j] = vmap[j].shift + t.column_value(vmap[j].pos_col);
    if (vmap[j].neg_col >= 0) point[j] -= t.column_value(vmap[j].neg_col);
    value += lp.objective[j] * point[j];
  }
  return {LPStatus::Optimal, value, std::move(point)};
}

bool satisfies(const LinearProgram& lp, const std::vector<Rational>& point) {
  if (static_cast<int>(point.size()) != lp.num_vars) return false;
  for (int j = 0; j < lp.num_vars; ++j) {
    if (lp.lower[j] && point[j] < *lp.lower[j]) return false;
    if (lp.upper[j] && point[j] > *lp.upper[j]) return false;
  }
  for (const auto& c : lp.constraints) {
    Rational lhs(0);
    for (int j = 0; j < lp.num_vars; ++j) lhs += c.coeffs[j] * point[j];
    switch (c.rel) {
      case Relation::LE: if (lhs > c.rhs) return false; break;
      case Relation::EQ: if (lhs != c.rhs) return false; break;
      case Relation::GE: if (lhs < c.rhs) return false; break;
    }
  }
  return true;
}

std::string dump(const LinearProgram& lp) {
  std::ostringstream os;
  auto term = [&](const std::vector<Rational>& coeffs) {
    bool first = true;
    for (int j = 0; j < lp.num_vars; ++j) {
      if (coeffs[j] == 0) continue;
      if (!first) os << " + ";
      os << coeffs[j].str() << "*x" << (j + 1);
      first = false;
    }
    if (first) os << "0";
  };
  os << (lp.sense == Sense::Minimize ? "minimise " : "maximise ");
  term(lp.objective);
  os << "\nsubject to\n";
  for (const auto& c : lp.constraints) {
    os << "  ";
    term(c.coeffs);
    os << (c.rel == Relation::LE ? " <= " : c.rel == Relation::EQ ? " = " : " >= ");
    os << c.rhs.str() << "\n";
  }
  for (int j = 0; j < lp.num_vars; ++j) {
    os << "  x" << (j + 1) << " in ["
       << (lp.lower[j] ? lp.lower[j]->str() : std::string("-inf")) << ", "
       << (lp.upper[j] ? lp.upper[j]->str() : std::string("+inf")) << "]\n";
  }
  return os.str();
}

bool nonstrict_region_empty(int num_vars,
                            const std::vector<LinearConstraint>& constraints) {
  // minimise s over {f_i(x) <= c_i + s}; empty iff min s > 0.  EQ and
  // GE rows are rewritten as <= rows first so every row receives s.
  LinearProgram lp = LinearProgram::make(num_vars + 1, Sense::Minimize);
  for (int j = 0; j < num_vars; ++j) lp.set_free(j);
  lp.set_free(num_vars);
  lp.objective[num_vars] = 1;
  auto add_le = [&](std::vector<Rational> coeffs, Rational rhs) {
    coeffs.push_back(Rational(-1));  // ... - s <= rhs
    lp.add(std::move(coeffs), Relation::LE, std::move(rhs));
  };
  for (const auto& c : constraints) {
    std::vector<Rational> pos = c.coeffs, neg(c.coeffs.size());
    for (size_t j = 0; j < neg.size(); ++j) neg[j] = -c.coeffs[j];
    switch (c.rel) {
      case Relation::LE: add_le(std::move(pos), c.rhs); break;
      case Relation::GE: add_le(std::move(neg), -c.rhs); break;
      case Relation::EQ:
        add_le(std::move(pos), c.rhs);
        add_le(std::move(neg), -c.rhs);
        break;
    }
  }
  LPSolution s = solve(lp);
  if (s.status == LPStatus::Unbounded) return false;
  if (s.status != LPStatus::Optimal)
    throw InternalError("slack LP must be feasible");
  return s.value > 0;
}

StrictProbe strict_interior_probe(int num_vars,
                                  const std::vector<LinearConstraint>& base,
                                  const std::vector<LinearConstraint>& strict) {
  LinearProgram lp = LinearProgram::make(num_vars + 1, Sense::Maximize);
  for (int j = 0; j < num_vars; ++j) lp.set_free(j);
  const int eps = num_vars;  // margin variable, >= 0
  lp.objective[eps] = 1;
  for (const auto& c : base) {
    std::vector<Rational> coeffs = c.coeffs;
    coeffs.push_back(Rational(0));
    lp.add(std::move(coeffs), c.rel, c.rhs);
  }
  for (const auto& c : strict) {
    if (c.rel == Relation::EQ)
      throw ValidationError("strict equality constraints are meaningless");
    std::vector<Rational> coeffs = c.coeffs;
    // f <= rhs - eps  /  f >= rhs + eps
    coeffs.push_back(c.rel == Relation::LE ? Rational(1) : Rational(-1));
    lp.add(std::move(coeffs), c.rel, c.rhs);
  }
  LPSolution s = solve(lp);
  if (s.status == LPStatus::Infeasible)
    return {false, Rational(0), {}};
  if (s.status == LPStatus::Unbounded) {
    // eps unbounded above: any large value certifies the interior, but
    // there is no finite optimum to report.  Re-solve with a cap to
    // produce a witness point.
    LinearProgram capped = lp;
    capped.set_upper(eps, Rational(1));
    LPSolution c = solve(capped);
    c.point.resize(num_vars);
    return {true, c.value, std::move(c.point)};
  }
  bool nonempty = s.value > 0;
  s.point.resize(num_vars);
  return {nonempty, s.value, nonempty ? std::move(s.point)
                                      : std::vector<Rational>{}};
}

}  // namespace iag
