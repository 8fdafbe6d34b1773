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
//
// iag — information-acquisition games over noisy Boolean tests.
//
// Subcommands: posterior, solve, ri, census, sample, complexity.
// Exact fractions are the primary output everywhere; decimals are
// printed as annotations.  Exit codes: 0 success, 1 usage/validation,
// 2 resource cap exceeded, 3 internal invariant violation.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "iag/census.hpp"
#include "iag/complexity.hpp"
#include "iag/errors.hpp"
#include "iag/formula.hpp"
#include "iag/game.hpp"
#include "iag/prob.hpp"
#include "iag/ri.hpp"

namespace {

using namespace iag;
using nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

struct FormulaArgs {
  std::string formula;
  std::string table_bits;
  int num_vars = -1;

  TruthTable table() const {
    if (num_vars < 0)
      throw ValidationError("the number of variables (-n) is required");
    if (!formula.empty() && !table_bits.empty())
      throw ValidationError("give either --formula or --table-bits, not both");
    if (!formula.empty()) return table_from_text(formula, num_vars);
    if (!table_bits.empty())
      return TruthTable::from_bit_string(num_vars, table_bits);
    throw ValidationError("a formula (-f) or table (--table-bits) is required");
  }
};

struct GameArgs {
  std::string prior = "uniform";
  std::string alpha = "1/4";
  std::string payoffs = "1,-16";

  ProductPrior make_prior(int n) const {
    if (prior == "uniform") return ProductPrior::uniform(n);
    std::vector<Rational> p = parse_list(prior, n, "prior");
    return ProductPrior(std::move(p));
  }
  AccuracyVector make_alpha(int n) const {
    std::vector<Rational> a = parse_list(alpha, n, "alpha");
    return AccuracyVector(std::move(a));
  }
  Payoffs make_payoffs() const {
    auto comma = payoffs.find(',');
    if (comma == std::string::npos)
      throw ValidationError("payoffs must look like g,b (e.g. 1,-16)");
    return Payoffs(parse_rational(payoffs.substr(0, comma)),
                   parse_rational(payoffs.substr(comma + 1)));
  }

  // Accepts a single rational (uniform across variables) or a
  // comma-separated list of exactly n rationals.
  static std::vector<Rational> parse_list(const std::string& text, int n,
                                          const char* what) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
    if (out.size() == 1) out.assign(n, out[0]);
    if (static_cast<int>(out.size()) != n)
      throw ValidationError(std::string(what) +
                            " needs one value or exactly n values");
    return out;
  }
};

std::vector<Rational> parse_grid(const std::string& text, int n) {
  if (text.empty()) return default_c_grid(n);
  std::vector<Rational> grid;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) grid.push_back(parse_rational(item));
  return grid;
}

std::string decimal(const Rational& r) {
  std::ostringstream os;
  os.precision(6);
  os << static_cast<double>(r);
  return os.str();
}

std::string frac(const Rational& r) {
  return r.str() + " (~" + decimal(r) + ")";
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw ValidationError("cannot open output file: " + out_path);
  f << text;
  if (!text.empty() && text.back() != '\n') f << "\n";
}

// ---------------------------------------------------------------------------
// posterior
// ---------------------------------------------------------------------------

int cmd_posterior(const FormulaArgs& fa, const GameArgs& ga,
                  const std::string& obs, const std::string& format,
                  const std::string& out) {
  TruthTable tt = fa.table();
  int n = tt.num_vars();
  ProductPrior prior = ga.make_prior(n);
  AccuracyVector alpha = ga.make_alpha(n);
  Payoffs pay = ga.make_payoffs();
  OutcomeCounts counts = OutcomeCounts::parse(obs, n);

  Rational p = posterior_formula(tt, prior, alpha, counts);
  ActionValue best = best_action(p, pay);
  Rational q = threshold(pay);

  if (format == "json") {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["posterior"] = p.str();
    j["posterior_decimal"] = static_cast<double>(p);
    j["threshold"] = q.str();
    j["best_action"] = to_string(best.action);
    j["guess_value"] = best.value.str();
    emit(j.dump(), out);
    return 0;
  }
  std::ostringstream os;
  os << "Pr(phi | S) = " << frac(p) << "\n"
     << "threshold q(b,g) = " << frac(q) << "\n"
     << "best action: " << to_string(best.action)
     << ", expected value " << frac(best.value) << "\n";
  emit(os.str(), out);
  return 0;
}

// ---------------------------------------------------------------------------
// solve
// ---------------------------------------------------------------------------

void render_strategy(std::ostream& os, const GameSpec& game,
                     const Strategy& s, const OutcomeCounts& c, int depth,
                     int max_depth, const std::string& indent) {
  if (depth == game.budget) {
    os << indent << "-> " << to_string(s.actions.at(c)) << "\n";
    return;
  }
  if (depth == max_depth) {
    os << indent << "...\n";
    return;
  }
  int var = s.tests.at(c);
  os << indent << "test v" << (var + 1) << "\n";
  for (bool outcome : {true, false}) {
    os << indent << (outcome ? " if T:" : " if F:") << "\n";
    render_strategy(os, game, s, c.with_observation(var, outcome), depth + 1,
                    max_depth, indent + "  ");
  }
}

int cmd_solve(const FormulaArgs& fa, const GameArgs& ga, int k,
              const std::string& heuristic, uint64_t mc_rounds, uint64_t seed,
              const std::string& format, const std::string& out) {
  TruthTable tt = fa.table();
  int n = tt.num_vars();
  GameSpec game(tt, ga.make_prior(n), k, ga.make_alpha(n), ga.make_payoffs());

  if (heuristic == "random") {
    Rational v = random_test_value(game);
    std::ostringstream os;
    if (format == "json") {
      ordered_json j;
      j["schema_version"] = kSchemaVersion;
      j["heuristic"] = "random";
      j["value"] = v.str();
      j["value_decimal"] = static_cast<double>(v);
      if (mc_rounds) {
        j["mc_estimate"] = random_test_value_mc(game, seed, mc_rounds);
        j["mc_rounds"] = mc_rounds;
        j["mc_seed"] = seed;
      }
      emit(j.dump(), out);
      return 0;
    }
    os << "random-test heuristic value = " << frac(v) << "\n";
    if (mc_rounds)
      os << "monte-carlo cross-check (" << mc_rounds << " rounds, seed "
         << seed << ") = " << random_test_value_mc(game, seed, mc_rounds)
         << "\n";
    emit(os.str(), out);
    return 0;
  }
  if (heuristic == "uniform") {
    Rational v = uniform_split_value(game);
    if (format == "json") {
      ordered_json j;
      j["schema_version"] = kSchemaVersion;
      j["heuristic"] = "uniform";
      j["value"] = v.str();
      j["value_decimal"] = static_cast<double>(v);
      emit(j.dump(), out);
      return 0;
    }
    emit("uniform-split value = " + frac(v), out);
    return 0;
  }
  if (!heuristic.empty())
    throw ValidationError("unknown heuristic: " + heuristic);

  SolveResult r = optimal_strategy(game);
  // Every first move attaining the optimum (ties are common; the
  // recorded strategy keeps the lowest index).
  std::vector<int> first_moves;
  for (int i = 0; k > 0 && i < n; ++i) {
    // The recorded decision map is total over canonical histories, so
    // forcing the first move and following it afterwards is exact.
    Rational vi = policy_value(game, [&](const OutcomeCounts& c) {
      return c.empty() ? i : r.strategy.tests.at(c);
    });
    if (vi == r.value) first_moves.push_back(i);
  }

  if (format == "json") {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["value"] = r.value.str();
    j["value_decimal"] = static_cast<double>(r.value);
    j["states"] = r.states_visited;
    ordered_json moves = ordered_json::array();
    for (int i : first_moves) moves.push_back(i + 1);
    j["first_moves"] = moves;
    emit(j.dump(), out);
    return 0;
  }
  std::ostringstream os;
  os << "optimal value = " << frac(r.value) << "\n";
  if (!first_moves.empty()) {
    os << "first moves attaining the optimum: ";
    for (size_t i = 0; i < first_moves.size(); ++i)
      os << (i ? ", " : "") << "v" << (first_moves[i] + 1);
    os << "\n";
  }
  os << "strategy (depth-limited):\n";
  render_strategy(os, game, r.strategy, OutcomeCounts(), 0, std::min(k, 3),
                  "  ");
  emit(os.str(), out);
  return 0;
}

// ---------------------------------------------------------------------------
// ri
// ---------------------------------------------------------------------------

int cmd_ri(const FormulaArgs& fa, const std::string& grid_text, bool closed,
           bool explain, const std::string& format, const std::string& out) {
  TruthTable tt = fa.table();
  RIOptions opts;
  opts.mode = closed ? TMinusMode::Closed : TMinusMode::StrictInterior;
  opts.collect_diagnostics = explain;
  std::vector<Rational> grid = parse_grid(grid_text, tt.num_vars());
  RIVerdict v = exhibits_ri(tt, grid, opts);

  if (format == "json") {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["verdict"] = v.exhibits() ? "ExhibitsRI" : "Unknown";
    if (v.witness_C) j["witness_C"] = v.witness_C->str();
    if (v.m_plus) j["m_plus"] = v.m_plus->str();
    if (v.diagnostics) {
      j["min_star"] = v.diagnostics->min_star.str();
      j["relevant_assignments"] = v.diagnostics->relevant_bits;
    }
    emit(j.dump(), out);
    return 0;
  }
  std::ostringstream os;
  os << "verdict: " << (v.exhibits() ? "ExhibitsRI" : "Unknown") << "\n";
  if (v.witness_C) os << "witness C = " << v.witness_C->str() << "\n";
  if (v.m_plus) os << "m+ = " << v.m_plus->str() << "\n";
  if (v.diagnostics) {
    os << "minimax power MIN* = " << v.diagnostics->min_star.str() << "\n";
    os << "relevant assignments:";
    for (uint32_t bits : v.diagnostics->relevant_bits)
      os << " " << Assignment(tt.num_vars(), bits).to_string();
    os << "\n";
    os << "inattentive LP minima (relevant assignments, smallest grid C):\n";
    for (const auto& row : v.diagnostics->inattentive) {
      os << "  A=" << Assignment(tt.num_vars(), row.assignment_bits).to_string()
         << " test v" << (row.i + 1) << " ignore v" << (row.j + 1) << ": "
         << (row.min ? row.min->str() : std::string("infeasible")) << "\n";
    }
    if (!v.diagnostics->regions.empty()) {
      os << "violation regions (empty = good):\n";
      for (const auto& row : v.diagnostics->regions)
        os << "  A="
           << Assignment(tt.num_vars(), row.assignment_bits).to_string()
           << " pivot v" << (row.i + 1) << ": "
           << (row.empty ? "empty" : "nonempty") << "\n";
    }
  }
  emit(os.str(), out);
  return 0;
}

// ---------------------------------------------------------------------------
// census / sample
// ---------------------------------------------------------------------------

int emit_census(const CensusReport& report, const std::string& format,
                const std::string& out) {
  if (format == "csv") {
    emit(CensusReport::csv_header() + "\n" + report.to_csv_row() + "\n", out);
    return 0;
  }
  if (format == "json" || format.empty()) {
    emit(report.to_json(), out);
    return 0;
  }
  std::ostringstream os;
  os << report.kind << " n=" << report.n << ": " << report.ri
     << " exhibit RI, " << report.unknown << " unknown (of " << report.total
     << ")\n";
  emit(os.str(), out);
  return 0;
}

int cmd_census(int n, const std::string& grid_text, bool closed, int jobs,
               bool per_class, const std::string& format,
               const std::string& out) {
  CensusParams p;
  p.n = n;
  p.c_grid = parse_grid(grid_text, n);
  p.mode = closed ? TMinusMode::Closed : TMinusMode::StrictInterior;
  p.jobs = jobs;
  p.per_class = per_class;
  auto start = std::chrono::steady_clock::now();
  std::cerr << "census n=" << n << " over " << (1ull << (1u << n))
            << " classes, " << resolve_jobs(jobs) << " workers...\n";
  CensusReport r = census(p);
  double secs = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  std::cerr << "done in " << secs << "s\n";
  return emit_census(r, format, out);
}

int cmd_sample(int n, uint64_t samples, uint64_t seed,
               const std::string& grid_text, bool closed, int jobs,
               const std::string& format, const std::string& out) {
  SampleParams p;
  p.n = n;
  p.samples = samples;
  p.seed = seed;
  p.c_grid = parse_grid(grid_text, n);
  p.mode = closed ? TMinusMode::Closed : TMinusMode::StrictInterior;
  p.jobs = jobs;
  auto start = std::chrono::steady_clock::now();
  std::cerr << "sampling " << samples << " tables at n=" << n << ", seed "
            << seed << ", " << resolve_jobs(jobs) << " workers...\n";
  CensusReport r = sample_census(p);
  double secs = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  std::cerr << "done in " << secs << "s\n";
  return emit_census(r, format, out);
}

// ---------------------------------------------------------------------------
// complexity
// ---------------------------------------------------------------------------

int cmd_complexity(const FormulaArgs& fa, const GameArgs& ga,
                   const std::string& q_text, int k_max, bool all, int jobs,
                   const std::string& format, const std::string& out) {
  Rational q = parse_rational(q_text);
  if (all) {
    if (fa.num_vars < 0)
      throw ValidationError("the number of variables (-n) is required");
    // The sweep is defined for the uniform prior and one shared
    // accuracy, matching the XOR-maximality statement.
    std::vector<Rational> alphas = GameArgs::parse_list(ga.alpha, 1, "alpha");
    SweepOptions opts;
    opts.jobs = jobs;
    auto start = std::chrono::steady_clock::now();
    CplSweep sweep = xor_maximality_check(fa.num_vars, alphas[0], q, k_max,
                                          opts);
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    std::cerr << "swept " << sweep.cpl.size() << " tables in " << secs
              << "s\n";
    if (format == "csv") {
      std::ostringstream os;
      os << "table_bits,cpl\n";
      for (uint64_t code = 0; code < sweep.cpl.size(); ++code) {
        TruthTable t = TruthTable::from_bits(fa.num_vars, code);
        os << t.to_bit_string() << "," << sweep.cpl[code] << "\n";
      }
      emit(os.str(), out);
      return 0;
    }
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["n"] = sweep.n;
    j["q"] = sweep.q.str();
    j["alpha"] = sweep.alpha.str();
    j["k_max"] = sweep.k_max;
    j["xor_cpl"] = sweep.xor_cpl;
    j["xor_is_max"] = sweep.xor_is_max;
    ordered_json dist = ordered_json::array();
    for (auto [cpl, count] : sweep.distribution)
      dist.push_back({{"cpl", cpl}, {"count", count}});
    j["distribution"] = dist;
    if (format == "json") {
      emit(j.dump(), out);
      return 0;
    }
    std::ostringstream os;
    os << "cpl sweep n=" << sweep.n << " q=" << sweep.q.str()
       << " alpha=" << sweep.alpha.str() << "\n";
    os << "XOR cpl = " << sweep.xor_cpl
       << (sweep.xor_is_max ? " (maximal)" : " (NOT maximal!)") << "\n";
    os << "distribution (cpl: classes):\n";
    for (auto [cpl, count] : sweep.distribution)
      os << "  " << cpl << ": " << count << "\n";
    emit(os.str(), out);
    return sweep.xor_is_max ? 0 : 3;
  }

  TruthTable tt = fa.table();
  int n = tt.num_vars();
  ComplexitySpec spec(tt, ga.make_prior(n), ga.make_alpha(n), q, k_max);
  CplResult r = test_complexity(spec);
  if (format == "json") {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["bounded"] = r.bounded;
    j[r.bounded ? "cpl" : "k_max"] = r.k;
    emit(j.dump(), out);
    return 0;
  }
  std::ostringstream os;
  if (r.bounded) os << "cpl = " << r.k << "\n";
  else os << "unbounded: no budget up to k_max = " << r.k
          << " admits a positive-value strategy\n";
  emit(os.str(), out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"information-acquisition games over noisy Boolean tests"};
  app.require_subcommand(1);

  FormulaArgs fa;
  GameArgs ga;
  std::string obs_text, format = "text", out_path, heuristic, grid_text,
              q_text = "15/34";
  int k = 2, k_max = 64, census_n = 2, jobs = 0;
  uint64_t samples = 4000, seed = 1, mc_rounds = 0;
  bool closed = false, explain = false, per_class = false, all = false;

  auto add_formula = [&](CLI::App* cmd) {
    cmd->add_option("-f,--formula", fa.formula,
                    "formula text, e.g. \"(v1|v2)&!v3\"");
    cmd->add_option("--table-bits", fa.table_bits,
                    "2^n-character 0/1 truth table, index-ascending");
    cmd->add_option("-n,--num-vars", fa.num_vars, "number of variables")
        ->required();
  };
  auto add_game = [&](CLI::App* cmd) {
    cmd->add_option("--prior", ga.prior,
                    "per-variable Pr(v_i=T): 'uniform' or rationals a/b,...");
    cmd->add_option("--alpha", ga.alpha,
                    "test accuracies: one rational or a comma list");
    cmd->add_option("--payoffs", ga.payoffs, "g,b with g > 0 > b");
  };
  auto add_output = [&](CLI::App* cmd, bool with_csv = false) {
    cmd->add_option("--format", format,
                    with_csv ? "text, json or csv" : "text or json");
    cmd->add_option("-o,--output", out_path, "output path (default stdout)");
  };

  CLI::App* posterior = app.add_subcommand(
      "posterior", "posterior of a formula given observations");
  add_formula(posterior);
  add_game(posterior);
  posterior->add_option("--obs", obs_text,
                        "observations, e.g. v1:T,v1:T or v2:F*3");
  add_output(posterior);

  CLI::App* solve = app.add_subcommand(
      "solve", "optimal game value and strategy by backward induction");
  add_formula(solve);
  add_game(solve);
  solve->add_option("-k,--budget", k, "number of tests")->required();
  solve->add_option("--heuristic", heuristic,
                    "evaluate a heuristic instead: random or uniform");
  solve->add_option("--mc", mc_rounds,
                    "Monte-Carlo cross-check rounds for --heuristic random");
  solve->add_option("--seed", seed, "Monte-Carlo seed");
  add_output(solve);

  CLI::App* ri = app.add_subcommand(
      "ri", "sufficient test for rational inattention via conflict LPs");
  add_formula(ri);
  ri->add_option("--c-grid", grid_text,
                 "constants C to try, descending (default 1/(2n)..1/(16n))");
  ri->add_flag("--closed-tminus", closed,
               "use the closed reading of the violation regions");
  ri->add_flag("--explain", explain, "print per-LP diagnostics");
  add_output(ri);

  CLI::App* census = app.add_subcommand(
      "census", "exhaustive RI census over all n-variable classes (n <= 4)");
  census->add_option("-n,--num-vars", census_n, "number of variables")
      ->required();
  census->add_option("--c-grid", grid_text, "constants C to try");
  census->add_flag("--closed-tminus", closed, "closed violation regions");
  census->add_option("-j,--jobs", jobs,
                     "worker threads (default: IAG_JOBS or OpenMP)");
  census->add_flag("--per-class", per_class, "include per-class verdicts");
  add_output(census, true);

  CLI::App* sample = app.add_subcommand(
      "sample", "sampled RI census over random classes (n <= 9)");
  sample->add_option("-n,--num-vars", census_n, "number of variables")
      ->required();
  sample->add_option("--samples", samples, "number of sampled tables");
  sample->add_option("--seed", seed, "SplitMix64 seed");
  sample->add_option("--c-grid", grid_text, "constants C to try");
  sample->add_flag("--closed-tminus", closed, "closed violation regions");
  sample->add_option("-j,--jobs", jobs, "worker threads");
  add_output(sample, true);

  CLI::App* complexity = app.add_subcommand(
      "complexity", "test complexity: least budget with positive value");
  add_formula(complexity);
  complexity->get_option("-f")->required(false);
  add_game(complexity);
  complexity->add_option("-q,--threshold", q_text,
                         "certainty threshold, 0 < q <= 1/2");
  complexity->add_option("--k-max", k_max, "search cap");
  complexity->add_flag("--all", all,
                       "sweep every table and check XOR maximality");
  complexity->add_option("-j,--jobs", jobs, "worker threads for --all");
  add_output(complexity, true);

  try {
    app.parse(argc, argv);
    if (posterior->parsed())
      return cmd_posterior(fa, ga, obs_text, format, out_path);
    if (solve->parsed())
      return cmd_solve(fa, ga, k, heuristic, mc_rounds, seed, format,
                       out_path);
    if (ri->parsed())
      return cmd_ri(fa, grid_text, closed, explain, format, out_path);
    if (census->parsed())
      return cmd_census(census_n, grid_text, closed, jobs, per_class, format,
                        out_path);
    if (sample->parsed())
      return cmd_sample(census_n, samples, seed, grid_text, closed, jobs,
                        format, out_path);
    if (complexity->parsed())
      return cmd_complexity(fa, ga, q_text, k_max, all, jobs, format,
                            out_path);
    return 1;
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const ResourceError& e) {
    std::cerr << "resource cap exceeded: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
