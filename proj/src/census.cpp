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

#include "iag/census.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include <omp.h>
#include <json.hpp>

#include "iag/errors.hpp"
#include "iag/table_orbit.hpp"

namespace iag {

namespace {

TruthTable table_from_words(int n, const std::vector<uint64_t>& words) {
  TruthTable t(n);
  uint32_t size = 1u << n;
  for (uint32_t i = 0; i < size; ++i)
    if ((words[i >> 6] >> (i & 63u)) & 1ull) t.set_bit(i, true);
  return t;
}

std::vector<Rational> grid_or_default(const std::vector<Rational>& grid,
                                      int n) {
  return grid.empty() ? default_c_grid(n) : grid;
}

std::vector<std::string> grid_strings(const std::vector<Rational>& grid) {
  std::vector<std::string> out;
  out.reserve(grid.size());
  for (const Rational& c : grid) out.push_back(c.str());
  return out;
}

const char* mode_name(TMinusMode mode) {
  return mode == TMinusMode::StrictInterior ? "strict" : "closed";
}

TMinusMode mode_from_name(const std::string& s) {
  if (s == "strict") return TMinusMode::StrictInterior;
  if (s == "closed") return TMinusMode::Closed;
  throw ValidationError("unknown t-minus mode: " + s);
}

}  // namespace

int resolve_jobs(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("IAG_JOBS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return omp_get_max_threads();
}

CensusReport census_serial(const CensusParams& params) {
  if (params.n < 0 || params.n > 4)
    throw ValidationError("exhaustive census supports n <= 4");
  auto grid = grid_or_default(params.c_grid, params.n);
  RIOptions opts;
  opts.mode = params.mode;

  CensusReport report;
  report.kind = "census";
  report.n = params.n;
  report.c_grid = grid_strings(grid);
  report.mode = mode_name(params.mode);
  if (params.per_class) report.per_class.emplace();

  for (const TruthTable& tt : TruthTableRange(params.n)) {
    bool ri = exhibits_ri(tt, grid, opts).exhibits();
    report.total += 1;
    (ri ? report.ri : report.unknown) += 1;
    if (report.per_class) report.per_class->push_back(ri ? 1 : 0);
  }
  return report;
}

CensusReport census(const CensusParams& params) {
  if (params.n < 0 || params.n > 4)
    throw ValidationError("exhaustive census supports n <= 4");
  auto grid = grid_or_default(params.c_grid, params.n);
  RIOptions opts;
  opts.mode = params.mode;
  const int jobs = resolve_jobs(params.jobs);
  const uint64_t count = 1ull << (1u << params.n);
  const TableOrbit orbit(params.n);

  // Verdicts are orbit-invariant, so classify one representative per
  // orbit and spread the answer along the orbit afterwards.
  std::vector<uint32_t> canon(count);
#pragma omp parallel for schedule(static) num_threads(jobs)
  for (int64_t code = 0; code < static_cast<int64_t>(count); ++code)
    canon[code] = static_cast<uint32_t>(orbit.canonical(code));

  std::vector<uint32_t> reps(canon.begin(), canon.end());
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());

  std::vector<uint8_t> rep_verdict(reps.size());
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
  for (int64_t r = 0; r < static_cast<int64_t>(reps.size()); ++r) {
    TruthTable tt = TruthTable::from_bits(params.n, reps[r]);
    rep_verdict[r] = exhibits_ri(tt, grid, opts).exhibits() ? 1 : 0;
  }

  CensusReport report;
  report.kind = "census";
  report.n = params.n;
  report.total = count;
  report.c_grid = grid_strings(grid);
  report.mode = mode_name(params.mode);
  if (params.per_class) report.per_class.emplace(count, 0);

  uint64_t ri = 0;
  for (uint64_t code = 0; code < count; ++code) {
    size_t r = std::lower_bound(reps.begin(), reps.end(), canon[code]) -
               reps.begin();
    if (rep_verdict[r]) {
      ++ri;
      if (report.per_class) (*report.per_class)[code] = 1;
    }
  }
  report.ri = ri;
  report.unknown = count - ri;
  return report;
}

namespace {

// SplitMix64 (Steele, Lea, Flood 2014): the fixed, documented sampling
// generator.  Successive outputs fill the table words.
struct SplitMix64 {
  uint64_t state;
  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
};

}  // namespace

CensusReport sample_census(const SampleParams& params) {
  if (params.n < 1 || params.n > 9)
    throw ValidationError("sampling supports 1 <= n <= 9");
  if (params.samples == 0)
    throw ValidationError("need at least one sample");
  auto grid = grid_or_default(params.c_grid, params.n);
  RIOptions opts;
  opts.mode = params.mode;
  const int jobs = resolve_jobs(params.jobs);
  const uint32_t size = 1u << params.n;
  const size_t words_per_table = (size + 63u) / 64u;

  // Draw every table up front in sample order; the parallel phase
  // then cannot perturb the stream.
  SplitMix64 rng{params.seed};
  std::vector<std::vector<uint64_t>> tables(params.samples);
  for (auto& words : tables) {
    words.resize(words_per_table);
    for (auto& w : words) w = rng.next();
    uint32_t tail = size & 63u;
    if (tail) words.back() &= (1ull << tail) - 1;
  }

  std::vector<uint8_t> verdicts(params.samples);
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
  for (int64_t s = 0; s < static_cast<int64_t>(params.samples); ++s) {
    TruthTable tt = table_from_words(params.n, tables[s]);
    verdicts[s] = exhibits_ri(tt, grid, opts).exhibits() ? 1 : 0;
  }

  CensusReport report;
  report.kind = "sample";
  report.n = params.n;
  report.total = params.samples;
  report.c_grid = grid_strings(grid);
  report.mode = mode_name(params.mode);
  report.seed = params.seed;
  for (uint8_t v : verdicts) report.ri += v;
  report.unknown = report.total - report.ri;
  // 95% normal-approximation half-width z * sqrt(p(1-p)/N); at worst
  // (p = 1/2, N = 4000) this is about 0.015.
  double p = static_cast<double>(report.ri) / static_cast<double>(report.total);
  report.ci_halfwidth =
      1.96 * std::sqrt(p * (1.0 - p) / static_cast<double>(report.total));
  return report;
}

std::string CensusReport::to_json() const {
  nlohmann::ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = kind;
  j["n"] = n;
  j["total"] = total;
  j["ri"] = ri;
  j["unknown"] = unknown;
  j["params"]["c_grid"] = c_grid;
  j["params"]["mode"] = mode;
  if (seed) j["seed"] = *seed;
  if (ci_halfwidth) j["ci_halfwidth"] = *ci_halfwidth;
  if (per_class) j["per_class"] = *per_class;
  return j.dump();
}

CensusReport CensusReport::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw ValidationError(std::string("bad census JSON: ") + e.what());
  }
  if (!j.contains("schema_version") || j["schema_version"] != kSchemaVersion)
    throw ValidationError("unsupported census schema version");
  CensusReport r;
  r.kind = j.at("kind").get<std::string>();
  r.n = j.at("n").get<int>();
  r.total = j.at("total").get<uint64_t>();
  r.ri = j.at("ri").get<uint64_t>();
  r.unknown = j.at("unknown").get<uint64_t>();
  r.c_grid = j.at("params").at("c_grid").get<std::vector<std::string>>();
  r.mode = j.at("params").at("mode").get<std::string>();
  mode_from_name(r.mode);  // validate
  if (j.contains("seed")) r.seed = j["seed"].get<uint64_t>();
  if (j.contains("ci_halfwidth")) r.ci_halfwidth = j["ci_halfwidth"].get<double>();
  if (j.contains("per_class"))
    r.per_class = j["per_class"].get<std::vector<uint8_t>>();
  return r;
}

std::string CensusReport::csv_header() { return "n,ri,unknown"; }

std::string CensusReport::to_csv_row() const {
  return std::to_string(n) + "," + std::to_string(ri) + "," +
         std::to_string(unknown);
}

}  // namespace iag
