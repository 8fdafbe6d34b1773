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

#ifndef IAG_CENSUS_HPP_
#define IAG_CENSUS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "iag/rational.hpp"
#include "iag/ri.hpp"

namespace iag {

struct CensusParams {
  int n = 2;
  std::vector<Rational> c_grid;  // empty: default grid for n
  TMinusMode mode = TMinusMode::StrictInterior;
  int jobs = 0;                  // 0: IAG_JOBS env var, else OpenMP default
  bool per_class = false;        // include one verdict per table code
};

// Result of an exhaustive or sampled RI census.  Deliberately contains
// no runtime statistics: the report depends only on (n, grid, mode,
// seed, samples), never on worker count, and serialises byte-stably.
struct CensusReport {
  static constexpr int kSchemaVersion = 1;

  std::string kind;  // "census" or "sample"
  int n = 0;
  uint64_t total = 0;  // classes examined (sampled draws for "sample")
  uint64_t ri = 0;
  uint64_t unknown = 0;
  std::vector<std::string> c_grid;
  std::string mode;  // "strict" or "closed"
  std::optional<uint64_t> seed;              // sample only
  std::optional<double> ci_halfwidth;        // sample only, 95% normal approx
  std::optional<std::vector<uint8_t>> per_class;  // 1 = ExhibitsRI

  std::string to_json() const;
  static CensusReport from_json(const std::string& text);
  // One row per report, mirroring the published tables: n,ri,unknown.
  std::string to_csv_row() const;
  static std::string csv_header();
};

// Exhaustive census over all 2^(2^n) table classes, n <= 4.
// OpenMP-parallel with orbit reduction; the verdict per class comes
// from exhibits_ri and the counts are aggregated order-independently,
// so the result does not depend on the worker count.
CensusReport census(const CensusParams& params);

// Serial reference: a plain loop over every table, no symmetry
// reduction, no threads.  Kept for testing and benchmarking.
CensusReport census_serial(const CensusParams& params);

struct SampleParams {
  int n = 5;
  uint64_t samples = 4000;
  uint64_t seed = 1;
  std::vector<Rational> c_grid;  // empty: default grid for n
  TMinusMode mode = TMinusMode::StrictInterior;
  int jobs = 0;
};

// Uniform sample of table classes with replacement, n <= 9.  The
// generator is SplitMix64 (Steele et al.), fixed here so reports
// reproduce bit-for-bit across platforms; draws happen up front in
// sample order, solving is parallel.
CensusReport sample_census(const SampleParams& params);

// Resolves a jobs request: positive value wins, then the IAG_JOBS
// environment variable, then the OpenMP default.
int resolve_jobs(int requested);

}  // namespace iag

#endif  // IAG_CENSUS_HPP_
