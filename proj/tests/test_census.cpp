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

#include <doctest.h>

#include "iag/census.hpp"
#include "iag/table_orbit.hpp"

using namespace iag;

TEST_CASE("orbit reduction is a sound equivalence") {
  for (int n = 1; n <= 3; ++n) {
    TableOrbit orbit(n);
    uint64_t count = 1ull << (1u << n);
    for (uint64_t code = 0; code < count; ++code) {
      uint64_t canon = orbit.canonical(code);
      CHECK(canon <= code);
      CHECK(orbit.canonical(canon) == canon);  // idempotent
      // complement stays in the orbit
      uint64_t mask = count - 1;
      CHECK(orbit.canonical((~code) & mask) == canon);
    }
  }
}

TEST_CASE("exhaustive census rows") {
  for (auto [n, ri, unknown] :
       {std::tuple<int, uint64_t, uint64_t>{1, 0, 4},
        {2, 8, 8},
        {3, 40, 216}}) {
    CensusParams p;
    p.n = n;
    CensusReport serial = census_serial(p);
    CHECK(serial.ri == ri);
    CHECK(serial.unknown == unknown);
    CHECK(serial.total == ri + unknown);
    CensusReport parallel = census(p);
    CHECK(parallel.ri == ri);
    CHECK(parallel.unknown == unknown);
  }
}

TEST_CASE("worker count never changes the report") {
  CensusParams p;
  p.n = 2;
  p.jobs = 1;
  std::string one = census(p).to_json();
  for (int jobs : {2, 3, 5}) {
    p.jobs = jobs;
    CHECK(census(p).to_json() == one);
  }
}

TEST_CASE("per-class verdicts agree between serial and parallel") {
  CensusParams p;
  p.n = 2;
  p.per_class = true;
  CensusReport serial = census_serial(p);
  CensusReport parallel = census(p);
  REQUIRE(serial.per_class.has_value());
  REQUIRE(parallel.per_class.has_value());
  CHECK(*serial.per_class == *parallel.per_class);
  // disjunction 0111 is class 14 (bit i of the code = table entry i)
  CHECK((*serial.per_class)[0b1110] == 1);
  CHECK((*serial.per_class)[0b0110] == 0);  // XOR
}

TEST_CASE("sampling is deterministic and seed-sensitive") {
  SampleParams p;
  p.n = 3;
  p.samples = 60;
  p.seed = 42;
  CensusReport a = sample_census(p);
  CensusReport b = sample_census(p);
  CHECK(a.to_json() == b.to_json());
  CHECK(a.total == 60);
  CHECK(a.ri + a.unknown == 60);
  p.jobs = 2;
  CHECK(sample_census(p).to_json() == a.to_json());

  p.seed = 43;
  p.jobs = 0;
  CensusReport c = sample_census(p);
  CHECK(c.to_json() != a.to_json());

  SampleParams bad;
  bad.samples = 0;
  CHECK_THROWS_AS(sample_census(bad), ValidationError);
}

TEST_CASE("sampled fractions track the exhaustive fractions") {
  // At n=3 the sampled estimate must hover near 40/256.
  SampleParams p;
  p.n = 3;
  p.samples = 600;
  p.seed = 7;
  CensusReport r = sample_census(p);
  double fraction = double(r.ri) / double(r.total);
  CHECK(fraction > 0.09);
  CHECK(fraction < 0.23);
  REQUIRE(r.ci_halfwidth.has_value());
  CHECK(*r.ci_halfwidth > 0);
  CHECK(*r.ci_halfwidth < 0.05);
}

TEST_CASE("reports round-trip through JSON byte-identically") {
  CensusParams p;
  p.n = 2;
  p.per_class = true;
  CensusReport r = census(p);
  std::string json = r.to_json();
  CHECK(CensusReport::from_json(json).to_json() == json);

  SampleParams sp;
  sp.n = 3;
  sp.samples = 25;
  sp.seed = 5;
  CensusReport s = sample_census(sp);
  std::string sjson = s.to_json();
  CHECK(CensusReport::from_json(sjson).to_json() == sjson);

  CHECK_THROWS_AS(CensusReport::from_json("{"), ValidationError);
  CHECK_THROWS_AS(CensusReport::from_json("{\"schema_version\":99}"),
                  ValidationError);
}

TEST_CASE("csv rows mirror the published table shape") {
  CensusParams p;
  p.n = 2;
  CensusReport r = census(p);
  CHECK(CensusReport::csv_header() == "n,ri,unknown");
  CHECK(r.to_csv_row() == "2,8,8");
}

TEST_CASE("argument validation") {
  CensusParams p;
  p.n = 5;
  CHECK_THROWS_AS(census(p), ValidationError);
  CHECK_THROWS_AS(census_serial(p), ValidationError);
  SampleParams sp;
  sp.n = 10;
  CHECK_THROWS_AS(sample_census(sp), ValidationError);
}
