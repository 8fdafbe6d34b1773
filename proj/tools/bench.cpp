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
// Benchmarks the serial reference implementations against the
// OpenMP-parallel kernels (census and cpl sweep) and verifies their
// results agree while timing them.

#include <chrono>
#include <iostream>

#include <omp.h>

#include "iag/census.hpp"
#include "iag/complexity.hpp"

using namespace iag;

namespace {

double seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

void bench_census(int n) {
  CensusParams p;
  p.n = n;

  auto t0 = std::chrono::steady_clock::now();
  CensusReport serial = census_serial(p);
  double serial_s = seconds(t0);

  std::cout << "census n=" << n << "  serial(reference) " << serial_s
            << "s\n";
  for (int jobs : {1, 2, omp_get_max_threads()}) {
    p.jobs = jobs;
    t0 = std::chrono::steady_clock::now();
    CensusReport parallel = census(p);
    double par_s = seconds(t0);
    bool same = parallel.ri == serial.ri && parallel.unknown == serial.unknown;
    std::cout << "census n=" << n << "  parallel jobs=" << jobs << "  "
              << par_s << "s  speedup x" << serial_s / par_s
              << (same ? "" : "  RESULT MISMATCH!") << "\n";
    if (!same) std::exit(1);
  }
}

void bench_sweep(int n) {
  Rational alpha(1, 4), q(15, 34);

  auto t0 = std::chrono::steady_clock::now();
  CplSweep serial = xor_maximality_check_serial(n, alpha, q);
  double serial_s = seconds(t0);
  std::cout << "cpl sweep n=" << n << "  serial(reference) " << serial_s
            << "s\n";

  for (int jobs : {1, 2, omp_get_max_threads()}) {
    SweepOptions opts;
    opts.jobs = jobs;
    t0 = std::chrono::steady_clock::now();
    CplSweep parallel = xor_maximality_check(n, alpha, q, 64, opts);
    double par_s = seconds(t0);
    bool same = parallel.cpl == serial.cpl;
    std::cout << "cpl sweep n=" << n << "  parallel jobs=" << jobs << "  "
              << par_s << "s  speedup x" << serial_s / par_s
              << (same ? "" : "  RESULT MISMATCH!") << "\n";
    if (!same) std::exit(1);
  }
}

}  // namespace

int main(int argc, char** argv) {
  int n = argc > 1 ? std::atoi(argv[1]) : 3;
  if (n < 1 || n > 4) {
    std::cerr << "usage: iag-bench [n in 1..4]\n";
    return 1;
  }
  bench_census(n);
  bench_sweep(n);
  return 0;
}
