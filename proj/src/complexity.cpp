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

#include "iag/complexity.hpp"

#include <algorithm>
#include <map>

#include <omp.h>

#include "iag/census.hpp"
#include "iag/errors.hpp"
#include "iag/table_orbit.hpp"

namespace iag {

ComplexitySpec::ComplexitySpec(TruthTable t, ProductPrior pr, AccuracyVector al,
                               Rational q_, int k_max_)
    : tt(std::move(t)), prior(std::move(pr)), alpha(std::move(al)),
      q(std::move(q_)), k_max(k_max_) {
  if (q <= 0 || q > Rational(1, 2))
    throw ValidationError("threshold must satisfy 0 < q <= 1/2");
  if (prior.num_vars() != tt.num_vars() || alpha.num_vars() != tt.num_vars())
    throw ValidationError("prior/accuracy arity must match the formula");
  if (k_max < 0) throw ValidationError("k_max must be nonnegative");
}

namespace {

// Walks all ways to spread `total` tests over `parts` variables.
template <typename Fn>
void compositions(uint32_t total, int parts, std::vector<uint32_t>& cur,
                  int idx, Fn&& fn) {
  if (idx == parts - 1) {
    cur[idx] = total;
    fn();
    return;
  }
  for (uint32_t c = 0; c <= total; ++c) {
    cur[idx] = c;
    compositions(total - c, parts, cur, idx + 1, fn);
  }
}

}  // namespace

OptimalSequenceSet max_certainty(const TruthTable& tt,
                                 const ProductPrior& prior,
                                 const AccuracyVector& alpha, int k,
                                 const MaxCertaintyOptions& options) {
  const int n = tt.num_vars();
  if (prior.num_vars() != n || alpha.num_vars() != n)
    throw ValidationError("prior/accuracy arity must match the formula");
  if (k < 0) throw ValidationError("sequence length must be nonnegative");

  const uint32_t count = 1u << n;
  std::vector<Rational> prior_w(count);
  Rational half(1, 2);
  for (uint32_t bits = 0; bits < count; ++bits)
    prior_w[bits] = prior.probability(Assignment(n, bits));
  std::vector<Rational> var_odds(n);
  for (int i = 0; i < n; ++i) var_odds[i] = alpha.odds(i);

  OptimalSequenceSet out;
  out.k = k;
  out.certainty = Rational(-1);
  std::vector<OutcomeCounts> attain_full, attain_short;
  uint64_t profiles = 0;

  if (n == 0) {
    // No tests possible; the budget is spent on nothing.
    out.certainty = abs(Rational(tt.bit(0) ? 1 : 0) - half);
    if (options.collect_attaining) out.attaining.push_back(OutcomeCounts());
    return out;
  }

  std::vector<uint32_t> comp(n);
  std::vector<int> nonzero;
  // Contradictory observations cancel pairwise without moving the
  // posterior, so a length-k sequence is worth exactly some
  // non-contradictory profile of length k, k-2, ...
  for (int j = k; j >= 0; j -= 2) {
    compositions(j, n, comp, 0, [&] {
      nonzero.clear();
      for (int i = 0; i < n; ++i)
        if (comp[i]) nonzero.push_back(i);
      std::vector<Rational> pw(nonzero.size());
      for (size_t z = 0; z < nonzero.size(); ++z)
        pw[z] = rat_pow(var_odds[nonzero[z]], comp[nonzero[z]]);
      for (uint32_t pol = 0; pol < (1u << nonzero.size()); ++pol) {
        if (++profiles > options.max_profiles)
          throw ResourceError("certainty enumeration cap exceeded (" +
                              std::to_string(options.max_profiles) +
                              " profiles)");
        Rational sat(0), total(0);
        for (uint32_t bits = 0; bits < count; ++bits) {
          Rational w = prior_w[bits];
          for (size_t z = 0; z < nonzero.size(); ++z) {
            bool observed_true = (pol >> z) & 1u;
            if (((bits >> nonzero[z]) & 1u) == observed_true) w *= pw[z];
          }
          if (tt.bit(bits)) sat += w;
          total += std::move(w);
        }
        Rational certainty = abs(sat / total - half);
        if (certainty < out.certainty) continue;
        bool strictly_better = certainty > out.certainty;
        if (strictly_better) {
          out.certainty = certainty;
          attain_full.clear();
          attain_short.clear();
        }
        if (options.collect_attaining) {
          OutcomeCounts c;
          for (size_t z = 0; z < nonzero.size(); ++z)
            c.add_observations(nonzero[z], (pol >> z) & 1u, comp[nonzero[z]]);
          (j == k ? attain_full : attain_short).push_back(std::move(c));
        }
      }
    });
  }

  // Full-length witnesses when they exist; otherwise the shorter
  // profiles stand in as markers (the empty one means "the prior").
  out.attaining = attain_full.empty() ? std::move(attain_short)
                                      : std::move(attain_full);
  return out;
}

CplResult test_complexity(const ComplexitySpec& spec,
                          const MaxCertaintyOptions& options) {
  MaxCertaintyOptions opts = options;
  opts.collect_attaining = false;
  for (int k = 0; k <= spec.k_max; ++k) {
    OptimalSequenceSet s =
        max_certainty(spec.tt, spec.prior, spec.alpha, k, opts);
    if (s.certainty > spec.q) return {true, k};
  }
  return {false, spec.k_max};
}

int32_t CplSweep::max_cpl() const {
  int32_t best = 0;
  for (int32_t v : cpl) best = std::max(best, v < 0 ? INT32_MAX : v);
  return best;
}

namespace {

CplSweep sweep_common(int n, const Rational& alpha, const Rational& q,
                      int k_max) {
  if (n < 1 || n > 4)
    throw ValidationError("exhaustive cpl sweep supports 1 <= n <= 4");
  CplSweep sweep;
  sweep.n = n;
  sweep.q = q;
  sweep.alpha = alpha;
  sweep.k_max = k_max;
  sweep.cpl.assign(1ull << (1u << n), 0);
  return sweep;
}

void finish_sweep(CplSweep& sweep) {
  const uint64_t xor_code = TruthTable::xor_all(sweep.n).low_word();
  const uint64_t mask = (1ull << (1u << sweep.n)) - 1;
  sweep.xor_cpl = sweep.cpl[xor_code];
  auto ext = [&](int32_t v) {
    return v < 0 ? static_cast<int64_t>(sweep.k_max) + 1 : v;
  };
  int64_t xor_ext = ext(sweep.xor_cpl);
  sweep.xor_is_max = sweep.cpl[xor_code] == sweep.cpl[(~xor_code) & mask];
  std::map<int32_t, uint64_t> dist;
  for (int32_t v : sweep.cpl) {
    if (ext(v) > xor_ext) sweep.xor_is_max = false;
    ++dist[v];
  }
  sweep.distribution.assign(dist.begin(), dist.end());
}

int32_t cpl_of_code(int n, uint64_t code, const Rational& alpha,
                    const Rational& q, int k_max,
                    const MaxCertaintyOptions& options) {
  ComplexitySpec spec(TruthTable::from_bits(n, code),
                      ProductPrior::uniform(n),
                      AccuracyVector::uniform(n, alpha), q, k_max);
  CplResult r = test_complexity(spec, options);
  return r.bounded ? r.k : -1;
}

}  // namespace

CplSweep xor_maximality_check(int n, const Rational& alpha, const Rational& q,
                              int k_max, const SweepOptions& options) {
  CplSweep sweep = sweep_common(n, alpha, q, k_max);
  const uint64_t count = sweep.cpl.size();
  const int jobs = resolve_jobs(options.jobs);
  const TableOrbit orbit(n);

  // cpl is orbit-invariant under the uniform prior and uniform
  // accuracy, so solve one representative per orbit.
  std::vector<uint32_t> canon(count);
#pragma omp parallel for schedule(static) num_threads(jobs)
  for (int64_t code = 0; code < static_cast<int64_t>(count); ++code)
    canon[code] = static_cast<uint32_t>(orbit.canonical(code));
  std::vector<uint32_t> reps(canon.begin(), canon.end());
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());

  std::vector<int32_t> rep_cpl(reps.size());
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
  for (int64_t r = 0; r < static_cast<int64_t>(reps.size()); ++r)
    rep_cpl[r] = cpl_of_code(n, reps[r], alpha, q, k_max, options.certainty);

  for (uint64_t code = 0; code < count; ++code) {
    size_t r = std::lower_bound(reps.begin(), reps.end(), canon[code]) -
               reps.begin();
    sweep.cpl[code] = rep_cpl[r];
  }
  finish_sweep(sweep);
  return sweep;
}

CplSweep xor_maximality_check_serial(int n, const Rational& alpha,
                                     const Rational& q, int k_max,
                                     const MaxCertaintyOptions& options) {
  CplSweep sweep = sweep_common(n, alpha, q, k_max);
  for (uint64_t code = 0; code < sweep.cpl.size(); ++code)
    sweep.cpl[code] = cpl_of_code(n, code, alpha, q, k_max, options);
  finish_sweep(sweep);
  return sweep;
}

}  // namespace iag
