// Copyright 2026 The sharpcsp Authors
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

#include "sharpcsp/rounding.h"

#include <cmath>
#include <random>

#include "sharpcsp/errors.h"

namespace sharpcsp {

namespace {

long double to_ld(const Count& c) { return c.convert_to<long double>(); }

}  // namespace

Count round_half_down(long double x) {
  const long double r = std::ceil(x - 0.5L);
  if (r <= 0) return 0;
  return Count(static_cast<unsigned long long>(r));
}

RoundingReport ap_rounding_simulate(const Count& n, const Count& scale, double epsilon, NoiseMode mode,
                                    std::uint64_t seed, int samples) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw PreconditionError("epsilon must lie in (0, 1)");
  if (n < 0) throw PreconditionError("count must be nonnegative");
  if (scale < 1) throw PreconditionError("scale must be positive");
  if (n > Count(1) << 62) throw ResourceError("count too large for the rounding simulation");

  RoundingReport rep{n, epsilon, static_cast<long double>(epsilon) / 21.0L, false, {}, true};
  const long double nv = to_ld(n);
  rep.exact_required = nv * epsilon <= 2.0L;
  const Count r_max = scale / 4;

  auto run = [&](const Count& r, long double factor) {
    RoundingTrial t;
    t.q = nv + to_ld(r) / to_ld(scale);
    t.q_hat = t.q * factor;
    t.recovered = round_half_down(t.q_hat);
    const long double got = to_ld(t.recovered);
    const bool in_range = got >= nv * std::exp(-static_cast<long double>(epsilon)) &&
                          got <= nv * std::exp(static_cast<long double>(epsilon));
    t.ok = in_range && (!rep.exact_required || t.recovered == n);
    rep.pass = rep.pass && t.ok;
    rep.trials.push_back(t);
  };

  if (mode == NoiseMode::WorstCase) {
    run(0, std::exp(-rep.delta));
    run(r_max, std::exp(rep.delta));
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<long double> unit(0.0L, 1.0L);
    for (int i = 0; i < samples; ++i) {
      // r = floor(u * r_max) with a 53-bit fraction
      const Count num(rng() >> 11);
      const Count r = r_max * num / (Count(1) << 53);
      run(r, std::exp(rep.delta * (2.0L * unit(rng) - 1.0L)));
    }
  }
  return rep;
}

}  // namespace sharpcsp
