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

#pragma once

#include <cstdint>
#include <vector>

#include "sharpcsp/count.h"

namespace sharpcsp {

enum class NoiseMode { WorstCase, Random };

struct RoundingTrial {
  long double q;  // oracle value after division, in [N, N + 1/4]
  long double q_hat;  // q perturbed by a factor in [e^-delta, e^delta]
  Count recovered;
  bool ok;
};

struct RoundingReport {
  Count n;
  double epsilon;
  long double delta;
  bool exact_required;  // N <= 2 / epsilon
  std::vector<RoundingTrial> trials;
  bool pass;
};

/// Nearest integer, ties toward the smaller one.
Count round_half_down(long double x);

/// Simulates recovering N from an approximate oracle for the pinned
/// instance: the true quotient is q = (N*scale + r)/scale with
/// 0 <= r <= scale/4, perturbed by e^(+-delta), delta = epsilon/21.
/// WorstCase tries the two endpoints (r = 0 with e^-delta, r = scale/4 with
/// e^delta); Random draws r and the factor from a seeded generator.
RoundingReport ap_rounding_simulate(const Count& n, const Count& scale, double epsilon, NoiseMode mode,
                                    std::uint64_t seed = 0, int samples = 32);

}  // namespace sharpcsp
