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
#include "sharpcsp/instance.h"

namespace sharpcsp {

inline constexpr std::size_t kDefaultBruteCap = 24;

struct BruteForceOptions {
  std::size_t cap = kDefaultBruteCap;
  /// Worker threads; 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// An instance lowered to variable indices and byte tables, for fast
/// evaluation of packed assignments (bit i = value of variable i).
class CompiledInstance {
 public:
  explicit CompiledInstance(const Instance& instance);

  std::size_t num_variables() const noexcept { return num_variables_; }
  bool satisfied_by(std::uint64_t assignment) const noexcept;

 private:
  struct Check {
    std::size_t table;
    std::vector<std::uint8_t> vars;
  };
  std::size_t num_variables_;
  std::vector<std::vector<std::uint8_t>> tables_;
  std::vector<Check> checks_;
};

/// Exact #csp(I) by enumerating all 2^n assignments. Throws ResourceError
/// when n exceeds the cap. The result does not depend on the thread count.
Count brute_force_count(const Instance& instance, const BruteForceOptions& options = {});

/// Every satisfying assignment, packed as above, in increasing order.
std::vector<std::uint64_t> enumerate_satisfying(const Instance& instance, std::size_t cap = kDefaultBruteCap);

}  // namespace sharpcsp
