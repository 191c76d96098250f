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

#include "sharpcsp/brute_force.h"

#include <algorithm>
#include <map>
#include <thread>

namespace sharpcsp {

namespace {

void check_cap(std::size_t n, std::size_t cap) {
  if (n > cap || n > 63) {
    throw ResourceError("brute-force enumeration over " + std::to_string(n) + " variables exceeds the cap of " +
                        std::to_string(std::min<std::size_t>(cap, 63)));
  }
}

}  // namespace

CompiledInstance::CompiledInstance(const Instance& instance) : num_variables_(instance.num_variables()) {
  if (num_variables_ > 64) throw ResourceError("packed evaluation supports at most 64 variables");
  std::map<std::string, std::size_t> table_of;
  for (const auto& c : instance.constraints()) {
    auto [it, inserted] = table_of.emplace(c.relation, tables_.size());
    if (inserted) {
      const Relation& r = instance.relation_of(c);
      std::vector<std::uint8_t> t(std::size_t{1} << r.arity(), 0);
      for (auto m : r.members()) t[m] = 1;
      tables_.push_back(std::move(t));
    }
    Check check{it->second, {}};
    for (const auto& v : c.scope) check.vars.push_back(static_cast<std::uint8_t>(instance.index_of(v)));
    checks_.push_back(std::move(check));
  }
}

bool CompiledInstance::satisfied_by(std::uint64_t assignment) const noexcept {
  for (const auto& check : checks_) {
    std::uint32_t idx = 0;
    for (auto v : check.vars) idx = (idx << 1) | static_cast<std::uint32_t>((assignment >> v) & 1u);
    if (!tables_[check.table][idx]) return false;
  }
  return true;
}

Count brute_force_count(const Instance& instance, const BruteForceOptions& options) {
  const std::size_t n = instance.num_variables();
  check_cap(n, options.cap);
  const CompiledInstance compiled(instance);
  const std::uint64_t total = std::uint64_t{1} << n;

  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  if (n < 16) threads = 1;
  std::vector<std::uint64_t> partial(threads, 0);
  auto work = [&](unsigned id) {
    const std::uint64_t lo = total / threads * id;
    const std::uint64_t hi = id + 1 == threads ? total : total / threads * (id + 1);
    std::uint64_t count = 0;
    for (std::uint64_t a = lo; a < hi; ++a) count += compiled.satisfied_by(a);
    partial[id] = count;
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < threads; ++id) pool.emplace_back(work, id);
    for (auto& t : pool) t.join();
  }
  Count result = 0;
  for (auto p : partial) result += p;
  return result;
}

std::vector<std::uint64_t> enumerate_satisfying(const Instance& instance, std::size_t cap) {
  const std::size_t n = instance.num_variables();
  check_cap(n, cap);
  const CompiledInstance compiled(instance);
  std::vector<std::uint64_t> out;
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
    if (compiled.satisfied_by(a)) out.push_back(a);
  }
  return out;
}

}  // namespace sharpcsp
