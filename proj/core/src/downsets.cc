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

#include "sharpcsp/downsets.h"

#include <cstdint>

namespace sharpcsp {

void Poset::validate() const {
  const std::size_t n = elements.size();
  if (leq.size() != n) throw InternalError("poset matrix size mismatch");
  for (std::size_t a = 0; a < n; ++a) {
    if (leq[a].size() != n) throw InternalError("poset matrix size mismatch");
    if (!leq[a][a]) throw InternalError("poset not reflexive at " + elements[a]);
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && leq[a][b] && leq[b][a]) {
        throw InternalError("poset not antisymmetric: " + elements[a] + ", " + elements[b]);
      }
      for (std::size_t c = 0; c < n; ++c) {
        if (leq[a][b] && leq[b][c] && !leq[a][c]) throw InternalError("poset not transitive");
      }
    }
  }
}

std::string Poset::to_text() const {
  std::string out = "poset " + std::to_string(elements.size()) + "\n";
  for (const auto& e : elements) out += "element " + e + "\n";
  for (std::size_t a = 0; a < elements.size(); ++a) {
    for (std::size_t b = 0; b < elements.size(); ++b) {
      if (a != b && leq[a][b]) out += "leq " + elements[a] + " " + elements[b] + "\n";
    }
  }
  return out;
}

std::optional<Poset> im2_to_downsets(const Instance& instance) {
  const auto forced = forced_vars(instance);  // checks atomicity
  for (const auto& v : forced.zero) {
    if (forced.one.count(v)) return std::nullopt;
  }
  const auto reach = implies_closure(instance);
  const auto& vars = instance.variables();
  const std::size_t n = vars.size();

  // mutual-implication classes among the free variables
  std::vector<int> cls(n, -1);
  std::vector<std::size_t> reps;
  Poset p;
  for (std::size_t i = 0; i < n; ++i) {
    if (forced.zero.count(vars[i]) || forced.one.count(vars[i]) || cls[i] >= 0) continue;
    cls[i] = static_cast<int>(reps.size());
    std::string label = vars[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      if (cls[j] < 0 && reach[i][j] && reach[j][i]) {
        cls[j] = cls[i];
        label += "=" + vars[j];
      }
    }
    reps.push_back(i);
    p.elements.push_back(std::move(label));
  }
  p.leq.assign(reps.size(), std::vector<bool>(reps.size(), false));
  for (std::size_t a = 0; a < reps.size(); ++a) {
    for (std::size_t b = 0; b < reps.size(); ++b) p.leq[a][b] = reach[reps[a]][reps[b]];
  }
  p.validate();
  return p;
}

Count count_downsets(const Poset& p, std::size_t cap) {
  const std::size_t n = p.elements.size();
  if (n > cap || n > 63) {
    throw ResourceError("poset has " + std::to_string(n) + " elements, above the enumeration cap of " +
                        std::to_string(cap));
  }
  std::vector<std::uint64_t> below(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (p.leq[b][a]) below[a] |= std::uint64_t{1} << b;
    }
  }
  std::uint64_t total = 0;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t s = 0; s < limit; ++s) {
    bool closed = true;
    for (std::size_t a = 0; a < n && closed; ++a) {
      if ((s >> a & 1u) && (below[a] & ~s)) closed = false;
    }
    total += closed;
  }
  return Count(total);
}

}  // namespace sharpcsp
