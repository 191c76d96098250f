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

// Brute-force reference implementations used to check the library. They
// work from raw tuple sets and assignments and share no algorithm with it.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sharpcsp/count.h"
#include "sharpcsp/gadget.h"
#include "sharpcsp/graph.h"
#include "sharpcsp/instance.h"
#include "sharpcsp/relation.h"

namespace oracle {

using Tuples = std::set<std::uint32_t>;

inline Tuples tuples_of(const sharpcsp::Relation& r) { return Tuples(r.members().begin(), r.members().end()); }

inline sharpcsp::Relation relation_from_mask(int k, std::uint64_t mask) {
  std::vector<std::uint32_t> m;
  for (std::uint32_t t = 0; t < (1u << k); ++t) {
    if (mask >> t & 1u) m.push_back(t);
  }
  return sharpcsp::Relation(k, m);
}

/// Closed under a^b^c for all triples.
inline bool affine(const Tuples& r) {
  for (auto a : r)
    for (auto b : r)
      for (auto c : r)
        if (!r.count(a ^ b ^ c)) return false;
  return true;
}

/// Closed under componentwise AND and OR for all pairs.
inline bool im2(const Tuples& r) {
  for (auto a : r)
    for (auto b : r)
      if (!r.count(a & b) || !r.count(a | b)) return false;
  return true;
}

inline bool bit(std::uint32_t t, int k, int i) { return (t >> (k - 1 - i)) & 1u; }

/// Counts satisfying assignments by evaluating every constraint through
/// Relation::contains on explicitly built tuples.
inline std::uint64_t count(const sharpcsp::Instance& inst) {
  const auto& vars = inst.variables();
  std::map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < vars.size(); ++i) idx[vars[i]] = i;
  std::uint64_t total = 0;
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << vars.size()); ++a) {
    bool ok = true;
    for (const auto& c : inst.constraints()) {
      std::uint32_t t = 0;
      for (const auto& v : c.scope) t = (t << 1) | static_cast<std::uint32_t>((a >> idx[v]) & 1u);
      if (!inst.relation_of(c).contains(t)) {
        ok = false;
        break;
      }
    }
    total += ok;
  }
  return total;
}

/// Count when every variable outside `core` occurs in exactly one
/// constraint: enumerate `core`, then multiply per-constraint extension
/// counts of the private variables.
inline sharpcsp::Count count_with_pendants(const sharpcsp::Instance& inst, const std::vector<std::string>& core) {
  std::map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < core.size(); ++i) idx[core[i]] = i;
  std::map<std::string, int> uses;
  for (const auto& c : inst.constraints())
    for (const auto& v : std::set<std::string>(c.scope.begin(), c.scope.end()))
      if (!idx.count(v)) ++uses[v];
  for (const auto& [v, k] : uses)
    if (k != 1) throw std::logic_error("variable " + v + " is shared between constraints");
  std::size_t isolated = 0;
  for (const auto& v : inst.variables())
    if (!idx.count(v) && !uses.count(v)) ++isolated;
  sharpcsp::Count total = 0;
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << core.size()); ++a) {
    sharpcsp::Count ways = 1;
    for (const auto& c : inst.constraints()) {
      std::vector<std::string> priv;
      for (const auto& v : c.scope)
        if (!idx.count(v) && std::find(priv.begin(), priv.end(), v) == priv.end()) priv.push_back(v);
      std::uint64_t ext = 0;
      for (std::uint64_t b = 0; b < (std::uint64_t{1} << priv.size()); ++b) {
        std::uint32_t t = 0;
        for (const auto& v : c.scope) {
          const auto it = idx.find(v);
          const auto bitval = it != idx.end()
                                  ? (a >> it->second) & 1u
                                  : (b >> (std::find(priv.begin(), priv.end(), v) - priv.begin())) & 1u;
          t = (t << 1) | static_cast<std::uint32_t>(bitval);
        }
        ext += inst.relation_of(c).contains(t);
      }
      ways *= ext;
      if (ways == 0) break;
    }
    total += ways;
  }
  return total << isolated;
}

inline std::uint64_t independent_sets(int n, const std::vector<std::pair<int, int>>& edges) {
  std::uint64_t total = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    bool ok = true;
    for (auto [u, v] : edges) {
      if ((s >> (u - 1) & 1u) && (s >> (v - 1) & 1u)) ok = false;
    }
    total += ok;
  }
  return total;
}

/// Independent sets of a bipartite graph (left vertices first).
inline std::uint64_t independent_sets(const sharpcsp::BipartiteGraph& g) {
  std::vector<std::pair<int, int>> e;
  for (auto [i, j] : g.edges) e.emplace_back(i, g.left + j);
  return independent_sets(g.left + g.right, e);
}

inline sharpcsp::Graph random_graph(std::mt19937_64& rng, int n, double p) {
  sharpcsp::Graph g{n, {}};
  std::bernoulli_distribution coin(p);
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (coin(rng)) g.edges.emplace_back(u, v);
  return g;
}

inline sharpcsp::BipartiteGraph random_bipartite(std::mt19937_64& rng, int l, int r, double p) {
  sharpcsp::BipartiteGraph g{l, r, {}};
  std::bernoulli_distribution coin(p);
  for (int i = 1; i <= l; ++i)
    for (int j = 1; j <= r; ++j)
      if (coin(rng)) g.edges.emplace_back(i, j);
  return g;
}

/// Instance with `n` variables v1..vn over `names` (resolved in `lang`),
/// with `m` constraints on uniformly random scopes.
inline sharpcsp::Instance random_instance(std::mt19937_64& rng, const sharpcsp::ConstraintLanguage& lang,
                                          const std::vector<std::string>& names, int n, int m) {
  std::vector<std::string> vars;
  for (int i = 1; i <= n; ++i) vars.push_back("v" + std::to_string(i));
  std::uniform_int_distribution<std::size_t> pick_rel(0, names.size() - 1);
  std::uniform_int_distribution<int> pick_var(0, n - 1);
  std::vector<sharpcsp::Constraint> cs;
  for (int i = 0; i < m; ++i) {
    const auto& name = names[pick_rel(rng)];
    sharpcsp::Constraint c{name, {}};
    for (int j = 0; j < lang.at(name).arity(); ++j) c.scope.push_back(vars[pick_var(rng)]);
    cs.push_back(std::move(c));
  }
  return sharpcsp::Instance(lang, vars, cs);
}

/// Faithful and perfect, checked by counting extensions per distinguished
/// tuple with the test oracle's own evaluator.
inline bool implements(const sharpcsp::Gadget& g, const sharpcsp::Relation& target) {
  const auto& vars = g.body.variables();
  const std::size_t k = g.distinguished.size();
  std::map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < vars.size(); ++i) idx[vars[i]] = i;
  std::vector<int> ext(std::size_t{1} << k, 0);
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << vars.size()); ++a) {
    bool ok = true;
    for (const auto& c : g.body.constraints()) {
      std::uint32_t t = 0;
      for (const auto& v : c.scope) t = (t << 1) | static_cast<std::uint32_t>(a >> idx[v] & 1u);
      ok = ok && g.body.relation_of(c).contains(t);
    }
    if (!ok) continue;
    std::uint32_t d = 0;
    for (const auto& v : g.distinguished) d = (d << 1) | static_cast<std::uint32_t>(a >> idx[v] & 1u);
    ++ext[d];
  }
  for (std::uint32_t d = 0; d < ext.size(); ++d) {
    if (ext[d] != (target.contains(d) ? 1 : 0)) return false;
  }
  return true;
}

/// Downward-closed subsets of the order given by `leq`.
inline std::uint64_t downsets(const std::vector<std::vector<bool>>& leq) {
  const std::size_t n = leq.size();
  std::uint64_t total = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      for (std::size_t b = 0; b < n && ok; ++b)
        if ((s >> a & 1u) && leq[b][a] && !(s >> b & 1u)) ok = false;
    total += ok;
  }
  return total;
}

}  // namespace oracle
