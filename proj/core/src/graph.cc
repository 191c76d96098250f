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

#include "sharpcsp/graph.h"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include "sharpcsp/errors.h"
#include "sharpcsp/language.h"

namespace sharpcsp {

namespace {

int parse_int(std::string_view tok, int line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError("expected an integer, got '" + std::string(tok) + "'", line);
  }
  return value;
}

int parse_side(std::string_view tok, char side, int line) {
  if (tok.size() < 2 || tok.front() != side) {
    throw ParseError("expected a vertex named " + std::string(1, side) + "<i>, got '" + std::string(tok) + "'", line);
  }
  return parse_int(tok.substr(1), line);
}

void check_edges(const std::vector<std::pair<int, int>>& edges, int left, int right, bool bipartite) {
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : edges) {
    if (u < 1 || u > left || v < 1 || v > right) {
      throw ParseError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") has an out-of-range endpoint", 0);
    }
    auto key = bipartite ? std::pair{u, v} : std::pair{std::min(u, v), std::max(u, v)};
    if (!bipartite && u == v) throw ParseError("self-loop at vertex " + std::to_string(u), 0);
    if (!seen.insert(key).second) {
      throw ParseError("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")", 0);
    }
  }
}

}  // namespace

void validate(const Graph& g) {
  if (g.n < 0) throw ParseError("negative vertex count", 0);
  check_edges(g.edges, g.n, g.n, false);
}

void validate(const BipartiteGraph& g) {
  if (g.left < 0 || g.right < 0) throw ParseError("negative vertex count", 0);
  check_edges(g.edges, g.left, g.right, true);
}

GraphInput parse_graph(std::string_view text_in) {
  const auto lines = text::tokenize(text_in);
  if (lines.empty()) throw ParseError("empty graph file", 0);
  const auto& header = lines.front();
  const bool bipartite = header.tokens[0] == "bipartite";
  if (!bipartite && header.tokens[0] != "graph") {
    throw ParseError("expected 'graph <n>' or 'bipartite <nLeft> <nRight>'", header.number);
  }
  if (header.tokens.size() != (bipartite ? 3u : 2u)) throw ParseError("malformed graph header", header.number);

  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.tokens[0] != "edge" || line.tokens.size() != 3) throw ParseError("expected 'edge <u> <v>'", line.number);
    if (bipartite) {
      edges.emplace_back(parse_side(line.tokens[1], 'L', line.number), parse_side(line.tokens[2], 'R', line.number));
    } else {
      edges.emplace_back(parse_int(line.tokens[1], line.number), parse_int(line.tokens[2], line.number));
    }
  }
  if (bipartite) {
    BipartiteGraph g{parse_int(header.tokens[1], header.number), parse_int(header.tokens[2], header.number),
                     std::move(edges)};
    validate(g);
    return g;
  }
  Graph g{parse_int(header.tokens[1], header.number), std::move(edges)};
  validate(g);
  return g;
}

std::string to_text(const Graph& g) {
  std::ostringstream out;
  out << "graph " << g.n << "\n";
  for (auto [u, v] : g.edges) out << "edge " << u << " " << v << "\n";
  return out.str();
}

std::string to_text(const BipartiteGraph& g) {
  std::ostringstream out;
  out << "bipartite " << g.left << " " << g.right << "\n";
  for (auto [u, v] : g.edges) out << "edge L" << u << " R" << v << "\n";
  return out.str();
}

Count count_independent_sets(const Graph& g) {
  if (g.n > 30) throw ResourceError("independent-set enumeration limited to 30 vertices");
  std::uint64_t count = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.n); ++s) {
    bool independent = true;
    for (auto [u, v] : g.edges) {
      if (((s >> (u - 1)) & 1u) && ((s >> (v - 1)) & 1u)) {
        independent = false;
        break;
      }
    }
    count += independent;
  }
  return count;
}

Count count_independent_sets(const BipartiteGraph& g) {
  Graph flat{g.left + g.right, {}};
  for (auto [u, v] : g.edges) flat.edges.emplace_back(u, g.left + v);
  return count_independent_sets(flat);
}

Graph cycle_graph(int n) {
  Graph g{n, {}};
  for (int i = 1; i <= n; ++i) g.edges.emplace_back(i, i % n + 1);
  return g;
}

}  // namespace sharpcsp
