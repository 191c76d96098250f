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

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "sharpcsp/count.h"

namespace sharpcsp {

/// Simple undirected graph on vertices 1..n.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

/// Bipartite graph with left vertices L1..Lleft and right vertices R1..Rright.
/// Each edge is (i, j) for Li -- Rj.
struct BipartiteGraph {
  int left = 0;
  int right = 0;
  std::vector<std::pair<int, int>> edges;
};

using GraphInput = std::variant<Graph, BipartiteGraph>;

/// Graph file grammar ('#' comments):
///
///   graph <n>                   |   bipartite <nLeft> <nRight>
///   edge <u> <v>                |   edge L<i> R<j>
///
/// Rejects self-loops, duplicate edges and out-of-range endpoints.
GraphInput parse_graph(std::string_view text);

std::string to_text(const Graph& g);
std::string to_text(const BipartiteGraph& g);

/// Throws ParseError for a non-simple graph.
void validate(const Graph& g);
void validate(const BipartiteGraph& g);

/// Independent sets by subset enumeration (n <= 30).
Count count_independent_sets(const Graph& g);
Count count_independent_sets(const BipartiteGraph& g);

Graph cycle_graph(int n);

}  // namespace sharpcsp
