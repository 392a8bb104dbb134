/*
 * Copyright 2026 The rtgames Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <vector>

namespace rtg {

/// Adjacency lists indexed by vertex.
using Digraph = std::vector<std::vector<int>>;

/// Strongly connected components (iterative Tarjan). Returns a component
/// id per vertex; vertices with `active[v] == 0` are ignored and get -1.
std::vector<int> scc_ids(const Digraph& graph, const std::vector<char>& active);
std::vector<int> scc_ids(const Digraph& graph);

/// Per vertex: true iff it lies on a cycle made of active vertices
/// (a non-trivial SCC, or a self loop).
std::vector<char> on_cycle(const Digraph& graph, const std::vector<char>& active);

/// Vertices that can reach some vertex of `targets` (targets included).
std::vector<char> can_reach(const Digraph& graph, const std::vector<char>& targets);

} // namespace rtg
