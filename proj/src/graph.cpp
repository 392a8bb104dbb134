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

#include "rtg/graph.hpp"

#include <algorithm>
#include <utility>

namespace rtg {

std::vector<int> scc_ids(const Digraph& graph, const std::vector<char>& active)
{
    const int n = static_cast<int>(graph.size());
    std::vector<int> index(graph.size(), -1);
    std::vector<int> low(graph.size(), 0);
    std::vector<char> on_stack(graph.size(), 0);
    std::vector<int> comp(graph.size(), -1);
    std::vector<int> stack;
    std::vector<std::pair<int, std::size_t>> frames;
    int counter = 0;
    int components = 0;

    for (int start = 0; start < n; ++start) {
        if (!active[static_cast<std::size_t>(start)] || index[static_cast<std::size_t>(start)] >= 0) continue;
        frames.emplace_back(start, 0);
        while (!frames.empty()) {
            auto& [v, next] = frames.back();
            const auto vi = static_cast<std::size_t>(v);
            if (next == 0 && index[vi] < 0) {
                index[vi] = low[vi] = counter++;
                stack.push_back(v);
                on_stack[vi] = 1;
            }
            const auto& succ = graph[vi];
            bool descended = false;
            while (next < succ.size()) {
                int w = succ[next++];
                const auto wi = static_cast<std::size_t>(w);
                if (!active[wi]) continue;
                if (index[wi] < 0) {
                    frames.emplace_back(w, 0);
                    descended = true;
                    break;
                }
                if (on_stack[wi]) low[vi] = std::min(low[vi], index[wi]);
            }
            if (descended) continue;
            if (low[vi] == index[vi]) {
                while (true) {
                    int w = stack.back();
                    stack.pop_back();
                    on_stack[static_cast<std::size_t>(w)] = 0;
                    comp[static_cast<std::size_t>(w)] = components;
                    if (w == v) break;
                }
                ++components;
            }
            int finished = v;
            frames.pop_back();
            if (!frames.empty()) {
                auto parent = static_cast<std::size_t>(frames.back().first);
                low[parent] = std::min(low[parent], low[static_cast<std::size_t>(finished)]);
            }
        }
    }
    return comp;
}

std::vector<int> scc_ids(const Digraph& graph)
{
    return scc_ids(graph, std::vector<char>(graph.size(), 1));
}

std::vector<char> on_cycle(const Digraph& graph, const std::vector<char>& active)
{
    auto comp = scc_ids(graph, active);
    std::vector<int> comp_size(graph.size(), 0);
    for (int c : comp)
        if (c >= 0) ++comp_size[static_cast<std::size_t>(c)];
    std::vector<char> result(graph.size(), 0);
    for (std::size_t v = 0; v < graph.size(); ++v) {
        if (comp[v] < 0) continue;
        if (comp_size[static_cast<std::size_t>(comp[v])] > 1) {
            result[v] = 1;
            continue;
        }
        for (int w : graph[v])
            if (static_cast<std::size_t>(w) == v) result[v] = 1;
    }
    return result;
}

std::vector<char> can_reach(const Digraph& graph, const std::vector<char>& targets)
{
    Digraph reverse(graph.size());
    for (std::size_t v = 0; v < graph.size(); ++v)
        for (int w : graph[v]) reverse[static_cast<std::size_t>(w)].push_back(static_cast<int>(v));
    std::vector<char> seen = targets;
    std::vector<int> stack;
    for (std::size_t v = 0; v < graph.size(); ++v)
        if (seen[v]) stack.push_back(static_cast<int>(v));
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : reverse[static_cast<std::size_t>(v)]) {
            if (!seen[static_cast<std::size_t>(u)]) {
                seen[static_cast<std::size_t>(u)] = 1;
                stack.push_back(u);
            }
        }
    }
    return seen;
}

} // namespace rtg
