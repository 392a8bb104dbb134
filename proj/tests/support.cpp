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

#include "support.hpp"

#include "rtg/graph.hpp"
#include "rtg/oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace rtg::testing {

std::vector<RegularTree> small_binary_trees()
{
    const auto bin = Alphabet::binary();
    std::vector<RegularTree> out;
    for (const char* a : {"0", "1"}) out.push_back(RegularTree::constant(bin, a));
    for (int shape = 0; shape < 16; ++shape) {
        for (int labels = 0; labels < 4; ++labels) {
            std::vector<NodeSpec> table{
                {0, (labels & 1) ? "1" : "0", shape & 1, (shape >> 1) & 1},
                {1, (labels & 2) ? "1" : "0", (shape >> 2) & 1, (shape >> 3) & 1},
            };
            out.push_back(RegularTree::build(bin, table, 0));
        }
    }
    return out;
}

bool brute_L(const RegularTree& t)
{
    const auto n = t.size();
    // reach[u][v]: a path of length >= 1 from u to v
    std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
    for (std::size_t u = 0; u < n; ++u) {
        reach[u][static_cast<std::size_t>(t.child(static_cast<int>(u), 'l'))] = 1;
        reach[u][static_cast<std::size_t>(t.child(static_cast<int>(u), 'r'))] = 1;
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (reach[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (reach[k][j]) reach[i][j] = 1;
    const auto root = static_cast<std::size_t>(t.root());
    for (std::size_t w = 0; w < n; ++w)
        if (t.label_token(static_cast<int>(w)) == "1" && reach[w][w] && (w == root || reach[root][w])) return true;
    return false;
}

std::optional<CnfOrdinal> exhaustive_least_spine(const RegularTree& t, int n)
{
    const auto bound = static_cast<CnfOrdinal::Digit>(t.size());
    std::vector<CnfOrdinal::Digit> digits(static_cast<std::size_t>(n), 0);
    while (true) {
        const CnfOrdinal b(digits);
        if (brute_L(t.subtree(spine_address(b)))) return b;
        // next tuple in lexicographic order
        int i = n - 1;
        while (i >= 0 && digits[static_cast<std::size_t>(i)] + 1 == bound) digits[static_cast<std::size_t>(i--)] = 0;
        if (i < 0) return std::nullopt;
        ++digits[static_cast<std::size_t>(i)];
    }
}

namespace {

using Mask = std::vector<char>;

Mask muller_attractor(const MullerGame& g, Player who, const Mask& sub, const Mask& target)
{
    Mask in(g.size(), 0);
    for (std::size_t p = 0; p < g.size(); ++p) in[p] = sub[p] && target[p];
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t p = 0; p < g.size(); ++p) {
            if (!sub[p] || in[p]) continue;
            bool any = false, all = true;
            for (int q : g.moves[p]) {
                if (!sub[static_cast<std::size_t>(q)]) continue;
                if (in[static_cast<std::size_t>(q)])
                    any = true;
                else
                    all = false;
            }
            if (g.owner[p] == who ? any : all) {
                in[p] = 1;
                changed = true;
            }
        }
    }
    return in;
}

bool in_family(const MullerGame& g, const std::set<int>& colors)
{
    std::vector<int> set(colors.begin(), colors.end());
    return std::find(g.family.begin(), g.family.end(), set) != g.family.end();
}

void solve_direct(const MullerGame& g, Mask sub, std::vector<Player>& winner)
{
    while (true) {
        std::set<int> colors;
        for (std::size_t p = 0; p < g.size(); ++p)
            if (sub[p]) colors.insert(g.color[p]);
        if (colors.empty()) return;
        const Player sigma = in_family(g, colors) ? Player::Eve : Player::Adam;
        const Player tau = opponent(sigma);

        bool removed = false;
        for (int c : colors) {
            Mask target(g.size(), 0);
            for (std::size_t p = 0; p < g.size(); ++p) target[p] = sub[p] && g.color[p] == c;
            const auto attr = muller_attractor(g, sigma, sub, target);
            Mask rest(g.size(), 0);
            for (std::size_t p = 0; p < g.size(); ++p) rest[p] = sub[p] && !attr[p];
            std::vector<Player> inner(g.size(), sigma);
            solve_direct(g, rest, inner);
            Mask lost(g.size(), 0);
            bool any = false;
            for (std::size_t p = 0; p < g.size(); ++p) {
                if (rest[p] && inner[p] == tau) {
                    lost[p] = 1;
                    any = true;
                }
            }
            if (!any) continue;
            const auto dominion = muller_attractor(g, tau, sub, lost);
            for (std::size_t p = 0; p < g.size(); ++p) {
                if (dominion[p]) {
                    winner[p] = tau;
                    sub[p] = 0;
                }
            }
            removed = true;
            break;
        }
        if (!removed) {
            for (std::size_t p = 0; p < g.size(); ++p)
                if (sub[p]) winner[p] = sigma;
            return;
        }
    }
}

} // namespace

std::vector<Player> solve_muller_direct(const MullerGame& input)
{
    MullerGame g = input;
    g.normalize();
    std::vector<Player> winner(g.size(), Player::Eve);
    solve_direct(g, Mask(g.size(), 1), winner);
    winner.resize(input.size());
    return winner;
}

namespace {

struct Product {
    std::vector<int> position;
    std::vector<std::vector<int>> succ;  // distinct successors
};

Product lar_product(const MullerGame& g)
{
    Product prod;
    std::map<std::pair<int, std::vector<int>>, int> index;
    std::vector<std::vector<int>> records;
    auto intern = [&](int p, std::vector<int> record) {
        auto [it, fresh] = index.emplace(std::make_pair(p, record), static_cast<int>(prod.position.size()));
        if (fresh) {
            prod.position.push_back(p);
            prod.succ.emplace_back();
            records.push_back(std::move(record));
        }
        return it->second;
    };
    intern(g.initial, {g.color[static_cast<std::size_t>(g.initial)]});
    for (std::size_t x = 0; x < prod.position.size(); ++x) {
        for (int q : g.moves[static_cast<std::size_t>(prod.position[x])]) {
            auto record = records[x];
            const int c = g.color[static_cast<std::size_t>(q)];
            record.erase(std::remove(record.begin(), record.end(), c), record.end());
            record.insert(record.begin(), c);
            const int y = intern(q, std::move(record));
            auto& s = prod.succ[x];
            if (std::find(s.begin(), s.end(), y) == s.end()) s.push_back(y);
        }
    }
    return prod;
}

// Every strongly connected part of the active subgraph has its color set
// in the family.
bool all_cycles_good(const MullerGame& g, const Product& prod, const Digraph& graph, const std::vector<char>& active)
{
    const auto scc = scc_ids(graph, active);
    const auto cyc = on_cycle(graph, active);
    std::map<int, std::vector<int>> parts;
    for (std::size_t x = 0; x < scc.size(); ++x)
        if (active[x] && cyc[x]) parts[scc[x]].push_back(static_cast<int>(x));
    for (const auto& [id, members] : parts) {
        std::set<int> colors;
        for (int x : members) colors.insert(g.color[static_cast<std::size_t>(prod.position[static_cast<std::size_t>(x)])]);
        if (!in_family(g, colors)) return false;
        for (int c : colors) {
            std::vector<char> smaller(active.size(), 0);
            for (int x : members)
                if (g.color[static_cast<std::size_t>(prod.position[static_cast<std::size_t>(x)])] != c)
                    smaller[static_cast<std::size_t>(x)] = 1;
            if (!all_cycles_good(g, prod, graph, smaller)) return false;
        }
    }
    return true;
}

} // namespace

std::optional<bool> eve_wins_with_lar_memory(const MullerGame& input, std::int64_t budget)
{
    MullerGame g = input;
    g.normalize();
    const auto prod = lar_product(g);
    const auto n = prod.position.size();
    std::vector<int> choice(n, -1);
    std::int64_t visited = 0;
    bool exhausted = false;

    std::function<bool()> search = [&]() -> bool {
        if (++visited > budget) {
            exhausted = true;
            return false;
        }
        Digraph graph(n);
        std::vector<char> seen(n, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int open = -1;
        while (!stack.empty()) {
            const int x = stack.back();
            stack.pop_back();
            const auto xi = static_cast<std::size_t>(x);
            const bool eve = g.owner[static_cast<std::size_t>(prod.position[xi])] == Player::Eve;
            if (eve && choice[xi] < 0) {
                if (open < 0) open = x;
                continue;
            }
            graph[xi] = eve ? std::vector<int>{choice[xi]} : prod.succ[xi];
            for (int y : graph[xi]) {
                if (!seen[static_cast<std::size_t>(y)]) {
                    seen[static_cast<std::size_t>(y)] = 1;
                    stack.push_back(y);
                }
            }
        }
        if (open < 0) return all_cycles_good(g, prod, graph, seen);
        for (int y : prod.succ[static_cast<std::size_t>(open)]) {
            choice[static_cast<std::size_t>(open)] = y;
            if (search()) return true;
            if (exhausted) return false;
        }
        choice[static_cast<std::size_t>(open)] = -1;
        return false;
    };
    const bool wins = search();
    if (exhausted) return std::nullopt;
    return wins;
}

unsigned __int128 base_value(const CnfOrdinal& x, std::uint64_t base)
{
    unsigned __int128 v = 0;
    for (auto d : x.digits()) v = v * base + d;
    return v;
}

} // namespace rtg::testing
