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

#include "rtg/oracles.hpp"

#include "rtg/graph.hpp"

#include <algorithm>
#include <string>

namespace rtg {

namespace {

Digraph graph_of(const RegularTree& t)
{
    Digraph g(t.size());
    for (std::size_t v = 0; v < t.size(); ++v) {
        const auto& node = t.node(static_cast<int>(v));
        g[v] = {node.left, node.right};
    }
    return g;
}

std::vector<char> looping_ones(const RegularTree& t, const Digraph& g)
{
    auto cyc = on_cycle(g, std::vector<char>(t.size(), 1));
    for (std::size_t v = 0; v < t.size(); ++v)
        if (t.label_token(static_cast<int>(v)) != "1") cyc[v] = 0;
    return cyc;
}

} // namespace

bool oracle_L(const RegularTree& t)
{
    const auto g = graph_of(t);
    const auto ones = looping_ones(t, g);
    return std::find(ones.begin(), ones.end(), 1) != ones.end();
}

bool oracle_Lminus(const RegularTree& t)
{
    return !oracle_L(t);
}

std::vector<char> subtrees_in_L(const RegularTree& t)
{
    const auto g = graph_of(t);
    return can_reach(g, looping_ones(t, g));
}

std::string spine_address(const CnfOrdinal& digits)
{
    std::string word;
    for (auto b : digits.digits()) {
        word.append(b, 'l');
        word.push_back('r');
    }
    return word;
}

SpineSearchResult oracle_least_spine(const RegularTree& t, int n)
{
    if (n < 1) throw Error("oracle_least_spine: width must be >= 1");
    const int size = static_cast<int>(t.size());
    const auto in_l = subtrees_in_L(t);

    // feasible[k][v]: from node v, some choice of the k remaining digits
    // reaches a subtree in L.
    std::vector<std::vector<char>> feasible(static_cast<std::size_t>(n) + 1, std::vector<char>(t.size(), 0));
    feasible[0] = in_l;
    for (int k = 1; k <= n; ++k) {
        for (int v = 0; v < size; ++v) {
            int cur = v;
            for (int b = 0; b < size; ++b) {
                if (feasible[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(t.child(cur, 'r'))]) {
                    feasible[static_cast<std::size_t>(k)][static_cast<std::size_t>(v)] = 1;
                    break;
                }
                cur = t.child(cur, 'l');
            }
        }
    }

    SpineSearchResult result;
    if (!feasible[static_cast<std::size_t>(n)][static_cast<std::size_t>(t.root())]) return result;
    std::vector<CnfOrdinal::Digit> digits;
    int cur = t.root();
    for (int k = n; k >= 1; --k) {
        for (int b = 0;; ++b) {
            const int down = t.child(cur, 'r');
            if (feasible[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(down)]) {
                digits.push_back(static_cast<CnfOrdinal::Digit>(b));
                cur = down;
                break;
            }
            cur = t.child(cur, 'l');
        }
    }
    result.found = true;
    result.least = CnfOrdinal(std::move(digits));
    return result;
}

bool oracle_Ln(const RegularTree& t, int n)
{
    const auto r = oracle_least_spine(t, n);
    return r.found && parity(r.least) == Parity::Odd;
}

bool oracle_Talpha(const RegularTree& t, const CnfOrdinal& alpha)
{
    if (alpha.leading() == 0) throw Error("oracle_Talpha: leading digit of alpha must be nonzero");
    const auto r = oracle_least_spine(t, static_cast<int>(alpha.width()));
    return r.found && r.least < alpha && parity(r.least) != parity(alpha);
}

bool diff_eval(const std::vector<bool>& bits, int eta)
{
    if (eta < 1) throw Error("diff_eval: eta must be positive");
    if (bits.size() != static_cast<std::size_t>(eta))
        throw Error("diff_eval: expected " + std::to_string(eta) + " bits, got " + std::to_string(bits.size()));
    int least = -1;
    for (int theta = 0; theta < eta; ++theta) {
        if (bits[static_cast<std::size_t>(theta)]) {
            if (least < 0) least = theta;
        } else if (least >= 0) {
            throw Error("diff_eval: family is not increasing at index " + std::to_string(theta));
        }
    }
    return least >= 0 && least % 2 != eta % 2;
}

} // namespace rtg
