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

#include "rtg/random.hpp"

#include <map>
#include <random>

namespace rtg {

namespace {

int draw(std::mt19937_64& rng, int bound)
{
    return static_cast<int>(rng() % static_cast<std::uint64_t>(bound));
}

std::vector<int> random_successors(std::mt19937_64& rng, int n)
{
    std::vector<int> out;
    const int k = 1 + draw(rng, std::min(3, n));
    // drawn with replacement: repeated moves are legal and must be handled
    for (int i = 0; i < k; ++i) out.push_back(draw(rng, n));
    return out;
}

} // namespace

ParityGame random_parity_game(std::uint64_t seed, int max_positions, int max_rank)
{
    if (max_positions < 1 || max_rank < 0) throw Error("random_parity_game: bad bounds");
    std::mt19937_64 rng(seed);
    const int n = 1 + draw(rng, max_positions);
    ParityGame g;
    for (int p = 0; p < n; ++p) g.add_position(draw(rng, 2) ? Player::Adam : Player::Eve, draw(rng, max_rank + 1));
    for (int p = 0; p < n; ++p) g.moves[static_cast<std::size_t>(p)] = random_successors(rng, n);
    g.initial = draw(rng, n);
    return g;
}

MullerGame random_muller_game(std::uint64_t seed, int max_positions, int colors)
{
    if (max_positions < 1 || colors < 1 || colors > 10) throw Error("random_muller_game: bad bounds");
    std::mt19937_64 rng(seed);
    const int n = 1 + draw(rng, max_positions);
    MullerGame g;
    for (int p = 0; p < n; ++p) g.add_position(draw(rng, 2) ? Player::Adam : Player::Eve, draw(rng, colors));
    for (int p = 0; p < n; ++p) g.moves[static_cast<std::size_t>(p)] = random_successors(rng, n);
    for (int mask = 1; mask < (1 << colors); ++mask) {
        if (!draw(rng, 2)) continue;
        std::vector<int> set;
        for (int c = 0; c < colors; ++c)
            if (mask >> c & 1) set.push_back(c);
        g.family.push_back(std::move(set));
    }
    g.initial = draw(rng, n);
    return g;
}

RegularTree random_tree_biased(std::uint64_t seed, int max_nodes, int ones_percent)
{
    std::mt19937_64 rng(seed);
    const auto shape = random_tree(rng(), max_nodes, Alphabet::binary());
    TreeAssembler out(Alphabet::binary());
    for (std::size_t v = 0; v < shape.size(); ++v) out.add(draw(rng, 100) < ones_percent ? "1" : "0");
    for (std::size_t v = 0; v < shape.size(); ++v) {
        const auto& n = shape.node(static_cast<int>(v));
        out.set_children(static_cast<int>(v), n.left, n.right);
    }
    return out.finish(shape.root());
}

RegularTree random_spine_fixture(std::uint64_t seed, int width, int max_digit, int max_nodes)
{
    if (width < 1 || max_digit < 0) throw Error("random_spine_fixture: bad bounds");
    std::mt19937_64 rng(seed);
    std::map<CnfOrdinal, RegularTree> fillers;
    const int keys = 1 + draw(rng, 3);
    for (int k = 0; k < keys; ++k) {
        std::vector<CnfOrdinal::Digit> digits;
        for (int i = 0; i < width; ++i) digits.push_back(static_cast<CnfOrdinal::Digit>(draw(rng, max_digit + 1)));
        fillers.insert_or_assign(CnfOrdinal(std::move(digits)), random_tree_biased(rng(), max_nodes, 40));
    }
    return spine_tree(fillers, random_tree_biased(rng(), max_nodes, 0));
}

SpineFamily random_family(std::uint64_t seed, int max_prefix, int max_nodes)
{
    std::mt19937_64 rng(seed);
    SpineFamily family;
    const int m = draw(rng, max_prefix + 1);
    for (int k = 0; k < m; ++k) family.prefix.push_back(random_tree(rng(), max_nodes, Alphabet::binary()));
    family.tail = random_tree(rng(), max_nodes, Alphabet::binary());
    return family;
}

} // namespace rtg
