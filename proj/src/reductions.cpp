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

#include "rtg/reductions.hpp"

#include "rtg/membership.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace rtg {

const RegularTree& SpineFamily::at(std::size_t k) const
{
    if (k < prefix.size()) return prefix[k];
    if (!tail) throw Error("spine family has no tail");
    return *tail;
}

namespace {

void require_same_alphabet(const Alphabet& expected, const RegularTree& t, const char* what)
{
    if (!(t.alphabet() == expected)) throw Error(std::string(what) + ": trees do not share one alphabet");
}

// Alphabet of the family's trees, extended with the spine label 0.
Alphabet with_zero(const Alphabet& alphabet)
{
    if (alphabet.find("0")) return alphabet;
    auto symbols = alphabet.symbols();
    symbols.push_back("0");
    return Alphabet::infer(symbols);
}

} // namespace

RegularTree wadge_F(const SpineFamily& family)
{
    if (!family.tail) throw Error("wadge_F: family needs a tail tree");
    const auto& base = family.tail->alphabet();
    for (const auto& g : family.prefix) require_same_alphabet(base, g, "wadge_F");

    TreeAssembler out(with_zero(base));
    std::vector<int> spine;
    for (std::size_t k = 0; k <= family.prefix.size(); ++k) spine.push_back(out.add("0"));
    for (std::size_t k = 0; k < spine.size(); ++k) {
        const int below = out.graft(family.at(k));
        const int next = (k + 1 < spine.size()) ? spine[k + 1] : spine[k];
        out.set_children(spine[k], next, below);
    }
    return out.finish(spine.front());
}

RegularTree reduce_alt_to_W(const AlternatingParityAutomaton& input, const RegularTree& t)
{
    auto a = input;
    a.normalize();
    const MRIndex idx = index_of(a);
    const auto game = acceptance_game_alternating(a, t).game;

    TreeAssembler out(game_alphabet(idx));
    auto label = [](Player owner, int rank) { return format_owner_rank({owner, rank}); };

    std::vector<int> node(game.size());
    for (std::size_t p = 0; p < game.size(); ++p) node[p] = out.add(label(game.owner[p], game.rank[p]));

    int sink[2] = {-1, -1};
    auto losing_sink = [&](Player owner) {
        auto& s = sink[static_cast<int>(owner)];
        if (s >= 0) return s;
        const int want = owner == Player::Eve ? 1 : 0;
        int r = idx.iota;
        if (r % 2 != want) ++r;
        if (r > idx.kappa)
            throw Error("reduce_alt_to_W: index (" + format_index(idx) + ") has no rank losing for a stuck " +
                        (owner == Player::Eve ? "Eve" : "Adam"));
        s = out.add(label(owner, r));
        return s;
    };

    // Balanced binary choice over targets[lo, hi); returns the node id.
    std::function<int(Player, const std::vector<int>&, std::size_t, std::size_t)> gadget =
        [&](Player owner, const std::vector<int>& targets, std::size_t lo, std::size_t hi) -> int {
        if (hi - lo == 1) return targets[lo];
        const int g = out.add(label(owner, idx.iota));
        const std::size_t mid = lo + (hi - lo + 1) / 2;
        out.set_children(g, gadget(owner, targets, lo, mid), gadget(owner, targets, mid, hi));
        return g;
    };

    for (std::size_t p = 0; p < game.size(); ++p) {
        std::vector<int> targets;
        for (int q : game.moves[p]) targets.push_back(node[static_cast<std::size_t>(q)]);
        const int v = node[p];
        switch (targets.size()) {
        case 0: {
            const int s = losing_sink(game.owner[p]);
            out.set_children(v, s, s);
            break;
        }
        case 1:
            out.set_children(v, targets[0], targets[0]);
            break;
        default: {
            const std::size_t mid = (targets.size() + 1) / 2;
            out.set_children(v, gadget(game.owner[p], targets, 0, mid), gadget(game.owner[p], targets, mid, targets.size()));
            break;
        }
        }
    }
    return out.finish(node[static_cast<std::size_t>(game.initial)]);
}

RegularTree dualize_game_tree(MRIndex idx, const RegularTree& t)
{
    const MRIndex dual = dual_index(idx);
    const int shift = idx.iota == 0 ? 1 : -1;
    TreeAssembler out(game_alphabet(dual));
    for (std::size_t v = 0; v < t.size(); ++v) {
        const auto& token = t.label_token(static_cast<int>(v));
        auto letter = parse_owner_rank(token);
        if (!letter || letter->rank < idx.iota || letter->rank > idx.kappa)
            throw Error("dualize_game_tree: label '" + token + "' outside the index (" + format_index(idx) + ")");
        out.add(format_owner_rank({opponent(letter->owner), letter->rank + shift}));
    }
    for (std::size_t v = 0; v < t.size(); ++v) {
        const auto& n = t.node(static_cast<int>(v));
        out.set_children(static_cast<int>(v), n.left, n.right);
    }
    return out.finish(t.root());
}

RegularTree spine_tree(const std::map<CnfOrdinal, RegularTree>& fillers, const RegularTree& fallback)
{
    if (fillers.empty()) throw Error("spine_tree: no fillers");
    const std::size_t width = fillers.begin()->first.width();
    for (const auto& [key, tree] : fillers) {
        if (key.width() != width) throw Error("spine_tree: filler keys of different widths");
        require_same_alphabet(fallback.alphabet(), tree, "spine_tree");
    }
    if (!fallback.alphabet().find("0")) throw Error("spine_tree: alphabet has no label 0 for spine nodes");

    TreeAssembler out(fallback.alphabet());
    const int leaf = out.graft(fallback);

    // plain[k]: spine node with k digits still to read and no fillers below
    std::vector<int> plain{leaf};
    for (std::size_t k = 1; k <= width; ++k) {
        const int s = out.add("0");
        out.set_children(s, s, plain.back());
        plain.push_back(s);
    }

    using Iter = std::map<CnfOrdinal, RegularTree>::const_iterator;
    // Keys in [first, last) share their leading width-k digits.
    std::function<int(Iter, Iter, std::size_t)> build = [&](Iter first, Iter last, std::size_t k) -> int {
        if (k == 0) return out.graft(first->second);
        const std::size_t pos = width - k;
        const auto top = std::prev(last)->first.digits()[pos];
        std::vector<int> chain;
        for (CnfOrdinal::Digit b = 0; b <= top; ++b) chain.push_back(out.add("0"));
        Iter it = first;
        for (CnfOrdinal::Digit b = 0; b <= top; ++b) {
            Iter end = it;
            while (end != last && end->first.digits()[pos] == b) ++end;
            const int right = (it == end) ? plain[k - 1] : build(it, end, k - 1);
            const int left = (b < top) ? chain[b + 1] : plain[k];
            out.set_children(chain[b], left, right);
            it = end;
        }
        return chain.front();
    };
    return out.finish(build(fillers.begin(), fillers.end(), width));
}

} // namespace rtg
