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

#include "rtg/membership.hpp"

#include <algorithm>
#include <unordered_map>

namespace rtg {

std::vector<int> letter_map(const Alphabet& automaton, const Alphabet& tree)
{
    std::vector<int> map;
    map.reserve(tree.size());
    for (const auto& token : tree.symbols()) {
        auto x = automaton.find(token);
        if (!x) throw Error("alphabet mismatch: tree label '" + token + "' is not a letter of the automaton");
        map.push_back(*x);
    }
    return map;
}

namespace {

// Shared arena of the Büchi and Muller membership games.
struct NondetArena {
    ParityGame game;
    std::vector<Provenance> provenance;
};

NondetArena nondet_arena(const TreeAutomatonBase& a, const RegularTree& t, const std::vector<char>& accepting)
{
    a.validate();
    const auto letters = letter_map(a.alphabet, t.alphabet());
    const auto states = static_cast<long long>(a.state_count());

    // transitions grouped by (state, letter)
    std::vector<std::vector<int>> by_key(a.state_count() * a.alphabet.size());
    for (std::size_t i = 0; i < a.transitions.size(); ++i) {
        const auto& tr = a.transitions[i];
        by_key[static_cast<std::size_t>(tr.source) * a.alphabet.size() + static_cast<std::size_t>(tr.letter)].push_back(
            static_cast<int>(i));
    }

    NondetArena arena;
    auto& g = arena.game;
    std::unordered_map<long long, int> eve_at;    // v * |Q| + q
    std::unordered_map<long long, int> adam_at;   // v * |Delta| + i
    std::vector<int> work;

    auto eve = [&](int v, State q) {
        const long long key = v * states + q;
        auto [it, fresh] = eve_at.emplace(key, 0);
        if (fresh) {
            it->second = g.add_position(Player::Eve, accepting[static_cast<std::size_t>(q)] ? 2 : 1);
            arena.provenance.push_back({v, q, -1});
            work.push_back(it->second);
        }
        return it->second;
    };
    auto adam = [&](int v, int i) {
        const long long key = v * static_cast<long long>(a.transitions.size()) + i;
        auto [it, fresh] = adam_at.emplace(key, 0);
        if (fresh) {
            it->second = g.add_position(Player::Adam, 1);
            arena.provenance.push_back({v, a.transitions[static_cast<std::size_t>(i)].source, i});
            work.push_back(it->second);
        }
        return it->second;
    };

    g.initial = eve(t.root(), a.initial);
    while (!work.empty()) {
        const int p = work.back();
        work.pop_back();
        const auto src = arena.provenance[static_cast<std::size_t>(p)];
        const auto& node = t.node(src.node);
        if (src.transition < 0) {
            const auto letter = static_cast<std::size_t>(letters[static_cast<std::size_t>(node.label)]);
            for (int i : by_key[static_cast<std::size_t>(src.state) * a.alphabet.size() + letter]) {
                const int to = adam(src.node, i);
                g.add_move(p, to);
            }
        } else {
            const auto& tr = a.transitions[static_cast<std::size_t>(src.transition)];
            const int l = eve(node.left, tr.left);
            const int r = eve(node.right, tr.right);
            g.add_move(p, l);
            g.add_move(p, r);
        }
    }
    return arena;
}

} // namespace

MembershipGame membership_game_buchi(const BuchiTreeAutomaton& a, const RegularTree& t)
{
    std::vector<char> accepting(a.state_count(), 0);
    for (State q : a.accepting) accepting.at(static_cast<std::size_t>(q)) = 1;
    auto arena = nondet_arena(a, t, accepting);
    return {std::move(arena.game), std::move(arena.provenance)};
}

MullerMembershipGame membership_game_muller(const MullerTreeAutomaton& a, const RegularTree& t)
{
    auto arena = nondet_arena(a, t, std::vector<char>(a.state_count(), 0));
    MullerMembershipGame out;
    auto& m = out.game;
    const auto& g = arena.game;
    for (std::size_t p = 0; p < g.size(); ++p) m.add_position(g.owner[p], arena.provenance[p].state);
    m.moves = g.moves;
    m.initial = g.initial;
    m.family = a.family;
    out.provenance = std::move(arena.provenance);
    return out;
}

bool member_nondet(const BuchiTreeAutomaton& a, const RegularTree& t)
{
    const auto mg = membership_game_buchi(a, t);
    return solve_zielonka(mg.game).winner_at(mg.game.initial) == Player::Eve;
}

ParityGame membership_parity_game(const MullerTreeAutomaton& a, const RegularTree& t)
{
    auto mg = membership_game_muller(a, t);
    auto& m = mg.game;

    // Keep only colors that occur, renumbered densely, and the family
    // members made of them.
    std::vector<int> dense(a.state_count(), -1);
    int used = 0;
    for (auto& c : m.color) {
        auto& d = dense[static_cast<std::size_t>(c)];
        if (d < 0) d = used++;
        c = d;
    }
    std::vector<std::vector<int>> family;
    for (const auto& set : a.family) {
        std::vector<int> mapped;
        bool inside = !set.empty();
        for (State q : set) {
            const int d = dense[static_cast<std::size_t>(q)];
            if (d < 0) {
                inside = false;
                break;
            }
            mapped.push_back(d);
        }
        if (!inside) continue;
        std::sort(mapped.begin(), mapped.end());
        family.push_back(std::move(mapped));
    }
    m.family = std::move(family);

    return lar_reduce(m).game;
}

bool member_nondet(const MullerTreeAutomaton& a, const RegularTree& t)
{
    const auto g = membership_parity_game(a, t);
    return solve_zielonka(g).winner_at(g.initial) == Player::Eve;
}

MembershipGame acceptance_game_alternating(const AlternatingParityAutomaton& a, const RegularTree& t)
{
    a.validate();
    const auto letters = letter_map(a.alphabet, t.alphabet());
    const auto width = a.alphabet.size();

    std::vector<std::vector<const AltMove*>> by_key(a.state_count() * width);
    for (const auto& m : a.moves)
        by_key[static_cast<std::size_t>(m.from) * width + static_cast<std::size_t>(m.letter)].push_back(&m);

    MembershipGame out;
    auto& g = out.game;
    const auto states = static_cast<long long>(a.state_count());
    std::unordered_map<long long, int> index;
    std::vector<int> work;
    auto at = [&](State q, int v) {
        auto [it, fresh] = index.emplace(v * states + q, 0);
        if (fresh) {
            const auto qi = static_cast<std::size_t>(q);
            it->second = g.add_position(a.side[qi], a.rank[qi]);
            out.provenance.push_back({v, q, -1});
            work.push_back(it->second);
        }
        return it->second;
    };

    g.initial = at(a.initial, t.root());
    while (!work.empty()) {
        const int p = work.back();
        work.pop_back();
        const auto src = out.provenance[static_cast<std::size_t>(p)];
        const auto& node = t.node(src.node);
        const auto letter = static_cast<std::size_t>(letters[static_cast<std::size_t>(node.label)]);
        for (const AltMove* m : by_key[static_cast<std::size_t>(src.state) * width + letter]) {
            int v = src.node;
            if (m->direction == Direction::Left) v = node.left;
            if (m->direction == Direction::Right) v = node.right;
            const int to = at(m->to, v);
            auto& succ = g.moves[static_cast<std::size_t>(p)];
            if (std::find(succ.begin(), succ.end(), to) == succ.end()) succ.push_back(to);
        }
    }
    return out;
}

bool member_alternating(const AlternatingParityAutomaton& a, const RegularTree& t)
{
    const auto mg = acceptance_game_alternating(a, t);
    return solve_zielonka(mg.game).winner_at(mg.game.initial) == Player::Eve;
}

ParityGame game_of_tree(const RegularTree& t)
{
    ParityGame g;
    for (std::size_t v = 0; v < t.size(); ++v) {
        const auto& token = t.label_token(static_cast<int>(v));
        auto letter = parse_owner_rank(token);
        if (!letter) throw Error("game tree label '" + token + "' is not an owner-rank letter");
        g.add_position(letter->owner, letter->rank);
    }
    for (std::size_t v = 0; v < t.size(); ++v) {
        const auto& node = t.node(static_cast<int>(v));
        g.add_move(static_cast<int>(v), node.left);
        g.add_move(static_cast<int>(v), node.right);
    }
    g.initial = t.root();
    return g;
}

bool member_W(MRIndex idx, const RegularTree& t)
{
    auto g = game_of_tree(t);
    for (int r : g.rank)
        if (r < idx.iota || r > idx.kappa)
            throw Error("game tree rank " + std::to_string(r) + " outside the index (" + format_index(idx) + ")");
    return solve_zielonka(g).winner_at(g.initial) == Player::Eve;
}

} // namespace rtg
