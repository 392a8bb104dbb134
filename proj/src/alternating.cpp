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

#include "rtg/alternating.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace rtg {

char direction_letter(Direction d) noexcept
{
    switch (d) {
    case Direction::Left: return 'l';
    case Direction::Right: return 'r';
    case Direction::Stay: return 's';
    }
    return '?';
}

MRIndex make_index(int iota, int kappa)
{
    if ((iota != 0 && iota != 1) || kappa < iota)
        throw Error("invalid index (" + std::to_string(iota) + "," + std::to_string(kappa) + ")");
    return {iota, kappa};
}

MRIndex parse_index(std::string_view text)
{
    auto comma = text.find(',');
    if (comma == std::string_view::npos) throw ParseError("index '" + std::string(text) + "' must be 'i,k'");
    const int iota = parse_int(text.substr(0, comma), "index minimum");
    const int kappa = parse_int(text.substr(comma + 1), "index maximum");
    if ((iota != 0 && iota != 1) || kappa < iota) throw ParseError("invalid index '" + std::string(text) + "'");
    return {iota, kappa};
}

std::string format_index(MRIndex idx)
{
    return std::to_string(idx.iota) + "," + std::to_string(idx.kappa);
}

bool index_leq(MRIndex a, MRIndex b)
{
    if (b.iota <= a.iota && a.kappa <= b.kappa) return true;
    return a.iota == 0 && b.iota == 1 && a.kappa + 2 <= b.kappa;
}

MRIndex dual_index(MRIndex a)
{
    if (a.iota == 1) {
        if (a.kappa < 1) throw Error("dual_index: invalid index");
        return {0, a.kappa - 1};
    }
    return {1, a.kappa + 1};
}

Alphabet game_alphabet(MRIndex idx)
{
    return Alphabet::owner_rank(idx.iota, idx.kappa);
}

State AlternatingParityAutomaton::add_state(std::string name, Player owner, int r)
{
    names.push_back(std::move(name));
    side.push_back(owner);
    rank.push_back(r);
    return static_cast<State>(names.size()) - 1;
}

void AlternatingParityAutomaton::add_move(State from, std::string_view letter, Direction d, State to)
{
    moves.push_back({from, alphabet.letter(letter), d, to});
}

void AlternatingParityAutomaton::normalize()
{
    if (rank.empty()) return;
    int lo = *std::min_element(rank.begin(), rank.end());
    const int shift = lo - lo % 2;
    if (shift == 0) return;
    for (auto& r : rank) r -= shift;
}

void AlternatingParityAutomaton::canonicalize()
{
    std::sort(moves.begin(), moves.end());
    moves.erase(std::unique(moves.begin(), moves.end()), moves.end());
}

void AlternatingParityAutomaton::validate() const
{
    const auto n = static_cast<State>(state_count());
    if (n == 0) throw Error("alternating automaton has no states");
    if (side.size() != names.size() || rank.size() != names.size())
        throw Error("alternating automaton: inconsistent state tables");
    if (initial < 0 || initial >= n) throw Error("alternating automaton: initial state out of range");
    for (int r : rank)
        if (r < 0) throw Error("alternating automaton: negative rank");
    for (const auto& m : moves) {
        if (m.from < 0 || m.from >= n || m.to < 0 || m.to >= n)
            throw Error("alternating automaton: move refers to a missing state");
        if (m.letter < 0 || static_cast<std::size_t>(m.letter) >= alphabet.size())
            throw Error("alternating automaton: move letter outside the alphabet");
    }
}

MRIndex index_of(const AlternatingParityAutomaton& a)
{
    auto copy = a;
    copy.validate();
    copy.normalize();
    auto [lo, hi] = std::minmax_element(copy.rank.begin(), copy.rank.end());
    return {*lo, *hi};
}

namespace {

const std::vector<std::string>& letters()
{
    static const std::vector<std::string> binary{"0", "1"};
    return binary;
}

// delta = {(q,1,d,q1), (q,0,d,q0) | q in Q, d in {l,r}}
AlternatingParityAutomaton letter_tracker(Player owner, const char* n0, int r0, const char* n1, int r1)
{
    AlternatingParityAutomaton a;
    const State q0 = a.add_state(n0, owner, r0);
    const State q1 = a.add_state(n1, owner, r1);
    for (State q : {q0, q1}) {
        for (Direction d : {Direction::Left, Direction::Right}) {
            a.add_move(q, "1", d, q1);
            a.add_move(q, "0", d, q0);
        }
    }
    a.initial = q0;
    a.canonicalize();
    return a;
}

State import_part(AlternatingParityAutomaton& into, const AlternatingParityAutomaton& part)
{
    const auto offset = static_cast<State>(into.state_count());
    std::set<std::string> taken(into.names.begin(), into.names.end());
    for (std::size_t q = 0; q < part.state_count(); ++q) {
        auto name = part.names[q];
        while (taken.count(name)) name += "'";
        taken.insert(name);
        into.add_state(name, part.side[q], part.rank[q]);
    }
    for (auto m : part.moves) {
        m.from += offset;
        m.to += offset;
        into.moves.push_back(m);
    }
    return offset;
}

struct AltParts {
    State plus_initial = 0;   // q_0 of the (1,2) automaton
    State minus_initial = 0;  // q'_0 of the (0,1) automaton
};

AltParts import_components(AlternatingParityAutomaton& a)
{
    auto plus = build_alt_L();
    auto minus = build_alt_Lminus();
    AltParts parts;
    parts.plus_initial = import_part(a, plus) + plus.initial;
    parts.minus_initial = import_part(a, minus) + minus.initial;
    return parts;
}

// Universal q1_0 (rank 0) and q1_1 (rank 1) with existential q_exists
// (rank 1): Eve may claim at odd spine positions only, Adam may check any
// r-child passed on the way.
State add_level0(AlternatingParityAutomaton& a, const AltParts& parts)
{
    const State even = a.add_state("q1_0", Player::Adam, 0);
    const State odd = a.add_state("q1_1", Player::Adam, 1);
    const State guess = a.add_state("q_exists", Player::Eve, 1);
    for (const auto& x : letters()) {
        a.add_move(even, x, Direction::Left, guess);
        a.add_move(even, x, Direction::Right, parts.minus_initial);
        a.add_move(guess, x, Direction::Right, parts.plus_initial);
        a.add_move(guess, x, Direction::Stay, odd);
        a.add_move(odd, x, Direction::Right, parts.minus_initial);
        a.add_move(odd, x, Direction::Left, even);
    }
    return even;
}

} // namespace

AlternatingParityAutomaton build_alt_L()
{
    return letter_tracker(Player::Eve, "q0", 1, "q1", 2);
}

AlternatingParityAutomaton build_alt_Lminus()
{
    return letter_tracker(Player::Adam, "q'0", 0, "q'1", 1);
}

AlternatingParityAutomaton build_alt_L1()
{
    AlternatingParityAutomaton a;
    auto parts = import_components(a);
    a.initial = add_level0(a, parts);
    a.canonicalize();
    a.validate();
    return a;
}

AlternatingParityAutomaton build_alt_Ln(int n)
{
    if (n < 1) throw Error("build_alt_Ln: n must be >= 1");
    if (n == 1) return build_alt_L1();

    AlternatingParityAutomaton a;
    auto parts = import_components(a);
    State below = add_level0(a, parts);

    // c_j: Adam walks the l-spine (rank 0, so staying there is fine for
    // Eve) or picks an r-child and descends to c_{j-1}; c_{-1} is q'_0.
    std::vector<State> checker;
    for (int j = 0; j + 1 < n; ++j) {
        const State c = a.add_state("c" + std::to_string(j), Player::Adam, 0);
        const State deeper = (j == 0) ? parts.minus_initial : checker.back();
        for (const auto& x : letters()) {
            a.add_move(c, x, Direction::Left, c);
            a.add_move(c, x, Direction::Right, deeper);
        }
        checker.push_back(c);
    }
    // s_k (Eve): stop here and descend right, or hand over to w_k (Adam)
    // who either checks the r-child against every smaller completion or
    // lets the walk continue left. Both rank 1: endless walking loses.
    for (int k = 1; k < n; ++k) {
        const State s = a.add_state("s" + std::to_string(k), Player::Eve, 1);
        const State w = a.add_state("w" + std::to_string(k), Player::Adam, 1);
        for (const auto& x : letters()) {
            a.add_move(s, x, Direction::Right, below);
            a.add_move(s, x, Direction::Stay, w);
            a.add_move(w, x, Direction::Right, checker[static_cast<std::size_t>(k - 1)]);
            a.add_move(w, x, Direction::Left, s);
        }
        below = s;
    }
    a.initial = below;
    a.canonicalize();
    a.validate();
    return a;
}

std::string serialize(const AlternatingParityAutomaton& a)
{
    std::ostringstream out;
    out << "alt " << a.state_count() << ' ' << a.initial << '\n';
    for (std::size_t q = 0; q < a.state_count(); ++q)
        out << (a.side[q] == Player::Eve ? "estate " : "astate ") << q << ' ' << a.rank[q] << '\n';
    auto sorted = a.moves;
    std::sort(sorted.begin(), sorted.end());
    for (const auto& m : sorted)
        out << "move " << m.from << ' ' << a.alphabet.symbol(m.letter) << ' ' << direction_letter(m.direction) << ' '
            << m.to << '\n';
    return out.str();
}

} // namespace rtg
