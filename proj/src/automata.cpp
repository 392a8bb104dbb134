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

#include "rtg/automata.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace rtg {

State TreeAutomatonBase::add_state(std::string name)
{
    names.push_back(std::move(name));
    return static_cast<State>(names.size()) - 1;
}

void TreeAutomatonBase::add_transition(State source, std::string_view letter, State left, State right)
{
    transitions.push_back({source, alphabet.letter(letter), left, right});
}

void TreeAutomatonBase::canonicalize()
{
    std::sort(transitions.begin(), transitions.end());
    transitions.erase(std::unique(transitions.begin(), transitions.end()), transitions.end());
}

std::vector<TreeTransition> TreeAutomatonBase::moves(State q, int letter) const
{
    std::vector<TreeTransition> out;
    for (const auto& t : transitions)
        if (t.source == q && t.letter == letter) out.push_back(t);
    return out;
}

void TreeAutomatonBase::validate() const
{
    const auto n = static_cast<State>(state_count());
    if (n == 0) throw Error("automaton has no states");
    if (initial < 0 || initial >= n) throw Error("automaton: initial state out of range");
    for (const auto& t : transitions) {
        if (t.source < 0 || t.source >= n || t.left < 0 || t.left >= n || t.right < 0 || t.right >= n)
            throw Error("automaton: transition refers to a missing state");
        if (t.letter < 0 || static_cast<std::size_t>(t.letter) >= alphabet.size())
            throw Error("automaton: transition letter outside the alphabet");
    }
}

bool is_deterministic(const TreeAutomatonBase& a)
{
    std::set<std::pair<State, int>> seen;
    std::set<TreeTransition> distinct(a.transitions.begin(), a.transitions.end());
    for (const auto& t : distinct)
        if (!seen.emplace(t.source, t.letter).second) return false;
    return true;
}

MullerTreeAutomaton buchi_to_muller(const BuchiTreeAutomaton& a)
{
    a.validate();
    const auto n = a.state_count();
    if (n > 20) throw Error("buchi_to_muller: explicit family needs <= 20 states");
    MullerTreeAutomaton m;
    static_cast<TreeAutomatonBase&>(m) = a;
    std::vector<char> accepting(n, 0);
    for (State q : a.accepting) accepting.at(static_cast<std::size_t>(q)) = 1;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        StateSet set;
        bool meets = false;
        for (std::size_t q = 0; q < n; ++q) {
            if (!(mask >> q & 1)) continue;
            set.push_back(static_cast<State>(q));
            meets = meets || accepting[q];
        }
        if (meets) m.family.push_back(std::move(set));
    }
    std::sort(m.family.begin(), m.family.end());
    return m;
}

BuchiTreeAutomaton build_L_buchi()
{
    // The branch state handed to a child records the parent's letter, so a
    // guessed branch sees b1 infinitely often iff it carries infinitely many 1s.
    BuchiTreeAutomaton a;
    const State b0 = a.add_state("b0");
    const State b1 = a.add_state("b1");
    const State d = a.add_state("d");
    for (State q : {b0, b1}) {
        for (const char* letter : {"0", "1"}) {
            const State next = (letter[0] == '1') ? b1 : b0;
            a.add_transition(q, letter, next, d);
            a.add_transition(q, letter, d, next);
        }
    }
    for (const char* letter : {"0", "1"}) a.add_transition(d, letter, d, d);
    a.initial = b0;
    a.accepting = {b1, d};
    a.canonicalize();
    return a;
}

MullerTreeAutomaton build_Lminus_muller()
{
    MullerTreeAutomaton a;
    const State m0 = a.add_state("m0");
    const State m1 = a.add_state("m1");
    for (State q : {m0, m1}) {
        a.add_transition(q, "0", m0, m0);
        a.add_transition(q, "1", m1, m1);
    }
    a.initial = m0;
    a.family = {{m0}};
    a.canonicalize();
    return a;
}

namespace {

// Copies the states, transitions and family of `part` into `into` and
// returns the state offset. Clashing names get a prime appended.
State import_part(MullerTreeAutomaton& into, const MullerTreeAutomaton& part)
{
    part.validate();
    if (!(part.alphabet == into.alphabet)) throw Error("automaton composition: alphabets differ");
    const auto offset = static_cast<State>(into.state_count());
    std::set<std::string> taken(into.names.begin(), into.names.end());
    for (auto name : part.names) {
        while (taken.count(name)) name += "'";
        taken.insert(name);
        into.add_state(name);
    }
    for (auto t : part.transitions) {
        t.source += offset;
        t.left += offset;
        t.right += offset;
        into.transitions.push_back(t);
    }
    for (auto set : part.family) {
        for (auto& q : set) q += offset;
        into.family.push_back(std::move(set));
    }
    return offset;
}

void finish(MullerTreeAutomaton& a)
{
    for (auto& set : a.family) std::sort(set.begin(), set.end());
    std::sort(a.family.begin(), a.family.end());
    a.family.erase(std::unique(a.family.begin(), a.family.end()), a.family.end());
    a.canonicalize();
    a.validate();
}

const std::vector<std::string>& letters()
{
    static const std::vector<std::string> binary{"0", "1"};
    return binary;
}

// Components shared by the spine-guessing automata: copies of A^- and
// A^+, the accept-all state q_f, and the deterministic universal checkers
// e_0..e_{depth-1}. e_0 walks the l-spine dispatching A^- to every
// r-child; e_j dispatches e_{j-1} instead.
struct SpineParts {
    State minus_initial = 0;
    State plus_initial = 0;
    State accept_all = 0;
    std::vector<State> checker;
};

SpineParts add_spine_parts(MullerTreeAutomaton& a, int depth)
{
    SpineParts parts;
    auto minus = build_Lminus_muller();
    auto plus = buchi_to_muller(build_L_buchi());
    parts.minus_initial = import_part(a, minus) + minus.initial;
    parts.plus_initial = import_part(a, plus) + plus.initial;
    parts.accept_all = a.add_state("qf");
    for (const auto& x : letters()) a.add_transition(parts.accept_all, x, parts.accept_all, parts.accept_all);
    a.family.push_back({parts.accept_all});
    for (int j = 0; j < depth; ++j) {
        const State e = a.add_state("e" + std::to_string(j));
        const State below = (j == 0) ? parts.minus_initial : parts.checker.back();
        for (const auto& x : letters()) a.add_transition(e, x, e, below);
        a.family.push_back({e});
        parts.checker.push_back(e);
    }
    return parts;
}

// Level-0 guessing gadget: p0/p1 track the parity of the number of
// l-steps taken; stopping (r-child to A^+) is allowed in p_{stop_parity}.
std::pair<State, State> add_parity_walk(MullerTreeAutomaton& a, const SpineParts& parts, int stop_parity)
{
    const State p0 = a.add_state("p0");
    const State p1 = a.add_state("p1");
    for (const auto& x : letters()) {
        a.add_transition(p0, x, p1, parts.minus_initial);
        a.add_transition(p1, x, p0, parts.minus_initial);
        a.add_transition(stop_parity == 0 ? p0 : p1, x, parts.accept_all, parts.plus_initial);
    }
    return {p0, p1};
}

} // namespace

MullerTreeAutomaton build_L1_muller(const MullerTreeAutomaton& minus, const MullerTreeAutomaton& plus)
{
    MullerTreeAutomaton a;
    a.alphabet = minus.alphabet;
    const State q0 = import_part(a, minus) + minus.initial;
    const State q0_plus = import_part(a, plus) + plus.initial;
    const State even = a.add_state("q1_0");
    const State odd = a.add_state("q1_1");
    const State qf = a.add_state("qf");
    if (a.state_count() != minus.state_count() + plus.state_count() + 3)
        throw Error("build_L1_muller: state sets overlap after renaming");
    for (const auto& x : a.alphabet.symbols()) {
        a.add_transition(even, x, odd, q0);
        a.add_transition(odd, x, qf, q0_plus);
        a.add_transition(qf, x, qf, qf);
        a.add_transition(odd, x, even, q0);
    }
    a.family.push_back({qf});
    a.initial = even;
    finish(a);
    return a;
}

MullerTreeAutomaton build_L1_muller()
{
    return build_L1_muller(build_Lminus_muller(), buchi_to_muller(build_L_buchi()));
}

MullerTreeAutomaton build_Ln_muller(int n)
{
    if (n < 1) throw Error("build_Ln_muller: n must be >= 1");
    if (n == 1) return build_L1_muller();

    MullerTreeAutomaton a;
    auto parts = add_spine_parts(a, n - 1);
    auto [p0, p1] = add_parity_walk(a, parts, 1);
    (void)p1;
    // g_k guesses digit a_k: loop left while e_{k-1} checks the r-child,
    // or stop and descend right into level k-1.
    State below = p0;
    for (int k = 1; k < n; ++k) {
        const State g = a.add_state("g" + std::to_string(k));
        for (const auto& x : letters()) {
            a.add_transition(g, x, g, parts.checker[static_cast<std::size_t>(k - 1)]);
            a.add_transition(g, x, parts.accept_all, below);
        }
        below = g;
    }
    a.initial = below;
    finish(a);
    return a;
}

MullerTreeAutomaton build_Talpha_muller(const CnfOrdinal& alpha)
{
    if (alpha.leading() == 0) throw Error("build_Talpha_muller: leading digit of alpha must be nonzero");
    const int n = static_cast<int>(alpha.width());
    std::uint64_t total = 0;
    for (auto d : alpha.digits()) total += d;
    if (total > 100000) throw Error("build_Talpha_muller: digits too large");

    // Required parity of the guessed ordinal: opposite to alpha's.
    const int stop_parity = parity(alpha) == Parity::Even ? 1 : 0;

    MullerTreeAutomaton a;
    auto parts = add_spine_parts(a, n - 1);

    // Free states: the guessed prefix is already strictly below alpha.
    std::vector<State> free_start(static_cast<std::size_t>(n), -1);
    if (n >= 2) {
        free_start[0] = add_parity_walk(a, parts, stop_parity).first;
        for (int k = 1; k <= n - 2; ++k) {
            const State g = a.add_state("g" + std::to_string(k));
            for (const auto& x : letters()) {
                a.add_transition(g, x, g, parts.checker[static_cast<std::size_t>(k - 1)]);
                a.add_transition(g, x, parts.accept_all, free_start[static_cast<std::size_t>(k - 1)]);
            }
            free_start[static_cast<std::size_t>(k)] = g;
        }
    }

    // Tight states t<k>_<i>: digits above k equal alpha's, i l-steps taken
    // at level k. Built bottom-up so each level knows where to descend.
    State tight_below = -1;  // t<k-1>_0, or -1 when level k-1 has no tight states
    for (int k = 0; k < n; ++k) {
        const auto a_k = alpha.coefficient(static_cast<std::size_t>(k));
        const std::uint64_t count = (k == 0) ? a_k : a_k + 1;
        std::vector<State> t;
        for (std::uint64_t i = 0; i < count; ++i)
            t.push_back(a.add_state("t" + std::to_string(k) + "_" + std::to_string(i)));
        for (std::uint64_t i = 0; i < count; ++i) {
            const State here = t[static_cast<std::size_t>(i)];
            for (const auto& x : letters()) {
                if (i + 1 < count) {
                    const State check = (k == 0) ? parts.minus_initial : parts.checker[static_cast<std::size_t>(k - 1)];
                    a.add_transition(here, x, t[static_cast<std::size_t>(i + 1)], check);
                }
                if (k == 0) {
                    if (static_cast<int>(i % 2) == stop_parity) a.add_transition(here, x, parts.accept_all, parts.plus_initial);
                } else if (i < a_k) {
                    a.add_transition(here, x, parts.accept_all, free_start[static_cast<std::size_t>(k - 1)]);
                } else if (tight_below >= 0) {
                    a.add_transition(here, x, parts.accept_all, tight_below);
                }
            }
        }
        tight_below = t.empty() ? -1 : t.front();
    }
    a.initial = tight_below;
    finish(a);
    return a;
}

namespace {

void write_transitions(std::ostream& out, const TreeAutomatonBase& a)
{
    auto sorted = a.transitions;
    std::sort(sorted.begin(), sorted.end());
    for (const auto& t : sorted)
        out << "trans " << t.source << ' ' << a.alphabet.symbol(t.letter) << ' ' << t.left << ' ' << t.right << '\n';
}

} // namespace

std::string serialize(const BuchiTreeAutomaton& a)
{
    std::ostringstream out;
    out << "buchi " << a.state_count() << ' ' << a.initial << '\n';
    write_transitions(out, a);
    auto accepting = a.accepting;
    std::sort(accepting.begin(), accepting.end());
    out << "accept";
    for (State q : accepting) out << ' ' << q;
    out << '\n';
    return out.str();
}

std::string serialize(const MullerTreeAutomaton& a)
{
    std::ostringstream out;
    out << "muller " << a.state_count() << ' ' << a.initial << '\n';
    write_transitions(out, a);
    auto family = a.family;
    for (auto& set : family) std::sort(set.begin(), set.end());
    std::sort(family.begin(), family.end());
    for (const auto& set : family) {
        out << "set";
        for (std::size_t i = 0; i < set.size(); ++i) out << (i == 0 ? ' ' : ',') << set[i];
        out << '\n';
    }
    return out.str();
}

} // namespace rtg
