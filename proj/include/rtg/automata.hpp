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

#include "rtg/core.hpp"
#include "rtg/ordinal.hpp"

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace rtg {

using State = int;
using StateSet = std::vector<State>;  // sorted, no duplicates

/// (source, letter, state sent to the l-child, state sent to the r-child)
struct TreeTransition {
    State source = 0;
    int letter = 0;
    State left = 0;
    State right = 0;

    friend auto operator<=>(const TreeTransition&, const TreeTransition&) = default;
};

/// States, alphabet, transitions and initial state shared by the Büchi
/// and Muller flavours. States are 0..state_count()-1.
struct TreeAutomatonBase {
    Alphabet alphabet = Alphabet::binary();
    std::vector<std::string> names;  // one per state, informational
    std::vector<TreeTransition> transitions;
    State initial = 0;

    std::size_t state_count() const noexcept { return names.size(); }
    State add_state(std::string name);
    void add_transition(State source, std::string_view letter, State left, State right);

    /// Transitions sorted lexicographically, duplicates removed.
    void canonicalize();

    /// Transitions leaving `q` on `letter`.
    std::vector<TreeTransition> moves(State q, int letter) const;

    void validate() const;
};

struct BuchiTreeAutomaton : TreeAutomatonBase {
    StateSet accepting;
};

struct MullerTreeAutomaton : TreeAutomatonBase {
    std::vector<StateSet> family;  // sorted
};

/// At most one (left, right) pair per (state, letter).
bool is_deterministic(const TreeAutomatonBase& a);

/// Same states and transitions; family = every state set meeting F.
MullerTreeAutomaton buchi_to_muller(const BuchiTreeAutomaton& a);

/// Branch-guessing Büchi automaton for the trees having a path with
/// infinitely many 1s.
BuchiTreeAutomaton build_L_buchi();

/// Deterministic Muller automaton for the trees all of whose paths carry
/// finitely many 1s.
MullerTreeAutomaton build_Lminus_muller();

/// Least-odd-spine-index automaton built from automata for the two
/// complementary languages above (state sets are renamed apart).
MullerTreeAutomaton build_L1_muller(const MullerTreeAutomaton& minus, const MullerTreeAutomaton& plus);
MullerTreeAutomaton build_L1_muller();

/// Least spine ordinal below omega^n is odd. n == 1 yields build_L1_muller().
MullerTreeAutomaton build_Ln_muller(int n);

/// Least spine ordinal beta exists, is below alpha, and has parity
/// opposite to alpha. The leading digit of alpha must be nonzero.
MullerTreeAutomaton build_Talpha_muller(const CnfOrdinal& alpha);

/// Automaton file format:
///   buchi <nstates> <initial>   |   muller <nstates> <initial>
///   trans <q> <letter> <ql> <qr>
///   accept <q1> <q2> ...        (Büchi)
///   set <q1>,<q2>,...           (Muller, one line per family member)
std::string serialize(const BuchiTreeAutomaton& a);
std::string serialize(const MullerTreeAutomaton& a);

} // namespace rtg
