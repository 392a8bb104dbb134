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

#include "rtg/alternating.hpp"
#include "rtg/automata.hpp"
#include "rtg/games.hpp"
#include "rtg/rtree.hpp"

#include <vector>

namespace rtg {

/// Where a game position comes from: a tree node (internal index) and an
/// automaton state. `transition` is the index into the automaton's
/// transition list for Adam's positions of the nondeterministic games,
/// -1 elsewhere.
struct Provenance {
    int node = 0;
    State state = 0;
    int transition = -1;
};

struct MembershipGame {
    ParityGame game;
    std::vector<Provenance> provenance;  // per position
};

struct MullerMembershipGame {
    MullerGame game;
    std::vector<Provenance> provenance;
};

/// Eve at (v, q) picks a transition on label(v); Adam at (v, transition)
/// picks a direction. Rank 2 at (v, q) for accepting q, 1 elsewhere.
/// Only positions reachable from (root, initial) are built.
MembershipGame membership_game_buchi(const BuchiTreeAutomaton& a, const RegularTree& t);

/// Same arena as the Büchi game, colored by the automaton state.
MullerMembershipGame membership_game_muller(const MullerTreeAutomaton& a, const RegularTree& t);

/// The Muller game restricted to the states that occur, reduced to a
/// parity game by lar_reduce. Eve wins it iff t is accepted.
ParityGame membership_parity_game(const MullerTreeAutomaton& a, const RegularTree& t);

bool member_nondet(const BuchiTreeAutomaton& a, const RegularTree& t);
bool member_nondet(const MullerTreeAutomaton& a, const RegularTree& t);

/// Positions (q, v), owned by q's side and ranked rank(q); a move
/// (q, label(v), d, q') leads to (q', v.d), staying at v for lambda.
MembershipGame acceptance_game_alternating(const AlternatingParityAutomaton& a, const RegularTree& t);

bool member_alternating(const AlternatingParityAutomaton& a, const RegularTree& t);

/// G(t): one position per node, owner and rank read off the E<r>/A<r>
/// label, moves to both children.
ParityGame game_of_tree(const RegularTree& t);

/// Eve wins G(t). Throws if a label lies outside Sigma_idx.
bool member_W(MRIndex idx, const RegularTree& t);

/// Letter of the automaton alphabet for each letter of the tree alphabet,
/// matched by token. Throws if the tree uses a token the automaton lacks.
std::vector<int> letter_map(const Alphabet& automaton, const Alphabet& tree);

} // namespace rtg
