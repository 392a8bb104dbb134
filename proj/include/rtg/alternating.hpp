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

#include "rtg/automata.hpp"
#include "rtg/core.hpp"

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace rtg {

/// Move direction of an alternating automaton; Stay is the lambda move.
enum class Direction : std::uint8_t { Left, Right, Stay };

char direction_letter(Direction d) noexcept;  // l, r, s

struct AltMove {
    State from = 0;
    int letter = 0;
    Direction direction = Direction::Left;
    State to = 0;

    friend auto operator<=>(const AltMove&, const AltMove&) = default;
};

/// Mostowski-Rabin index (iota, kappa): the rank range {iota..kappa}.
struct MRIndex {
    int iota = 0;
    int kappa = 0;

    friend bool operator==(const MRIndex&, const MRIndex&) = default;
};

/// Throws unless iota is 0 or 1 and iota <= kappa.
MRIndex make_index(int iota, int kappa);

/// Parses "i,k".
MRIndex parse_index(std::string_view text);
std::string format_index(MRIndex idx);

/// (iota,kappa) is below (iota',kappa') when its range embeds into the
/// other one, possibly shifted up by 2.
bool index_leq(MRIndex a, MRIndex b);

/// (1,n) <-> (0,n-1)
MRIndex dual_index(MRIndex a);

/// Sigma_(iota,kappa)
Alphabet game_alphabet(MRIndex idx);

/**
 * Alternating parity tree automaton. Existential states belong to Eve,
 * universal ones to Adam; acceptance is Eve winning the acceptance game
 * whose positions are (state, node) ranked by the state's rank.
 */
struct AlternatingParityAutomaton {
    Alphabet alphabet = Alphabet::binary();
    std::vector<std::string> names;
    std::vector<Player> side;  // Eve = existential
    std::vector<int> rank;
    std::vector<AltMove> moves;
    State initial = 0;

    std::size_t state_count() const noexcept { return names.size(); }
    State add_state(std::string name, Player owner, int r);
    void add_move(State from, std::string_view letter, Direction d, State to);

    bool is_existential(State q) const { return side.at(static_cast<std::size_t>(q)) == Player::Eve; }

    /// Shifts all ranks down by 2 until the minimum is 0 or 1.
    void normalize();
    void canonicalize();
    void validate() const;
};

/// (min rank, max rank) after normalization.
MRIndex index_of(const AlternatingParityAutomaton& a);

/// All-existential automaton of index (1,2) for the trees with a path
/// carrying infinitely many 1s.
AlternatingParityAutomaton build_alt_L();

/// All-universal automaton of index (0,1) for the complement.
AlternatingParityAutomaton build_alt_Lminus();

/// Index (0,2) automaton for least odd spine index, built from the two
/// above. rank(q_exists) = 1.
AlternatingParityAutomaton build_alt_L1();

/// Index (0,2) automaton for least odd spine ordinal below omega^n.
AlternatingParityAutomaton build_alt_Ln(int n);

/// Alternating automaton file format:
///   alt <nstates> <initial>
///   estate <q> <rank>  |  astate <q> <rank>
///   move <q> <letter> <l|r|s> <q'>
std::string serialize(const AlternatingParityAutomaton& a);

} // namespace rtg
