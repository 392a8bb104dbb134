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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rtg {

inline constexpr int kNoMove = -1;

/**
 * Finite parity game. Eve wins an infinite play iff the largest rank seen
 * infinitely often is even; a player who cannot move loses.
 *
 * Positions are 0..size()-1; `moves[p]` is the ordered successor list.
 */
struct ParityGame {
    std::vector<Player> owner;
    std::vector<int> rank;
    std::vector<std::vector<int>> moves;
    int initial = 0;

    std::size_t size() const noexcept { return owner.size(); }

    int add_position(Player who, int r);
    void add_move(int from, int to);

    /// Throws if a successor or the initial position is out of range.
    void validate() const;

    bool has_dead_ends() const;

    /// Redirects every dead end to a fresh self-looping sink whose rank
    /// makes the stuck player lose (odd for Eve, even for Adam).
    void normalize();

    int max_rank() const;
};

/// Positional strategy: `choice[p]` is the successor picked at p, or kNoMove.
struct Strategy {
    std::vector<int> choice;

    Strategy() = default;
    explicit Strategy(std::size_t n) : choice(n, kNoMove) {}

    bool defined(int p) const { return choice.at(static_cast<std::size_t>(p)) != kNoMove; }
    int operator[](int p) const { return choice.at(static_cast<std::size_t>(p)); }
};

struct Solution {
    std::vector<Player> winner;          // per position
    std::vector<int> eve_region;         // sorted
    std::vector<int> adam_region;        // sorted
    Strategy eve_strategy;               // on Eve positions of eve_region
    Strategy adam_strategy;              // on Adam positions of adam_region

    Player winner_at(int p) const { return winner.at(static_cast<std::size_t>(p)); }
    const std::vector<int>& region(Player p) const { return p == Player::Eve ? eve_region : adam_region; }
    const Strategy& strategy(Player p) const { return p == Player::Eve ? eve_strategy : adam_strategy; }
};

/// Least superset of `target` closed under: `player` positions with a move
/// into it and opponent positions (with at least one move) all of whose
/// moves go into it. `target` and the result are position masks.
std::vector<char> attractor(const ParityGame& game, Player player, const std::vector<char>& target);

/// Zielonka's recursive algorithm. Dead ends are normalized first; the
/// returned vectors cover only the positions of `game` itself.
Solution solve_zielonka(const ParityGame& game);

inline constexpr std::size_t kBruteforceCap = 12;

/// Enumerates all positional Eve strategies. Throws when the normalized
/// game has more than `cap` positions (cap <= 64).
std::vector<Player> solve_bruteforce(const ParityGame& game, std::size_t cap = kBruteforceCap);

/// Same enumeration split across OpenMP threads.
std::vector<Player> solve_bruteforce_parallel(const ParityGame& game, std::size_t cap = kBruteforceCap);

struct Verdict {
    bool ok = false;
    std::string diagnostic;

    explicit operator bool() const noexcept { return ok; }
};

/// Checks that `strategy` wins for `player` from every position of
/// `region`: the region must be closed under the strategy-restricted
/// moves and every cycle in it must have a maximum rank of the player's
/// parity.
Verdict verify_strategy(const ParityGame& game, Player player, const Strategy& strategy,
                        const std::vector<int>& region);

/// Parity game file format:
///   parity <npositions> <initial>
///   pos <id> <rank> <E|A> <succ1>,<succ2>,...
ParityGame parse_parity_game(std::string_view text);
std::string serialize(const ParityGame& game);

/// Game whose winning condition asks that the set of colors seen
/// infinitely often belongs to `family`.
struct MullerGame {
    std::vector<Player> owner;
    std::vector<std::vector<int>> moves;
    std::vector<int> color;
    std::vector<std::vector<int>> family;  // each member sorted
    int initial = 0;

    std::size_t size() const noexcept { return owner.size(); }
    int add_position(Player who, int c);
    void add_move(int from, int to) { moves.at(static_cast<std::size_t>(from)).push_back(to); }
    int color_count() const;

    void validate() const;

    /// Dead ends go to fresh sinks with fresh colors; the Adam-losing
    /// sink's color is added to the family as a singleton.
    void normalize();
};

struct LarPosition {
    int position = 0;
    std::vector<int> record;  // colors seen so far, most recent first
    int hit = 0;              // 1-based index of the last visited color before it moved to front
};

struct LarReduction {
    ParityGame game;
    std::vector<LarPosition> origin;  // per parity-game position
};

/**
 * Latest-appearance-record product. Entering a position of color c moves
 * c to the front of the record; with m the 1-based index c had (record
 * length + 1 for a new color), the product position gets rank 2m when the
 * first m colors form a member of the family and 2m+1 otherwise.
 * Eve wins `muller` from its initial position iff she wins the result
 * from its initial position. Only reachable product positions are built.
 */
LarReduction lar_reduce(const MullerGame& muller);

} // namespace rtg
