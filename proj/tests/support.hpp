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

#include "rtg/games.hpp"
#include "rtg/ordinal.hpp"
#include "rtg/rtree.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace rtg::testing {

/// Every binary tree presented with one node or two nodes, all labelings.
std::vector<RegularTree> small_binary_trees();

/// Least spine ordinal found by enumerating every digit tuple below the
/// node count, by walking the tree word by word.
std::optional<CnfOrdinal> exhaustive_least_spine(const RegularTree& t, int n);

/// Path with infinitely many 1s, decided by unrolling: some node reachable
/// from the root can reach itself through a 1-labelled node.
bool brute_L(const RegularTree& t);

/// Winner per position of a Muller game by the classical recursion over
/// color sets (attractors, no LAR).
std::vector<Player> solve_muller_direct(const MullerGame& game);

/// Does Eve win from the initial position with a strategy whose memory is
/// the record of colors seen (most recent first)? Backtracking over the
/// choices reachable under the strategy built so far; each complete
/// strategy is checked by testing every strongly connected part of the
/// product graph against the family. Returns nullopt when more than
/// `budget` nodes of the search are visited.
std::optional<bool> eve_wins_with_lar_memory(const MullerGame& game, std::int64_t budget);

/// Sum of a_i * base^i, for comparing ordinals as integers.
unsigned __int128 base_value(const CnfOrdinal& x, std::uint64_t base);

} // namespace rtg::testing
