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
#include "rtg/ordinal.hpp"
#include "rtg/rtree.hpp"

#include <map>
#include <optional>
#include <vector>

namespace rtg {

/// Eventually constant family of trees: prefix[k] for k < prefix.size(),
/// tail for every larger k.
struct SpineFamily {
    std::vector<RegularTree> prefix;
    std::optional<RegularTree> tail;

    const RegularTree& at(std::size_t k) const;
};

/// Tree labelled 0 along the l-spine with subtree g_k at l^k r.
RegularTree wadge_F(const SpineFamily& family);

/**
 * Unravels the acceptance game of `a` on `t` into a game tree over
 * Sigma_idx, idx = index_of(a): each game position becomes a node
 * labelled (owner, rank). A single move is copied to both children, more
 * than two moves are spread over a balanced binary gadget of nodes with
 * the same owner and rank iota, and a dead end leads to a self-looping
 * node of a rank losing for its owner. Eve wins the game tree iff `t` is
 * accepted.
 */
RegularTree reduce_alt_to_W(const AlternatingParityAutomaton& a, const RegularTree& t);

/// Swaps owners and shifts ranks by one so that the result lies in
/// Sigma_dual(idx) and belongs to W_dual(idx) iff `t` is outside W_idx.
RegularTree dualize_game_tree(MRIndex idx, const RegularTree& t);

/// Tree whose spine subtree at each key of `fillers` is the filler and
/// `fallback` at every other spine address of the same width. Spine nodes
/// are labelled 0. All keys must have the same width.
RegularTree spine_tree(const std::map<CnfOrdinal, RegularTree>& fillers, const RegularTree& fallback);

} // namespace rtg
