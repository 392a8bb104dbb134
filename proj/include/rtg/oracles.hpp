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

#include "rtg/ordinal.hpp"
#include "rtg/rtree.hpp"

#include <vector>

namespace rtg {

/// Some path carries infinitely many 1s: a node labelled 1 lies on a cycle
/// of the presentation graph (all nodes are reachable from the root).
bool oracle_L(const RegularTree& t);
bool oracle_Lminus(const RegularTree& t);

/// Per internal node index: the subtree rooted there is in L.
std::vector<char> subtrees_in_L(const RegularTree& t);

struct SpineSearchResult {
    bool found = false;
    CnfOrdinal least = CnfOrdinal::zero(1);  // meaningful iff found
};

/// Spine address of (b_(n-1), ..., b_0): l^b_(n-1) r ... l^b_0 r.
std::string spine_address(const CnfOrdinal& digits);

/// Least ordinal b of width n (lexicographic) whose spine subtree is in L,
/// found digit by digit with each digit searched below the node count.
SpineSearchResult oracle_least_spine(const RegularTree& t, int n);

bool oracle_Ln(const RegularTree& t, int n);
inline bool oracle_L1(const RegularTree& t) { return oracle_Ln(t, 1); }

/// The least spine ordinal beta of alpha's width exists, is below alpha,
/// and has the parity opposite to alpha's.
bool oracle_Talpha(const RegularTree& t, const CnfOrdinal& alpha);

/// `bits[theta]` says whether the point lies in A_theta for an increasing
/// family A_0 <= ... <= A_(eta-1). True iff the least theta with bits set
/// exists and has the parity opposite to eta. Throws when bits.size() !=
/// eta, eta == 0, or the family is not increasing.
bool diff_eval(const std::vector<bool>& bits, int eta);

} // namespace rtg
