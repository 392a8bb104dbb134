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

/// Defect found while building a tree from a node table.
class TreeBuildError : public Error {
public:
    enum class Kind { EmptyNodeSet, MissingRoot, DanglingChild, DuplicateNode, UnknownLabel };

    TreeBuildError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

/// One row of a node table, using external node ids.
struct NodeSpec {
    int id = 0;
    std::string label;
    int left = 0;
    int right = 0;
};

/**
 * Infinite binary labelled tree given by a finite rooted graph: every node
 * has a label, an l-successor and an r-successor, and the tree is the
 * unfolding from the root.
 *
 * Nodes are addressed by dense internal indices 0..size()-1, ordered by
 * their external id. External ids are kept so that serialization of a
 * parsed file is stable. Every node is reachable from the root.
 */
class RegularTree {
public:
    struct Node {
        int label = 0;
        int left = 0;
        int right = 0;
    };

    /// Validates the table, drops nodes unreachable from `root_id`.
    static RegularTree build(Alphabet alphabet, const std::vector<NodeSpec>& table, int root_id);

    /// Single self-looping node.
    static RegularTree constant(Alphabet alphabet, std::string_view label);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::size_t size() const noexcept { return nodes_.size(); }
    int root() const noexcept { return root_; }
    const Node& node(int index) const { return nodes_.at(static_cast<std::size_t>(index)); }
    int id(int index) const { return ids_.at(static_cast<std::size_t>(index)); }
    const std::string& label_token(int index) const { return alphabet_.symbol(node(index).label); }

    int child(int index, char direction) const;

    /// Internal index of the node reached by the word `u` over {l, r}.
    int node_at(std::string_view word) const;

    /// t(u) as a letter index.
    int label_at(std::string_view word) const { return node(node_at(word)).label; }

    /// t_u, the subtree rooted at u.
    RegularTree subtree(std::string_view word) const;

    /// Same graph rooted at internal index `index`, unreachable nodes dropped.
    RegularTree rooted_at(int index) const;

    /// Relabels into a superset alphabet (by token).
    RegularTree with_alphabet(Alphabet alphabet) const;

    /// Same tree with ids renumbered 0..n-1 in breadth-first order from the root.
    RegularTree canonical() const;

private:
    RegularTree(Alphabet alphabet, std::vector<Node> nodes, std::vector<int> ids, int root);
    void normalize();

    Alphabet alphabet_;
    std::vector<Node> nodes_;
    std::vector<int> ids_;
    int root_ = 0;
};

/// True iff the unfoldings coincide. Throws if the alphabets differ.
bool bisim_equal(const RegularTree& t1, const RegularTree& t2);

/// Tree file format:
///   tree <node_count> <root_id>
///   node <id> <label> <left_id> <right_id>
RegularTree parse_tree(std::string_view text);
RegularTree parse_tree(std::string_view text, const Alphabet& alphabet);
std::string serialize(const RegularTree& t);

/// Deterministic pseudo-random tree with at most `max_nodes` nodes.
RegularTree random_tree(std::uint64_t seed, int max_nodes, const Alphabet& alphabet);

/// Builds trees by copying other trees and adding fresh nodes; the result
/// is renumbered canonically.
class TreeAssembler {
public:
    explicit TreeAssembler(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

    const Alphabet& alphabet() const noexcept { return alphabet_; }

    /// Fresh node with unset children (self loops until set).
    int add(std::string_view label);
    void set_children(int node, int left, int right);

    /// Copies `t` and returns the id of its root; labels map by token.
    int graft(const RegularTree& t);

    RegularTree finish(int root) const;

private:
    Alphabet alphabet_;
    std::vector<RegularTree::Node> nodes_;
};

} // namespace rtg
