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

#include "rtg/rtree.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace rtg {

RegularTree::RegularTree(Alphabet alphabet, std::vector<Node> nodes, std::vector<int> ids, int root)
    : alphabet_(std::move(alphabet)), nodes_(std::move(nodes)), ids_(std::move(ids)), root_(root)
{
    normalize();
}

// Drops unreachable nodes. Internal indices stay ordered by external id.
void RegularTree::normalize()
{
    std::vector<char> seen(nodes_.size(), 0);
    std::vector<int> stack{root_};
    seen[static_cast<std::size_t>(root_)] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : {nodes_[static_cast<std::size_t>(v)].left, nodes_[static_cast<std::size_t>(v)].right}) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                stack.push_back(w);
            }
        }
    }
    if (std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; })) return;

    std::vector<int> remap(nodes_.size(), -1);
    std::vector<Node> nodes;
    std::vector<int> ids;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (!seen[i]) continue;
        remap[i] = static_cast<int>(nodes.size());
        nodes.push_back(nodes_[i]);
        ids.push_back(ids_[i]);
    }
    for (auto& n : nodes) {
        n.left = remap[static_cast<std::size_t>(n.left)];
        n.right = remap[static_cast<std::size_t>(n.right)];
    }
    root_ = remap[static_cast<std::size_t>(root_)];
    nodes_ = std::move(nodes);
    ids_ = std::move(ids);
}

RegularTree RegularTree::build(Alphabet alphabet, const std::vector<NodeSpec>& table, int root_id)
{
    using Kind = TreeBuildError::Kind;
    if (table.empty()) throw TreeBuildError(Kind::EmptyNodeSet, "tree has no nodes");

    std::map<int, std::size_t> by_id;
    for (std::size_t i = 0; i < table.size(); ++i) {
        if (!by_id.emplace(table[i].id, i).second)
            throw TreeBuildError(Kind::DuplicateNode, "node id " + std::to_string(table[i].id) + " defined twice");
    }
    if (!by_id.count(root_id))
        throw TreeBuildError(Kind::MissingRoot, "root id " + std::to_string(root_id) + " is not a node");

    std::map<int, int> index_of;
    int next = 0;
    for (const auto& [id, row] : by_id) index_of[id] = next++;

    std::vector<Node> nodes;
    std::vector<int> ids;
    for (const auto& [id, row] : by_id) {
        const auto& spec = table[row];
        auto letter = alphabet.find(spec.label);
        if (!letter)
            throw TreeBuildError(Kind::UnknownLabel,
                                 "node " + std::to_string(id) + " has label '" + spec.label + "' outside the alphabet");
        for (int child : {spec.left, spec.right}) {
            if (!index_of.count(child))
                throw TreeBuildError(Kind::DanglingChild, "node " + std::to_string(id) + " refers to missing node " +
                                                              std::to_string(child));
        }
        nodes.push_back({*letter, index_of[spec.left], index_of[spec.right]});
        ids.push_back(id);
    }
    return RegularTree(std::move(alphabet), std::move(nodes), std::move(ids), index_of[root_id]);
}

RegularTree RegularTree::constant(Alphabet alphabet, std::string_view label)
{
    int letter = alphabet.letter(label);
    return RegularTree(std::move(alphabet), {Node{letter, 0, 0}}, {0}, 0);
}

int RegularTree::child(int index, char direction) const
{
    const auto& n = node(index);
    if (direction == 'l') return n.left;
    if (direction == 'r') return n.right;
    throw Error(std::string("invalid direction '") + direction + "' (expected l or r)");
}

int RegularTree::node_at(std::string_view word) const
{
    int v = root_;
    for (char d : word) v = child(v, d);
    return v;
}

RegularTree RegularTree::subtree(std::string_view word) const
{
    return rooted_at(node_at(word));
}

RegularTree RegularTree::rooted_at(int index) const
{
    if (index < 0 || static_cast<std::size_t>(index) >= nodes_.size()) throw Error("node index out of range");
    return RegularTree(alphabet_, nodes_, ids_, index);
}

RegularTree RegularTree::with_alphabet(Alphabet alphabet) const
{
    std::vector<Node> nodes = nodes_;
    for (auto& n : nodes) n.label = alphabet.letter(alphabet_.symbol(n.label));
    return RegularTree(std::move(alphabet), std::move(nodes), ids_, root_);
}

RegularTree RegularTree::canonical() const
{
    std::vector<int> order{root_};
    std::vector<int> remap(nodes_.size(), -1);
    remap[static_cast<std::size_t>(root_)] = 0;
    for (std::size_t head = 0; head < order.size(); ++head) {
        const auto& n = nodes_[static_cast<std::size_t>(order[head])];
        for (int w : {n.left, n.right}) {
            if (remap[static_cast<std::size_t>(w)] < 0) {
                remap[static_cast<std::size_t>(w)] = static_cast<int>(order.size());
                order.push_back(w);
            }
        }
    }
    std::vector<Node> nodes;
    std::vector<int> ids;
    for (int v : order) {
        const auto& n = nodes_[static_cast<std::size_t>(v)];
        nodes.push_back({n.label, remap[static_cast<std::size_t>(n.left)], remap[static_cast<std::size_t>(n.right)]});
        ids.push_back(static_cast<int>(ids.size()));
    }
    return RegularTree(alphabet_, std::move(nodes), std::move(ids), 0);
}

bool bisim_equal(const RegularTree& t1, const RegularTree& t2)
{
    auto s1 = t1.alphabet().symbols();
    auto s2 = t2.alphabet().symbols();
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) throw Error("bisim_equal: trees have different alphabets");

    std::set<std::pair<int, int>> seen;
    std::vector<std::pair<int, int>> stack{{t1.root(), t2.root()}};
    seen.insert(stack.back());
    while (!stack.empty()) {
        auto [a, b] = stack.back();
        stack.pop_back();
        if (t1.label_token(a) != t2.label_token(b)) return false;
        for (char d : {'l', 'r'}) {
            std::pair<int, int> next{t1.child(a, d), t2.child(b, d)};
            if (seen.insert(next).second) stack.push_back(next);
        }
    }
    return true;
}

namespace {

struct TreeText {
    int declared_count = 0;
    int root = 0;
    std::vector<NodeSpec> table;
};

TreeText read_tree_text(std::string_view text)
{
    auto lines = tokenize_lines(text);
    if (lines.empty()) throw ParseError("empty tree file");
    const auto& header = lines.front();
    if (header.fields.size() != 3 || header.fields[0] != "tree")
        throw ParseError("line " + std::to_string(header.number) + ": expected 'tree <node_count> <root_id>'");
    TreeText out;
    out.declared_count = parse_int(header.fields[1], "node count");
    out.root = parse_int(header.fields[2], "root id");
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& line = lines[i];
        if (line.fields.size() != 5 || line.fields[0] != "node")
            throw ParseError("line " + std::to_string(line.number) +
                             ": expected 'node <id> <label> <left_id> <right_id>'");
        out.table.push_back({parse_int(line.fields[1], "node id"), line.fields[2],
                             parse_int(line.fields[3], "left id"), parse_int(line.fields[4], "right id")});
    }
    if (static_cast<std::size_t>(out.declared_count) != out.table.size())
        throw ParseError("tree header declares " + std::to_string(out.declared_count) + " nodes but " +
                         std::to_string(out.table.size()) + " node lines follow");
    return out;
}

} // namespace

RegularTree parse_tree(std::string_view text)
{
    auto parsed = read_tree_text(text);
    std::vector<std::string> tokens;
    for (const auto& row : parsed.table) tokens.push_back(row.label);
    return RegularTree::build(Alphabet::infer(std::move(tokens)), parsed.table, parsed.root);
}

RegularTree parse_tree(std::string_view text, const Alphabet& alphabet)
{
    auto parsed = read_tree_text(text);
    return RegularTree::build(alphabet, parsed.table, parsed.root);
}

std::string serialize(const RegularTree& t)
{
    std::ostringstream out;
    out << "tree " << t.size() << ' ' << t.id(t.root()) << '\n';
    for (int v = 0; v < static_cast<int>(t.size()); ++v) {
        const auto& n = t.node(v);
        out << "node " << t.id(v) << ' ' << t.label_token(v) << ' ' << t.id(n.left) << ' ' << t.id(n.right) << '\n';
    }
    return out.str();
}

RegularTree random_tree(std::uint64_t seed, int max_nodes, const Alphabet& alphabet)
{
    if (max_nodes < 1) throw Error("random_tree: max_nodes must be >= 1");
    if (alphabet.size() == 0) throw Error("random_tree: empty alphabet");
    // mt19937_64 output is fixed by the standard; plain modulo keeps the
    // draws identical across standard libraries.
    std::mt19937_64 rng(seed);
    auto draw = [&rng](std::size_t bound) { return static_cast<int>(rng() % bound); };
    const int n = 1 + draw(static_cast<std::size_t>(max_nodes));
    std::vector<NodeSpec> table;
    for (int i = 0; i < n; ++i) {
        int label = draw(alphabet.size());
        int left = draw(static_cast<std::size_t>(n));
        int right = draw(static_cast<std::size_t>(n));
        table.push_back({i, alphabet.symbol(label), left, right});
    }
    return RegularTree::build(alphabet, table, 0);
}

int TreeAssembler::add(std::string_view label)
{
    int id = static_cast<int>(nodes_.size());
    nodes_.push_back({alphabet_.letter(label), id, id});
    return id;
}

void TreeAssembler::set_children(int node, int left, int right)
{
    auto& n = nodes_.at(static_cast<std::size_t>(node));
    if (left < 0 || right < 0 || static_cast<std::size_t>(std::max(left, right)) >= nodes_.size())
        throw Error("TreeAssembler: child id out of range");
    n.left = left;
    n.right = right;
}

int TreeAssembler::graft(const RegularTree& t)
{
    const int offset = static_cast<int>(nodes_.size());
    for (int v = 0; v < static_cast<int>(t.size()); ++v) {
        const auto& n = t.node(v);
        nodes_.push_back({alphabet_.letter(t.label_token(v)), n.left + offset, n.right + offset});
    }
    return t.root() + offset;
}

RegularTree TreeAssembler::finish(int root) const
{
    std::vector<NodeSpec> table;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        table.push_back({static_cast<int>(i), alphabet_.symbol(nodes_[i].label), nodes_[i].left, nodes_[i].right});
    }
    return RegularTree::build(alphabet_, table, root).canonical();
}

} // namespace rtg
