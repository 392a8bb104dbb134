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

#include <doctest.h>

#include <random>

using namespace rtg;

namespace {

const Alphabet kBin = Alphabet::binary();

// {n0: (0, n0, n1), n1: (1, n1, n1)}
RegularTree two_node()
{
    return parse_tree("tree 2 0\nnode 0 0 0 1\nnode 1 1 1 1\n");
}

std::string random_word(std::mt19937_64& rng, int max_len)
{
    std::string w;
    const int len = static_cast<int>(rng() % static_cast<std::uint64_t>(max_len + 1));
    for (int i = 0; i < len; ++i) w.push_back(rng() % 2 ? 'r' : 'l');
    return w;
}

} // namespace

TEST_CASE("label_at")
{
    CHECK(kBin.symbol(RegularTree::constant(kBin, "0").label_at("lrl")) == "0");
    CHECK(kBin.symbol(RegularTree::constant(kBin, "1").label_at("")) == "1");
    CHECK(kBin.symbol(two_node().label_at("r")) == "1");
    CHECK(kBin.symbol(two_node().label_at("llll")) == "0");
}

TEST_CASE("subtree")
{
    const auto t = two_node();
    CHECK(bisim_equal(t.subtree(""), t));
    CHECK(bisim_equal(RegularTree::constant(kBin, "1").subtree("rrl"), RegularTree::constant(kBin, "1")));
    CHECK(bisim_equal(t.subtree("lr"), RegularTree::constant(kBin, "1")));
    CHECK(t.subtree("lr").size() == 1);
}

TEST_CASE("bisim_equal")
{
    const auto c0 = RegularTree::constant(kBin, "0");
    const auto c0_two = parse_tree("tree 2 5\nnode 5 0 7 7\nnode 7 0 5 5\n");
    CHECK(bisim_equal(c0, c0_two));
    CHECK_FALSE(bisim_equal(c0, RegularTree::constant(kBin, "1")));
    CHECK_THROWS_AS(bisim_equal(c0, RegularTree::constant(Alphabet({"a", "b"}), "a")), Error);
}

TEST_CASE("build errors name the defect")
{
    using Kind = TreeBuildError::Kind;
    auto kind_of = [](auto&& f) {
        try {
            f();
        } catch (const TreeBuildError& e) {
            return e.kind();
        }
        FAIL("no error");
        return Kind::EmptyNodeSet;
    };
    CHECK(kind_of([] { RegularTree::build(kBin, {}, 0); }) == Kind::EmptyNodeSet);
    CHECK(kind_of([] { RegularTree::build(kBin, {{0, "0", 0, 3}}, 0); }) == Kind::DanglingChild);
    CHECK(kind_of([] { RegularTree::build(kBin, {{0, "0", 0, 0}}, 4); }) == Kind::MissingRoot);
    CHECK(kind_of([] { RegularTree::build(kBin, {{0, "0", 0, 0}, {0, "1", 0, 0}}, 0); }) == Kind::DuplicateNode);
    CHECK(kind_of([] { RegularTree::build(kBin, {{0, "7", 0, 0}}, 0); }) == Kind::UnknownLabel);
    CHECK_THROWS_AS(parse_tree("tree 2 0\nnode 0 0 0 0\n"), ParseError);
    CHECK_THROWS_AS(parse_tree("tre 1 0\nnode 0 0 0 0\n"), ParseError);
    CHECK_THROWS(parse_tree("tree 1 0\nnode 0 0 0 9\n"));
}

TEST_CASE("parse and serialize")
{
    const auto t = parse_tree("# comment\ntree 1 0\nnode 0 0 0 0   # constant 0\n");
    CHECK(bisim_equal(t, RegularTree::constant(kBin, "0")));
    const std::string text = "tree 3 2\nnode 2 1 4 9\nnode 4 0 4 2\nnode 9 1 9 9\n";
    CHECK(serialize(parse_tree(text)) == "tree 3 2\nnode 2 1 4 9\nnode 4 0 4 2\nnode 9 1 9 9\n");
    // unreachable node dropped
    CHECK(parse_tree("tree 2 0\nnode 0 1 0 0\nnode 1 0 1 1\n").size() == 1);
    const auto game = parse_tree("tree 1 0\nnode 0 E2 0 0\n");
    CHECK(game.alphabet() == Alphabet::owner_rank(0, 2));
}

TEST_CASE("random_tree")
{
    const auto one = random_tree(7, 1, kBin);
    CHECK(one.size() == 1);
    CHECK(one.child(0, 'l') == 0);
    CHECK(one.child(0, 'r') == 0);
    CHECK(serialize(random_tree(5, 6, kBin)) == serialize(random_tree(5, 6, kBin)));
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto t = random_tree(seed, 6, kBin);
        CHECK(t.size() <= 6);
        CHECK(t.size() >= 1);
        const auto again = parse_tree(serialize(t));
        CHECK(bisim_equal(again, t));
        CHECK(serialize(again) == serialize(t));
    }
}

TEST_CASE("subtree law and bisimulation on random trees")
{
    std::mt19937_64 rng(3);
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const auto t = random_tree(seed, 7, kBin);
        for (int k = 0; k < 10; ++k) {
            const auto u = random_word(rng, 8);
            const auto v = random_word(rng, 8);
            CHECK(t.subtree(u).label_at(v) == t.label_at(u + v));
        }
        // normalization is idempotent
        CHECK(serialize(t.rooted_at(t.root())) == serialize(t));
        CHECK(bisim_equal(t, t.canonical()));

        // bisim_equal agrees with label comparison up to the product bound
        const auto s = random_tree(seed + 1000, 4, kBin);
        const bool eq = bisim_equal(t, s);
        CHECK(eq == bisim_equal(s, t));
        const std::size_t bound = t.size() * s.size();
        bool agree = true;
        std::vector<std::string> layer{""};
        for (std::size_t len = 0; len <= bound && agree; ++len) {
            std::vector<std::string> next;
            for (const auto& w : layer) {
                if (t.label_at(w) != s.label_at(w)) agree = false;
                if (len < bound) {
                    next.push_back(w + "l");
                    next.push_back(w + "r");
                }
            }
            if (next.size() > 4096) break;  // long words only reachable for larger products
            layer = std::move(next);
        }
        if (eq) CHECK(agree);
        if (bound <= 11 && agree) CHECK(eq);
    }
}

TEST_CASE("TreeAssembler grafts and renumbers")
{
    TreeAssembler a(kBin);
    const int top = a.add("0");
    const int g = a.graft(RegularTree::constant(kBin, "1"));
    a.set_children(top, top, g);
    const auto t = a.finish(top);
    CHECK(bisim_equal(t, two_node()));
    CHECK(serialize(t) == "tree 2 0\nnode 0 0 0 1\nnode 1 1 1 1\n");
}
