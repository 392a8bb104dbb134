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

#include "rtg/membership.hpp"
#include "rtg/oracles.hpp"
#include "rtg/random.hpp"
#include "rtg/reductions.hpp"

#include <doctest.h>

#include <random>

using namespace rtg;

namespace {

const Alphabet kBin = Alphabet::binary();

RegularTree c0() { return RegularTree::constant(kBin, "0"); }
RegularTree c1() { return RegularTree::constant(kBin, "1"); }

bool least_member_odd(const SpineFamily& f)
{
    for (std::size_t k = 0; k <= f.prefix.size(); ++k)
        if (oracle_L(f.at(k))) return k % 2 == 1;
    return false;
}

} // namespace

TEST_CASE("wadge_F: examples")
{
    const auto zero = wadge_F({{}, c0()});
    CHECK_FALSE(oracle_L1(zero));
    CHECK(bisim_equal(zero, c0()));

    const auto f = wadge_F({{c0(), c1()}, c0()});
    CHECK(oracle_L1(f));
    for (int k = 0; k < 6; ++k) CHECK(kBin.symbol(f.label_at(std::string(static_cast<std::size_t>(k), 'l'))) == "0");
    CHECK(bisim_equal(f.subtree("lr"), c1()));
    CHECK(bisim_equal(f.subtree("llllr"), c0()));

    CHECK_THROWS_AS(wadge_F({{c0()}, std::nullopt}), Error);
    CHECK_THROWS_AS(wadge_F({{RegularTree::constant(Alphabet({"0", "x"}), "x")}, c0()}), Error);
}

TEST_CASE("wadge_F: random families")
{
    for (std::uint64_t i = 0; i < 400; ++i) {
        const auto fam = random_family(i, 4, 5);
        const auto t = wadge_F(fam);
        CHECK(oracle_L1(t) == least_member_odd(fam));
        for (std::size_t k = 0; k < fam.prefix.size() + 2; ++k)
            CHECK(bisim_equal(t.subtree(std::string(k, 'l') + "r"), fam.at(k)));
    }
}

TEST_CASE("reduce_alt_to_W: examples")
{
    const auto minus = reduce_alt_to_W(build_alt_Lminus(), c0());
    CHECK(minus.alphabet() == game_alphabet({0, 1}));
    CHECK(member_W({0, 1}, minus));
    const auto plus = reduce_alt_to_W(build_alt_L(), c0());
    CHECK(plus.alphabet() == game_alphabet({1, 2}));
    CHECK_FALSE(member_W({1, 2}, plus));
}

TEST_CASE("reduce_alt_to_W: soundness")
{
    const std::vector<AlternatingParityAutomaton> automata{build_alt_L(), build_alt_Lminus(), build_alt_L1(),
                                                           build_alt_Ln(2)};
    for (const auto& a : automata) {
        const auto idx = index_of(a);
        for (std::uint64_t i = 0; i < 150; ++i) {
            const auto t = (i % 2) ? random_spine_fixture(i, 2, 3, 5) : random_tree(i, 8, kBin);
            const auto g = reduce_alt_to_W(a, t);
            CHECK(member_alternating(a, t) == member_W(idx, g));
        }
    }
}

TEST_CASE("reduce_alt_to_W: gadgets and dead ends")
{
    // Eve state with three moves on 1 (gadget) and none on 0 (dead end).
    AlternatingParityAutomaton a;
    const State e = a.add_state("e", Player::Eve, 0);
    const State odd = a.add_state("odd", Player::Eve, 1);
    const State even = a.add_state("even", Player::Adam, 2);
    a.add_move(e, "1", Direction::Left, odd);
    a.add_move(e, "1", Direction::Right, odd);
    a.add_move(e, "1", Direction::Stay, even);
    a.add_move(odd, "1", Direction::Stay, odd);
    a.add_move(even, "1", Direction::Stay, even);
    const auto idx = index_of(a);
    for (std::uint64_t i = 0; i < 200; ++i) {
        const auto t = random_tree(i, 6, kBin);
        const auto g = reduce_alt_to_W(a, t);
        const auto direct = solve_zielonka(acceptance_game_alternating(a, t).game);
        CHECK(member_W(idx, g) == (direct.winner_at(0) == Player::Eve));
        CHECK(member_W(idx, g) == member_alternating(a, t));
    }
    CHECK(member_W(idx, reduce_alt_to_W(a, c1())));
    CHECK_FALSE(member_W(idx, reduce_alt_to_W(a, c0())));

    AlternatingParityAutomaton single;
    single.add_state("s", Player::Eve, 0);
    single.initial = 0;
    CHECK_THROWS_AS(reduce_alt_to_W(single, c0()), Error);
}

TEST_CASE("dualize_game_tree")
{
    const auto t = RegularTree::constant(game_alphabet({0, 2}), "E1");
    const auto d = dualize_game_tree({0, 2}, t);
    CHECK(d.alphabet() == game_alphabet({1, 3}));
    CHECK(d.label_token(d.root()) == "A2");
    CHECK_FALSE(member_W({0, 2}, t));
    CHECK(member_W({1, 3}, d));
    CHECK(serialize(dualize_game_tree({1, 3}, d)) == serialize(t.canonical()));
    CHECK_THROWS_AS(dualize_game_tree({1, 2}, RegularTree::constant(game_alphabet({0, 2}), "E0")), Error);

    for (const MRIndex idx : {MRIndex{0, 2}, MRIndex{1, 3}, MRIndex{0, 0}, MRIndex{1, 4}}) {
        for (std::uint64_t i = 0; i < 200; ++i) {
            const auto g = random_tree(i, 8, game_alphabet(idx));
            const auto dual = dualize_game_tree(idx, g);
            CHECK(member_W(idx, g) != member_W(dual_index(idx), dual));
            CHECK(bisim_equal(dualize_game_tree(dual_index(idx), dual), g));
        }
    }
}

TEST_CASE("spine_tree")
{
    const auto t = spine_tree({{CnfOrdinal({0, 1}), c1()}}, c0());
    CHECK(oracle_least_spine(t, 2).least == CnfOrdinal({0, 1}));
    CHECK(oracle_Ln(t, 2));
    const auto u = spine_tree({{CnfOrdinal({0, 0}), c1()}}, c0());
    CHECK_FALSE(oracle_Ln(u, 2));

    CHECK_THROWS_AS(spine_tree({{CnfOrdinal({0}), c1()}, {CnfOrdinal({0, 1}), c1()}}, c0()), Error);
    CHECK_THROWS_AS(spine_tree({{CnfOrdinal({0}), RegularTree::constant(Alphabet({"0", "2"}), "2")}}, c0()), Error);

    for (std::uint64_t i = 0; i < 300; ++i) {
        std::mt19937_64 rng(i);
        const int width = 1 + static_cast<int>(rng() % 3);
        std::map<CnfOrdinal, RegularTree> fillers;
        for (int k = 0; k < 3; ++k) {
            std::vector<CnfOrdinal::Digit> d(static_cast<std::size_t>(width));
            for (auto& x : d) x = rng() % 4;
            fillers.insert_or_assign(CnfOrdinal(d), random_tree_biased(rng(), 4, 50));
        }
        const auto t = spine_tree(fillers, c0());
        // each filler sits at its address
        for (const auto& [key, g] : fillers) CHECK(bisim_equal(t.subtree(spine_address(key)), g));
        // prescribed least ordinal: the smallest key whose filler is in L
        std::optional<CnfOrdinal> want;
        for (const auto& [key, g] : fillers)
            if (!want && oracle_L(g)) want = key;
        const auto r = oracle_least_spine(t, width);
        CHECK(r.found == want.has_value());
        if (want && r.found) CHECK(r.least == *want);
    }
}
