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

#include "rtg/automata.hpp"
#include "rtg/formats.hpp"
#include "rtg/membership.hpp"
#include "rtg/oracles.hpp"
#include "rtg/random.hpp"
#include "rtg/reductions.hpp"

#include "support.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace rtg;

namespace {

const Alphabet kBin = Alphabet::binary();

RegularTree c0() { return RegularTree::constant(kBin, "0"); }
RegularTree c1() { return RegularTree::constant(kBin, "1"); }

RegularTree spine1(std::map<CnfOrdinal::Digit, RegularTree> fillers)
{
    std::map<CnfOrdinal, RegularTree> keyed;
    for (auto& [k, t] : fillers) keyed.emplace(CnfOrdinal({k}), t);
    return spine_tree(keyed, c0());
}

RegularTree spine2(CnfOrdinal::Digit hi, CnfOrdinal::Digit lo)
{
    return spine_tree({{CnfOrdinal({hi, lo}), c1()}}, c0());
}

std::string read_golden(const std::string& name)
{
    std::ifstream in(std::string(RTG_TEST_DATA) + "/" + name);
    REQUIRE(in);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

// Random trees for equivalence checks: plain random trees alternate with
// spine fixtures, whose least spine ordinals are spread out.
RegularTree corpus_tree(std::uint64_t i, int width, int max_nodes)
{
    return (i % 2) ? random_spine_fixture(i, width, 3, max_nodes) : random_tree(i, max_nodes, kBin);
}

} // namespace

TEST_CASE("is_deterministic")
{
    CHECK(is_deterministic(build_Lminus_muller()));
    CHECK_FALSE(is_deterministic(build_L_buchi()));
    BuchiTreeAutomaton empty;
    empty.add_state("q");
    CHECK(is_deterministic(empty));
}

TEST_CASE("buchi_to_muller")
{
    BuchiTreeAutomaton a;
    for (const char* n : {"x", "y", "z"}) a.add_state(n);
    a.accepting = {0, 1, 2};
    CHECK(buchi_to_muller(a).family.size() == 7);
    a.accepting = {};
    CHECK(buchi_to_muller(a).family.empty());
    a.accepting = {1};
    const auto m = buchi_to_muller(a);
    CHECK(m.family.size() == 4);
    for (const auto& s : m.family) CHECK(std::find(s.begin(), s.end(), 1) != s.end());
}

TEST_CASE("L automata: examples")
{
    const auto L = build_L_buchi();
    const auto Lminus = build_Lminus_muller();
    const auto two = parse_tree("tree 2 0\nnode 0 0 0 1\nnode 1 1 1 1\n");
    CHECK(member_nondet(L, c1()));
    CHECK_FALSE(member_nondet(L, c0()));
    CHECK(member_nondet(L, two));
    CHECK(member_nondet(Lminus, c0()));
    CHECK_FALSE(member_nondet(Lminus, c1()));
    CHECK_FALSE(member_nondet(Lminus, two));
}

TEST_CASE("L automata agree with the oracle, complement and Muller conversion")
{
    const auto L = build_L_buchi();
    const auto LM = buchi_to_muller(L);
    const auto Lminus = build_Lminus_muller();
    auto check = [&](const RegularTree& t) {
        const bool want = oracle_L(t);
        CHECK(want == testing::brute_L(t));
        CHECK(member_nondet(L, t) == want);
        CHECK(member_nondet(LM, t) == want);
        CHECK(member_nondet(Lminus, t) == !want);
    };
    for (const auto& t : testing::small_binary_trees()) check(t);
    for (std::uint64_t i = 0; i < 300; ++i) check(random_tree(i, 10, kBin));
}

TEST_CASE("L1 automaton: table and golden file")
{
    const auto minus = build_Lminus_muller();
    const auto plus = buchi_to_muller(build_L_buchi());
    const auto a = build_L1_muller(minus, plus);
    CHECK(a.state_count() == minus.state_count() + plus.state_count() + 3);
    CHECK(serialize(a) == read_golden("L1.aut"));
    CHECK(serialize(build_L1_muller()) == serialize(a));

    // the extra rows, by state name
    auto id = [&](const std::string& name) {
        auto it = std::find(a.names.begin(), a.names.end(), name);
        REQUIRE(it != a.names.end());
        return static_cast<State>(it - a.names.begin());
    };
    const State q10 = id("q1_0"), q11 = id("q1_1"), qf = id("qf"), q0 = id("m0"), q0p = id("b0");
    CHECK(a.initial == q10);
    for (int x = 0; x < 2; ++x) {
        auto has = [&](State s, State l, State r) {
            return std::find(a.transitions.begin(), a.transitions.end(), TreeTransition{s, x, l, r}) !=
                   a.transitions.end();
        };
        CHECK(has(q10, q11, q0));
        CHECK(has(q11, qf, q0p));
        CHECK(has(qf, qf, qf));
        CHECK(has(q11, q10, q0));
    }
    CHECK(std::find(a.family.begin(), a.family.end(), StateSet{qf}) != a.family.end());
    CHECK(a.family.size() == minus.family.size() + plus.family.size() + 1);
}

TEST_CASE("L1 automaton: examples")
{
    const auto a = build_L1_muller();
    CHECK_FALSE(member_nondet(a, spine1({{0, c1()}})));
    CHECK(member_nondet(a, spine1({{1, c1()}})));
    CHECK_FALSE(member_nondet(a, spine1({{2, c1()}})));
    CHECK(member_nondet(a, spine1({{3, c1()}, {4, c1()}})));
    CHECK_FALSE(member_nondet(a, c0()));
    CHECK_FALSE(member_nondet(a, c1()));
}

TEST_CASE("L1 automaton agrees with the oracle")
{
    const auto a = build_L1_muller();
    for (const auto& t : testing::small_binary_trees()) CHECK(member_nondet(a, t) == oracle_L1(t));
    for (std::uint64_t i = 0; i < 400; ++i) {
        const auto t = corpus_tree(i, 1, 8);
        CHECK(member_nondet(a, t) == oracle_L1(t));
    }
}

TEST_CASE("Ln automata")
{
    CHECK_THROWS_AS(build_Ln_muller(0), Error);
    CHECK(serialize(build_Ln_muller(1)) == serialize(build_L1_muller()));

    const auto a2 = build_Ln_muller(2);
    CHECK_FALSE(member_nondet(a2, spine2(0, 0)));
    CHECK_FALSE(member_nondet(a2, spine2(1, 0)));  // omega
    CHECK(member_nondet(a2, spine2(1, 1)));         // omega + 1
    CHECK(member_nondet(a2, spine2(0, 3)));
    CHECK(member_nondet(a2, spine2(2, 5)));
    CHECK_FALSE(member_nondet(a2, spine2(3, 2)));

    for (int n = 2; n <= 3; ++n) {
        const auto a = build_Ln_muller(n);
        for (const auto& t : testing::small_binary_trees()) CHECK(member_nondet(a, t) == oracle_Ln(t, n));
        const int count = n == 2 ? 300 : 120;
        for (int i = 0; i < count; ++i) {
            const auto t = corpus_tree(static_cast<std::uint64_t>(i), n, n == 2 ? 6 : 5);
            CHECK(member_nondet(a, t) == oracle_Ln(t, n));
        }
    }
}

TEST_CASE("Talpha automata")
{
    CHECK_THROWS_AS(build_Talpha_muller(CnfOrdinal({0, 3})), Error);

    const auto two = build_Talpha_muller(CnfOrdinal({2}));
    CHECK(member_nondet(two, spine1({{1, c1()}})));
    CHECK_FALSE(member_nondet(two, spine1({{0, c1()}})));
    CHECK_FALSE(member_nondet(two, spine1({{3, c1()}})));
    CHECK_FALSE(member_nondet(two, c0()));

    const auto one = build_Talpha_muller(CnfOrdinal({1}));
    CHECK(member_nondet(one, spine1({{0, c1()}})));
    CHECK_FALSE(member_nondet(one, spine1({{1, c1()}})));

    const auto omega = build_Talpha_muller(CnfOrdinal({1, 0}));
    CHECK(member_nondet(omega, spine2(0, 3)));
    CHECK_FALSE(member_nondet(omega, spine2(0, 2)));
    CHECK_FALSE(member_nondet(omega, spine2(1, 1)));

    for (const auto& alpha : {CnfOrdinal({2}), CnfOrdinal({3}), CnfOrdinal({1, 0}), CnfOrdinal({1, 1}),
                              CnfOrdinal({2, 1}), CnfOrdinal({1, 0, 1})}) {
        const auto a = build_Talpha_muller(alpha);
        const int width = static_cast<int>(alpha.width());
        for (const auto& t : testing::small_binary_trees()) CHECK(member_nondet(a, t) == oracle_Talpha(t, alpha));
        for (int i = 0; i < 100; ++i) {
            const auto t = corpus_tree(static_cast<std::uint64_t>(i), width, width == 3 ? 4 : 6);
            CHECK_MESSAGE(member_nondet(a, t) == oracle_Talpha(t, alpha), serialize(alpha) << "\n" << serialize(t));
        }
    }
}

TEST_CASE("automaton file format round trip")
{
    for (const AnyAutomaton& a : {AnyAutomaton{build_L_buchi()}, AnyAutomaton{build_Lminus_muller()},
                                  AnyAutomaton{build_Ln_muller(2)}, AnyAutomaton{build_Talpha_muller(CnfOrdinal({1, 1}))}}) {
        const auto text = serialize(a);
        const auto back = parse_automaton(text);
        CHECK(back.index() == a.index());
        CHECK(serialize(back) == text);
    }
    // parsed automata keep their language
    const auto parsed = std::get<MullerTreeAutomaton>(parse_automaton(serialize(build_L1_muller())));
    for (std::uint64_t i = 0; i < 60; ++i) {
        const auto t = corpus_tree(i, 1, 6);
        CHECK(member_nondet(parsed, t) == oracle_L1(t));
    }
    CHECK_THROWS_AS(parse_automaton("buchi 2 0\ntrans 0 0 0 5\n"), ParseError);
    CHECK_THROWS_AS(parse_automaton("rabin 2 0\n"), ParseError);
    CHECK_THROWS_AS(parse_automaton("muller 1 0\naccept 0\n"), ParseError);
    CHECK_THROWS_AS(parse_automaton("buchi 1 3\n"), ParseError);
    const auto empty = std::get<BuchiTreeAutomaton>(parse_automaton("buchi 1 0\naccept 0\n"));
    CHECK(empty.alphabet == Alphabet::binary());
    CHECK_FALSE(member_nondet(empty, c0()));
}
