#include "doctest.h"

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace gkat;
using fixtures::kB;
using fixtures::kNotB;
using fixtures::kP;
using fixtures::kQ;

namespace {

GuardedString gs(const std::string& text) { return parse_guarded_string(text, fixtures::bpq()); }

FiniteGsLang lang(std::initializer_list<const char*> items, std::size_t bound = 8) {
    FiniteGsLang l;
    l.bound = bound;
    for (const char* s : items) l.strings.insert(gs(s));
    return l;
}

FiniteGsLang random_lang(std::mt19937& rng, const Alphabet& al, std::size_t k) {
    FiniteGsLang l;
    l.bound = k;
    for (const auto& s : oracle::strings_upto(al, k))
        if (rng() % 5 == 0) l.strings.insert(s);
    return l;
}

}  // namespace

TEST_CASE("guarded strings print and parse") {
    const Alphabet al = fixtures::bpq();
    GuardedString s = gs("b p !b q b");
    CHECK(s.length() == 2);
    CHECK(s.first_atom() == kB);
    CHECK(s.action(1) == kQ);
    CHECK(to_string(s, al) == "b p !b q b");
    CHECK_THROWS_AS(gs("b p"), InputError);
    CHECK_THROWS_AS(gs("b r b"), InputError);
    CHECK(to_string(parse_guarded_word("b p !b q", al), al) == "b p !b q");
}

TEST_CASE("fusion examples") {
    CHECK(fusion(lang({"b"}), lang({"b p !b"})) == lang({"b p !b"}));
    CHECK(fusion(lang({"b"}), lang({"!b p !b"})).size() == 0);
    CHECK(fusion(lang({"b p !b"}), lang({"!b q b"})) == lang({"b p !b q b"}));
}

TEST_CASE("fusion is associative with the atoms as unit") {
    std::mt19937 rng(11);
    const Alphabet al = fixtures::bpq();
    const FiniteGsLang at = all_atoms(al);
    for (int i = 0; i < 40; ++i) {
        FiniteGsLang x = random_lang(rng, al, 1), y = random_lang(rng, al, 1), z = random_lang(rng, al, 1);
        CHECK(fusion(fusion(x, y), z) == fusion(x, fusion(y, z)));
        CHECK(fusion(at, x) == x);
        CHECK(fusion(x, at) == x);
    }
}

TEST_CASE("guarded sum picks by first atom") {
    std::mt19937 rng(5);
    const Alphabet al = fixtures::bpq();
    FiniteGsLang l = random_lang(rng, al, 1), k = random_lang(rng, al, 1);
    CHECK(guarded_sum(l, k, AtomSet(2, true)) == l);
    CHECK(guarded_sum(l, k, AtomSet(2, false)) == k);

    const FiniteGsLang p = lang_upto(al, e_act(kP), 1), q = lang_upto(al, e_act(kQ), 1);
    CHECK(guarded_sum(p, q, atoms_satisfying(al, b_test(0))) ==
          lang({"b p b", "b p !b", "!b q b", "!b q !b"}));
}

TEST_CASE("lang_upto examples") {
    const Alphabet al = fixtures::bpq();
    CHECK(lang_upto(al, fixtures::while_then_q(al), 2) == lang({"!b q b", "!b q !b", "b p !b q b", "b p !b q !b"}));
    CHECK(lang_upto(al, e_test(b_one()), 0) == all_atoms(al));
    CHECK(lang_upto(al, e_act(kP), 1) == lang({"b p b", "b p !b", "!b p b", "!b p !b"}));
    CHECK(lang_upto(al, e_test(b_zero()), 3).size() == 0);
}

TEST_CASE("lang_upto agrees with the interpreter, is monotone and deterministic") {
    std::mt19937 rng(3);
    for (int i = 0; i < 200; ++i) {
        const Alphabet al = oracle::random_alphabet(rng);
        const Expr e = oracle::random_expr(rng, al, 4);
        INFO(to_string(e, al));
        const FiniteGsLang l2 = lang_upto(al, e, 2), l3 = lang_upto(al, e, 3);
        CHECK(is_deterministic(l3));
        CHECK(truncate(l3, 2) == l2);
        for (const auto& s : l2.strings) CHECK(l3.contains(s));
        for (const auto& s : oracle::strings_upto(al, 2)) CHECK(l2.contains(s) == oracle::member(al, e, s));
    }
}

TEST_CASE("is_deterministic examples") {
    CHECK(is_deterministic(lang({"!b q b", "b p !b q b"})));
    CHECK_FALSE(is_deterministic(lang({"b p b", "b q b"})));
    CHECK_FALSE(is_deterministic(lang({"b", "b p b"})));
}

TEST_CASE("suffixes") {
    const Alphabet al = fixtures::bpq();
    auto s = suffixes(gs("b p !b q b"));
    REQUIRE(s.size() == 3);
    CHECK(to_string(s[0], al) == "b p !b q b");
    CHECK(to_string(s[1], al) == "!b q b");
    CHECK(to_string(s[2], al) == "b");
    CHECK(suffixes(gs("!b")).size() == 1);

    std::mt19937 rng(1);
    for (const auto& z : oracle::strings_upto(al, 3)) {
        auto all = suffixes(z);
        CHECK(all.size() == z.length() + 1);
        std::set<GuardedString> set(all.begin(), all.end());
        for (const auto& x : all)
            for (const auto& y : suffixes(x)) CHECK(set.count(y) == 1);
    }
}

TEST_CASE("all_guarded_strings counts") {
    const Alphabet al = fixtures::bpq();
    // 2 + 2*2*2 + 2*4*4 strings of action-length 0, 1, 2
    CHECK(all_guarded_strings(al, 2).size() == 2 + 8 + 32);
    CHECK(all_guarded_strings(al, 2) == oracle::strings_upto(al, 2));
}
