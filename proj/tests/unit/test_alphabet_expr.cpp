#include "doctest.h"

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace gkat;

TEST_CASE("atoms enumerate every truth assignment") {
    const Alphabet one = fixtures::bpq();
    CHECK(one.num_atoms() == 2);
    CHECK(one.atom_name(0) == "b");
    CHECK(one.atom_name(1) == "!b");
    CHECK(Alphabet({"t1", "t2"}, {"p"}).num_atoms() == 4);
    std::vector<std::string> nine;
    for (int i = 1; i <= 9; ++i) nine.push_back("t" + std::to_string(i));
    CHECK(atoms_of(Alphabet(nine, {"p"})).size() == 512);
}

TEST_CASE("atom names parse back in any test order") {
    const Alphabet al({"t1", "t2"}, {"p"});
    for (AtomId a : atoms_of(al)) CHECK(al.parse_atom(al.atom_name(a)) == a);
    CHECK(al.parse_atom("!t2.t1") == al.parse_atom("t1·!t2"));
    CHECK_THROWS_AS(al.parse_atom("t1"), InputError);
    CHECK_THROWS_AS(al.parse_atom("t1·t1"), InputError);
}

TEST_CASE("alphabet rejects bad names") {
    CHECK_THROWS_AS(Alphabet({"b", "b"}, {"p"}), InputError);
    CHECK_THROWS_AS(Alphabet({"while"}, {"p"}), InputError);
    CHECK_THROWS_AS(Alphabet({"b"}, {"b"}), InputError);
    CHECK_THROWS_AS(Alphabet({"1x"}, {"p"}), InputError);
}

TEST_CASE("letters pack atoms and actions") {
    const Alphabet al({"t1", "t2"}, {"p", "q", "r"});
    for (AtomId a = 0; a < al.num_atoms(); ++a)
        for (ActionId p = 0; p < al.num_actions(); ++p) {
            LetterId l = al.letter(a, p);
            CHECK(al.letter_atom(l) == a);
            CHECK(al.letter_action(l) == p);
        }
}

TEST_CASE("atom_satisfies evaluates tests") {
    const Alphabet al = fixtures::bpq();
    CHECK(atom_satisfies(al, fixtures::kB, b_test(0)));
    CHECK_FALSE(atom_satisfies(al, fixtures::kNotB, b_test(0)));
    CHECK(atom_satisfies(al, fixtures::kNotB, b_not(b_test(0))));
    for (AtomId a : atoms_of(al)) {
        CHECK(atom_satisfies(al, a, b_one()));
        CHECK_FALSE(atom_satisfies(al, a, b_zero()));
    }
    CHECK_THROWS_AS(atom_satisfies(al, 0, b_test(3)), InputError);
}

TEST_CASE("parser builds the expected trees") {
    const Alphabet al = fixtures::bpq();
    Expr e = parse_expr("(while b do p); q", al);
    REQUIRE(e->kind == ExprNode::Kind::Seq);
    CHECK(e->lhs->kind == ExprNode::Kind::While);
    CHECK(e->lhs->lhs->kind == ExprNode::Kind::Act);
    CHECK(e->rhs->kind == ExprNode::Kind::Act);
    CHECK(structurally_equal(e, parse_expr("(while b do do p); do q", al)));
    CHECK(structurally_equal(parse_expr("assert 1", al), e_test(b_one())));

    const Alphabet bench({"t1"}, {"p1", "p2", "p3"});
    CHECK(structurally_equal(parse_expr("if t1 then do p1 else do p2", bench),
                             e_if(b_test(0), e_act(0), e_act(1))));
}

TEST_CASE("parser precedence and associativity") {
    const Alphabet al({"b", "c"}, {"p", "q"});
    Expr e = parse_expr("p; q; p", al);
    REQUIRE(e->kind == ExprNode::Kind::Seq);
    CHECK(e->lhs->kind == ExprNode::Kind::Seq);
    BExpr g = parse_bexpr("b or c and !b", al);
    REQUIRE(g->kind == BExprNode::Kind::Or);
    CHECK(g->rhs->kind == BExprNode::Kind::And);
    CHECK(structurally_equal(parse_bexpr("b + c . !b", al), g));
}

TEST_CASE("parser reports positions") {
    const Alphabet al = fixtures::bpq();
    try {
        parse_expr("while b do", al);
        FAIL("expected a syntax error");
    } catch (const SyntaxError& err) {
        CHECK(err.position() == 10);
    }
    CHECK_THROWS_AS(parse_expr("do r", al), SyntaxError);
    CHECK_THROWS_AS(parse_expr("assert x", al), SyntaxError);
    CHECK_THROWS_AS(parse_expr("b", al), SyntaxError);
    CHECK_THROWS_AS(parse_expr("p q", al), SyntaxError);
    CHECK_THROWS_AS(parse_expr("(p", al), SyntaxError);
}

TEST_CASE("printing round-trips through the parser") {
    std::mt19937 rng(7);
    for (int i = 0; i < 300; ++i) {
        const Alphabet al = oracle::random_alphabet(rng);
        Expr e = oracle::random_expr(rng, al, 4);
        const std::string text = to_string(e, al);
        INFO(text);
        CHECK(structurally_equal(parse_expr(text, al), e));
    }
}
