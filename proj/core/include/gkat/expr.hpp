#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "gkat/alphabet.hpp"

namespace gkat {

struct BExprNode;
using BExpr = std::shared_ptr<const BExprNode>;

struct BExprNode {
    enum class Kind { Zero, One, Test, And, Or, Not };
    Kind kind;
    std::size_t test = 0;
    BExpr lhs;
    BExpr rhs;
};

BExpr b_zero();
BExpr b_one();
BExpr b_test(std::size_t index);
BExpr b_and(BExpr l, BExpr r);
BExpr b_or(BExpr l, BExpr r);
BExpr b_not(BExpr e);

// Throws InputError when b mentions a test index outside the alphabet.
bool atom_satisfies(const Alphabet& alphabet, AtomId atom, const BExpr& b);

struct ExprNode;
using Expr = std::shared_ptr<const ExprNode>;

struct ExprNode {
    enum class Kind { Act, Test, Seq, If, While };
    Kind kind;
    ActionId action = 0;
    BExpr guard;  // Test, If, While
    Expr lhs;     // Seq left, If then-branch, While body
    Expr rhs;     // Seq right, If else-branch
};

Expr e_act(ActionId a);
Expr e_test(BExpr b);
Expr e_seq(Expr l, Expr r);
Expr e_if(BExpr b, Expr then_branch, Expr else_branch);
Expr e_while(BExpr b, Expr body);

bool is_one(const Expr& e);
bool is_zero(const Expr& e);

bool structurally_equal(const BExpr& a, const BExpr& b);
bool structurally_equal(const Expr& a, const Expr& b);

std::size_t expr_depth(const Expr& e);

Expr parse_expr(std::string_view text, const Alphabet& alphabet);
BExpr parse_bexpr(std::string_view text, const Alphabet& alphabet);

// Concrete syntax accepted by parse_expr; parse(print(e)) rebuilds e.
std::string to_string(const Expr& e, const Alphabet& alphabet);
std::string to_string(const BExpr& b, const Alphabet& alphabet);

}  // namespace gkat
