#include "gkat/expr.hpp"

#include <cctype>
#include <vector>

#include "gkat/errors.hpp"

namespace gkat {

BExpr b_zero() {
    static const BExpr z = std::make_shared<BExprNode>(BExprNode{BExprNode::Kind::Zero, 0, nullptr, nullptr});
    return z;
}
BExpr b_one() {
    static const BExpr o = std::make_shared<BExprNode>(BExprNode{BExprNode::Kind::One, 0, nullptr, nullptr});
    return o;
}
BExpr b_test(std::size_t index) {
    return std::make_shared<BExprNode>(BExprNode{BExprNode::Kind::Test, index, nullptr, nullptr});
}
BExpr b_and(BExpr l, BExpr r) {
    return std::make_shared<BExprNode>(BExprNode{BExprNode::Kind::And, 0, std::move(l), std::move(r)});
}
BExpr b_or(BExpr l, BExpr r) {
    return std::make_shared<BExprNode>(BExprNode{BExprNode::Kind::Or, 0, std::move(l), std::move(r)});
}
BExpr b_not(BExpr e) {
    return std::make_shared<BExprNode>(BExprNode{BExprNode::Kind::Not, 0, std::move(e), nullptr});
}

bool atom_satisfies(const Alphabet& alphabet, AtomId atom, const BExpr& b) {
    switch (b->kind) {
        case BExprNode::Kind::Zero: return false;
        case BExprNode::Kind::One: return true;
        case BExprNode::Kind::Test:
            if (b->test >= alphabet.num_tests())
                throw InputError("test index " + std::to_string(b->test) + " not in alphabet");
            return alphabet.test_value(atom, b->test);
        case BExprNode::Kind::And:
            return atom_satisfies(alphabet, atom, b->lhs) && atom_satisfies(alphabet, atom, b->rhs);
        case BExprNode::Kind::Or:
            return atom_satisfies(alphabet, atom, b->lhs) || atom_satisfies(alphabet, atom, b->rhs);
        case BExprNode::Kind::Not: return !atom_satisfies(alphabet, atom, b->lhs);
    }
    return false;
}

Expr e_act(ActionId a) {
    return std::make_shared<ExprNode>(ExprNode{ExprNode::Kind::Act, a, nullptr, nullptr, nullptr});
}
Expr e_test(BExpr b) {
    return std::make_shared<ExprNode>(ExprNode{ExprNode::Kind::Test, 0, std::move(b), nullptr, nullptr});
}
Expr e_seq(Expr l, Expr r) {
    return std::make_shared<ExprNode>(ExprNode{ExprNode::Kind::Seq, 0, nullptr, std::move(l), std::move(r)});
}
Expr e_if(BExpr b, Expr then_branch, Expr else_branch) {
    return std::make_shared<ExprNode>(
        ExprNode{ExprNode::Kind::If, 0, std::move(b), std::move(then_branch), std::move(else_branch)});
}
Expr e_while(BExpr b, Expr body) {
    return std::make_shared<ExprNode>(ExprNode{ExprNode::Kind::While, 0, std::move(b), std::move(body), nullptr});
}

bool is_one(const Expr& e) {
    return e->kind == ExprNode::Kind::Test && e->guard->kind == BExprNode::Kind::One;
}
bool is_zero(const Expr& e) {
    return e->kind == ExprNode::Kind::Test && e->guard->kind == BExprNode::Kind::Zero;
}

bool structurally_equal(const BExpr& a, const BExpr& b) {
    if (a == b) return true;
    if (!a || !b || a->kind != b->kind) return false;
    switch (a->kind) {
        case BExprNode::Kind::Zero:
        case BExprNode::Kind::One: return true;
        case BExprNode::Kind::Test: return a->test == b->test;
        case BExprNode::Kind::Not: return structurally_equal(a->lhs, b->lhs);
        default: return structurally_equal(a->lhs, b->lhs) && structurally_equal(a->rhs, b->rhs);
    }
}

bool structurally_equal(const Expr& a, const Expr& b) {
    if (a == b) return true;
    if (!a || !b || a->kind != b->kind) return false;
    switch (a->kind) {
        case ExprNode::Kind::Act: return a->action == b->action;
        case ExprNode::Kind::Test: return structurally_equal(a->guard, b->guard);
        case ExprNode::Kind::Seq:
            return structurally_equal(a->lhs, b->lhs) && structurally_equal(a->rhs, b->rhs);
        case ExprNode::Kind::If:
            return structurally_equal(a->guard, b->guard) && structurally_equal(a->lhs, b->lhs) &&
                   structurally_equal(a->rhs, b->rhs);
        case ExprNode::Kind::While:
            return structurally_equal(a->guard, b->guard) && structurally_equal(a->lhs, b->lhs);
    }
    return false;
}

std::size_t expr_depth(const Expr& e) {
    switch (e->kind) {
        case ExprNode::Kind::Act:
        case ExprNode::Kind::Test: return 0;
        case ExprNode::Kind::While: return 1 + expr_depth(e->lhs);
        default: return 1 + std::max(expr_depth(e->lhs), expr_depth(e->rhs));
    }
}

// ---------------------------------------------------------------- lexer

namespace {

enum class Tok {
    Ident, If, Then, Else, While, Do, Assert, And, Or, Not, True, False,
    Zero, One, Semi, LParen, RParen, End
};

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

std::vector<Token> lex(std::string_view src) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < src.size()) {
        unsigned char c = static_cast<unsigned char>(src[i]);
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (std::isalpha(c) || c == '_') {
            while (i < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_'))
                ++i;
            std::string word(src.substr(start, i - start));
            Tok k = Tok::Ident;
            if (word == "if") k = Tok::If;
            else if (word == "then") k = Tok::Then;
            else if (word == "else") k = Tok::Else;
            else if (word == "while") k = Tok::While;
            else if (word == "do") k = Tok::Do;
            else if (word == "assert") k = Tok::Assert;
            else if (word == "and") k = Tok::And;
            else if (word == "or") k = Tok::Or;
            else if (word == "true") k = Tok::True;
            else if (word == "false") k = Tok::False;
            out.push_back({k, word, start});
            continue;
        }
        Tok k;
        switch (c) {
            case ';': k = Tok::Semi; break;
            case '(': k = Tok::LParen; break;
            case ')': k = Tok::RParen; break;
            case '!': k = Tok::Not; break;
            case '+': k = Tok::Or; break;
            case '.': k = Tok::And; break;
            case '0': k = Tok::Zero; break;
            case '1': k = Tok::One; break;
            default:
                throw SyntaxError(std::string("unexpected character '") + src[i] + "'", start);
        }
        ++i;
        out.push_back({k, std::string(1, static_cast<char>(c)), start});
    }
    out.push_back({Tok::End, "", src.size()});
    return out;
}

class Parser {
public:
    Parser(std::string_view src, const Alphabet& alphabet) : toks_(lex(src)), alpha_(alphabet) {}

    Expr whole_expr() {
        Expr e = expr();
        expect(Tok::End, "end of input");
        return e;
    }

    BExpr whole_bexpr() {
        BExpr b = bexp();
        expect(Tok::End, "end of input");
        return b;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    bool accept(Tok k) {
        if (peek().kind != k) return false;
        ++pos_;
        return true;
    }
    const Token& expect(Tok k, const char* what) {
        if (peek().kind != k) {
            std::string got = peek().kind == Tok::End ? "end of input" : "'" + peek().text + "'";
            throw SyntaxError(std::string("expected ") + what + ", found " + got, peek().pos);
        }
        return toks_[pos_++];
    }

    Expr expr() {
        Expr e = term();
        while (accept(Tok::Semi)) e = e_seq(e, term());
        return e;
    }

    Expr term() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::If: {
                ++pos_;
                BExpr b = bexp();
                expect(Tok::Then, "'then'");
                Expr th = term();
                expect(Tok::Else, "'else'");
                Expr el = term();
                return e_if(b, th, el);
            }
            case Tok::While: {
                ++pos_;
                BExpr b = bexp();
                expect(Tok::Do, "'do'");
                return e_while(b, term());
            }
            case Tok::Do: {
                ++pos_;
                const Token& id = expect(Tok::Ident, "action name");
                auto a = alpha_.action_index(id.text);
                if (!a) throw SyntaxError("undeclared action '" + id.text + "'", id.pos);
                return e_act(*a);
            }
            case Tok::Ident: {
                // Bare action name, shorthand for 'do IDENT'.
                ++pos_;
                auto a = alpha_.action_index(t.text);
                if (!a) {
                    if (alpha_.test_index(t.text))
                        throw SyntaxError("test '" + t.text + "' used as a program; write 'assert " +
                                              t.text + "'",
                                          t.pos);
                    throw SyntaxError("undeclared action '" + t.text + "'", t.pos);
                }
                return e_act(*a);
            }
            case Tok::Assert: ++pos_; return e_test(bexp());
            case Tok::Zero: ++pos_; return e_test(b_zero());
            case Tok::One: ++pos_; return e_test(b_one());
            case Tok::LParen: {
                ++pos_;
                Expr e = expr();
                expect(Tok::RParen, "')'");
                return e;
            }
            default: {
                std::string got = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
                throw SyntaxError("expected a program term, found " + got, t.pos);
            }
        }
    }

    BExpr bexp() {
        BExpr b = bfac();
        while (accept(Tok::Or)) b = b_or(b, bfac());
        return b;
    }

    BExpr bfac() {
        BExpr b = batom();
        while (accept(Tok::And)) b = b_and(b, batom());
        return b;
    }

    BExpr batom() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::Not: ++pos_; return b_not(batom());
            case Tok::True:
            case Tok::One: ++pos_; return b_one();
            case Tok::False:
            case Tok::Zero: ++pos_; return b_zero();
            case Tok::Ident: {
                ++pos_;
                auto idx = alpha_.test_index(t.text);
                if (!idx) throw SyntaxError("undeclared test '" + t.text + "'", t.pos);
                return b_test(*idx);
            }
            case Tok::LParen: {
                ++pos_;
                BExpr b = bexp();
                expect(Tok::RParen, "')'");
                return b;
            }
            default: {
                std::string got = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
                throw SyntaxError("expected a test, found " + got, t.pos);
            }
        }
    }

    std::vector<Token> toks_;
    const Alphabet& alpha_;
    std::size_t pos_ = 0;
};

// Precedence levels: 0 = or, 1 = and, 2 = atom.
void print_b(const BExpr& b, const Alphabet& a, int ctx, std::string& out) {
    switch (b->kind) {
        case BExprNode::Kind::Zero: out += "false"; return;
        case BExprNode::Kind::One: out += "true"; return;
        case BExprNode::Kind::Test: out += a.tests().at(b->test); return;
        case BExprNode::Kind::Not:
            out += '!';
            print_b(b->lhs, a, 2, out);
            return;
        case BExprNode::Kind::And:
        case BExprNode::Kind::Or: {
            int level = b->kind == BExprNode::Kind::Or ? 0 : 1;
            bool paren = ctx > level;
            if (paren) out += '(';
            // Left-nested chains print flat; a right operand of equal level needs parens.
            print_b(b->lhs, a, level, out);
            out += level == 0 ? " or " : " and ";
            print_b(b->rhs, a, level + 1, out);
            if (paren) out += ')';
            return;
        }
    }
}

// ctx_term: the expression sits in a term position (branch, body, or right
// operand of ';'), so a sequence there must be parenthesised.
void print_e(const Expr& e, const Alphabet& a, bool ctx_term, std::string& out) {
    switch (e->kind) {
        case ExprNode::Kind::Act: out += "do " + a.action_name(e->action); return;
        case ExprNode::Kind::Test:
            if (e->guard->kind == BExprNode::Kind::Zero) out += "0";
            else if (e->guard->kind == BExprNode::Kind::One) out += "1";
            else {
                out += "assert ";
                print_b(e->guard, a, 2, out);
            }
            return;
        case ExprNode::Kind::Seq:
            if (ctx_term) out += '(';
            print_e(e->lhs, a, false, out);
            out += "; ";
            print_e(e->rhs, a, true, out);
            if (ctx_term) out += ')';
            return;
        case ExprNode::Kind::If:
            out += "if ";
            print_b(e->guard, a, 0, out);
            out += " then ";
            print_e(e->lhs, a, true, out);
            out += " else ";
            print_e(e->rhs, a, true, out);
            return;
        case ExprNode::Kind::While:
            out += "while ";
            print_b(e->guard, a, 0, out);
            out += " do ";
            print_e(e->lhs, a, true, out);
            return;
    }
}

}  // namespace

Expr parse_expr(std::string_view text, const Alphabet& alphabet) {
    return Parser(text, alphabet).whole_expr();
}

BExpr parse_bexpr(std::string_view text, const Alphabet& alphabet) {
    return Parser(text, alphabet).whole_bexpr();
}

std::string to_string(const Expr& e, const Alphabet& alphabet) {
    std::string out;
    print_e(e, alphabet, false, out);
    return out;
}

std::string to_string(const BExpr& b, const Alphabet& alphabet) {
    std::string out;
    print_b(b, alphabet, 0, out);
    return out;
}

}  // namespace gkat
