#include "gkat/derivative.hpp"

#include <unordered_map>

#include "gkat/errors.hpp"

namespace gkat {

Expr seq_canonical(const Expr& l, const Expr& r) {
    if (is_one(l)) return r;
    if (is_one(r)) return l;
    if (is_zero(l)) return l;
    if (l->kind == ExprNode::Kind::Seq) return seq_canonical(l->lhs, seq_canonical(l->rhs, r));
    return e_seq(l, r);
}

Expr canonical(const Expr& e) {
    switch (e->kind) {
        case ExprNode::Kind::Act:
        case ExprNode::Kind::Test: return e;
        case ExprNode::Kind::Seq: return seq_canonical(canonical(e->lhs), canonical(e->rhs));
        case ExprNode::Kind::If: return e_if(e->guard, canonical(e->lhs), canonical(e->rhs));
        case ExprNode::Kind::While: return e_while(e->guard, canonical(e->lhs));
    }
    return e;
}

bool accept_atom(const Alphabet& alphabet, const Expr& e, AtomId atom) {
    switch (e->kind) {
        case ExprNode::Kind::Act: return false;
        case ExprNode::Kind::Test: return atom_satisfies(alphabet, atom, e->guard);
        case ExprNode::Kind::Seq:
            return accept_atom(alphabet, e->lhs, atom) && accept_atom(alphabet, e->rhs, atom);
        case ExprNode::Kind::If:
            return atom_satisfies(alphabet, atom, e->guard) ? accept_atom(alphabet, e->lhs, atom)
                                                            : accept_atom(alphabet, e->rhs, atom);
        case ExprNode::Kind::While: return !atom_satisfies(alphabet, atom, e->guard);
    }
    return false;
}

DerivOutcome derive_step(const Alphabet& alphabet, const Expr& e, AtomId atom) {
    using K = Outcome::Kind;
    switch (e->kind) {
        case ExprNode::Kind::Act: return {K::Step, e->action, e_test(b_one())};
        case ExprNode::Kind::Test:
            return {atom_satisfies(alphabet, atom, e->guard) ? K::Accept : K::Reject, 0, nullptr};
        case ExprNode::Kind::Seq: {
            if (accept_atom(alphabet, e->lhs, atom)) return derive_step(alphabet, e->rhs, atom);
            DerivOutcome d = derive_step(alphabet, e->lhs, atom);
            if (d.kind == K::Step) d.next = seq_canonical(d.next, e->rhs);
            return d;
        }
        case ExprNode::Kind::If:
            return atom_satisfies(alphabet, atom, e->guard) ? derive_step(alphabet, e->lhs, atom)
                                                            : derive_step(alphabet, e->rhs, atom);
        case ExprNode::Kind::While: {
            if (!atom_satisfies(alphabet, atom, e->guard)) return {K::Accept, 0, nullptr};
            DerivOutcome d = derive_step(alphabet, e->lhs, atom);
            if (d.kind != K::Step) return {K::Reject, 0, nullptr};
            d.next = seq_canonical(d.next, e);
            return d;
        }
    }
    return {};
}

GAutomaton expr_to_automaton(const Alphabet& alphabet, const Expr& e, std::size_t state_cap) {
    const std::size_t atoms = alphabet.num_atoms();
    std::unordered_map<std::string, StateId> ids;
    std::vector<Expr> states;
    std::vector<Outcome> delta;
    auto intern = [&](const Expr& x) {
        auto [it, fresh] = ids.emplace(to_string(x, alphabet), static_cast<StateId>(states.size()));
        if (fresh) {
            if (states.size() >= state_cap)
                throw ResourceError("derivative closure exceeds " + std::to_string(state_cap) + " states");
            states.push_back(x);
        }
        return it->second;
    };
    intern(canonical(e));
    for (std::size_t i = 0; i < states.size(); ++i) {
        Expr cur = states[i];
        for (AtomId a = 0; a < atoms; ++a) {
            DerivOutcome d = derive_step(alphabet, cur, a);
            if (d.kind == Outcome::Kind::Step) delta.push_back(Outcome::step(d.action, intern(d.next)));
            else delta.push_back(Outcome{d.kind});
        }
    }
    return normalise(GAutomaton(alphabet, std::move(delta), 0));
}

}  // namespace gkat
