#pragma once

#include <gkat/gkat.hpp>

namespace gkat::fixtures {

// Tests {b}, actions {p, q}; atom 0 is b, atom 1 is !b.
inline Alphabet bpq() { return Alphabet({"b"}, {"p", "q"}); }

inline constexpr AtomId kB = 0;
inline constexpr AtomId kNotB = 1;
inline constexpr ActionId kP = 0;
inline constexpr ActionId kQ = 1;

inline Expr while_then_q(const Alphabet& al) { return parse_expr("(while b do p); q", al); }

// Learned two-state acceptor: loop on b|p, leave on !b|q to an accepting state.
inline GAutomaton golden_gl_result() {
    GAutomaton g(bpq(), 2, 0);
    g.set(0, kB, Outcome::step(kP, 0));
    g.set(0, kNotB, Outcome::step(kQ, 1));
    g.set(1, kB, Outcome::accept());
    g.set(1, kNotB, Outcome::accept());
    return g;
}

// Thompson-style acceptor for the same program; states 0 and 1 are bisimilar.
inline GAutomaton thompson() {
    GAutomaton g(bpq(), 3, 0);
    for (StateId x : {0U, 1U}) {
        g.set(x, kB, Outcome::step(kP, 1));
        g.set(x, kNotB, Outcome::step(kQ, 2));
    }
    g.set(2, kB, Outcome::accept());
    g.set(2, kNotB, Outcome::accept());
    return g;
}

// Three-state Moore machine learned by L*: start, sink, accepting.
inline MooreAutomaton golden_moore() {
    const Alphabet al = bpq();
    MooreAutomaton m;
    m.num_inputs = al.num_letters();
    m.out = {{false, false}, {false, false}, {true, true}};
    m.delta.assign(3 * m.num_inputs, 1);
    m.delta[al.letter(kB, kP)] = 0;
    m.delta[al.letter(kNotB, kQ)] = 2;
    m.initial = 0;
    return m;
}

inline const std::vector<std::string> kAB{"a", "b"};
inline const std::vector<std::string> kABC{"a", "b", "c"};

// Two five-state NFAs for the length-two words over {a,b,c} with distinct letters.
inline Nfa distinct_pairs_nfa_by_first() {
    return make_nfa(kABC, 5,
                    {{0, 0, 1}, {0, 1, 2}, {0, 2, 3},
                     {1, 1, 4}, {1, 2, 4}, {2, 0, 4}, {2, 2, 4}, {3, 0, 4}, {3, 1, 4}},
                    {0}, {4});
}
inline Nfa distinct_pairs_nfa_by_last() {
    return make_nfa(kABC, 5,
                    {{0, 1, 1}, {0, 2, 1}, {0, 0, 2}, {0, 2, 2}, {0, 0, 3}, {0, 1, 3},
                     {1, 0, 4}, {2, 1, 4}, {3, 2, 4}},
                    {0}, {4});
}

// Canonical acceptors for (a+b)*a with states named as in their figures.
// Residual NFA over x = L and y = L + eps.
inline Nfa golden_rfsa() {
    return make_nfa(kAB, 2, {{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {1, 0, 1}, {1, 1, 0}}, {0}, {1});
}
// Atoms 0 = words ending in a, 1 = {eps}, 2 = words ending in b.
inline Nfa golden_atomaton() {
    return make_nfa(kAB, 3, {{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {2, 0, 2}, {2, 1, 2}, {2, 1, 1}}, {0}, {1});
}
// Join-irreducibles 0 = L, 1 = L + eps, 2 = everything.
inline Nfa golden_distromaton() {
    return make_nfa(kAB, 3,
                    {{0, 0, 0}, {0, 0, 1}, {0, 1, 0},
                     {1, 0, 0}, {1, 0, 1}, {1, 1, 0},
                     {2, 0, 0}, {2, 0, 1}, {2, 0, 2}, {2, 1, 0}, {2, 1, 1}, {2, 1, 2}},
                    {0}, {1, 2});
}
// Basis {L}, {L + eps} of the xor closure; the DFA itself.
inline XorAutomaton golden_xor() {
    return make_xor(kAB, 2, {{0, 0, 1}, {0, 1, 0}, {1, 0, 1}, {1, 1, 0}}, {0}, {1});
}

// The four-state xor acceptor drawn for the Boolean closure of (a+b)*a.
// Its states are the classes 7, 6, 8, 4 of the eight-element algebra, which
// are linearly dependent (4 xor 6 = 8); state 3 is never reached.
inline XorAutomaton drawn_xorcaba() {
    return make_xor(kAB, 4, {{0, 0, 0}, {0, 1, 0}, {0, 0, 1}, {2, 0, 2}, {2, 1, 2}, {3, 0, 2}, {3, 1, 2}}, {0, 2},
                    {0, 1, 2});
}

}  // namespace gkat::fixtures
