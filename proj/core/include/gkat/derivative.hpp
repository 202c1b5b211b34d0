#pragma once

#include <cstddef>

#include "gkat/automaton.hpp"
#include "gkat/expr.hpp"

namespace gkat {

struct DerivOutcome {
    Outcome::Kind kind = Outcome::Kind::Reject;
    ActionId action = 0;
    Expr next;  // set for steps
};

// Right-associated sequences with the unit and zero laws applied.
Expr canonical(const Expr& e);
// Sequence constructor preserving canonical form when both sides are canonical.
Expr seq_canonical(const Expr& l, const Expr& r);

bool accept_atom(const Alphabet& alphabet, const Expr& e, AtomId atom);
DerivOutcome derive_step(const Alphabet& alphabet, const Expr& e, AtomId atom);

inline constexpr std::size_t kDefaultStateCap = 1'000'000;

// Derivative closure of canonical(e), normalised. Throws ResourceError when
// more than state_cap states are discovered.
GAutomaton expr_to_automaton(const Alphabet& alphabet, const Expr& e,
                             std::size_t state_cap = kDefaultStateCap);

}  // namespace gkat
