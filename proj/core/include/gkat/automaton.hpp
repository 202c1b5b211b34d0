#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gkat/alphabet.hpp"
#include "gkat/guarded.hpp"

namespace gkat {

using StateId = std::uint32_t;

struct Outcome {
    enum class Kind : std::uint8_t { Reject, Accept, Step };
    Kind kind = Kind::Reject;
    ActionId action = 0;
    StateId target = 0;

    static Outcome reject() { return {}; }
    static Outcome accept() { return {Kind::Accept}; }
    static Outcome step(ActionId p, StateId y) { return {Kind::Step, p, y}; }

    bool is_step() const noexcept { return kind == Kind::Step; }
    bool is_accept() const noexcept { return kind == Kind::Accept; }
    bool is_reject() const noexcept { return kind == Kind::Reject; }
    friend bool operator==(const Outcome&, const Outcome&) = default;
};

// Deterministic automaton over guarded strings: every (state, atom) pair
// accepts, rejects, or emits an action and moves.
class GAutomaton {
public:
    GAutomaton() = default;
    GAutomaton(Alphabet alphabet, std::size_t num_states, StateId initial = 0);
    GAutomaton(Alphabet alphabet, std::vector<Outcome> delta, StateId initial);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::size_t num_states() const noexcept { return num_states_; }
    StateId initial() const noexcept { return initial_; }
    void set_initial(StateId s);

    const Outcome& at(StateId x, AtomId a) const { return delta_[x * alphabet_.num_atoms() + a]; }
    void set(StateId x, AtomId a, Outcome o);

    friend bool operator==(const GAutomaton&, const GAutomaton&) = default;

private:
    Alphabet alphabet_;
    std::size_t num_states_ = 0;
    std::vector<Outcome> delta_;
    StateId initial_ = 0;
};

bool g_accepts(const GAutomaton& aut, const GuardedString& w);
bool g_accepts_from(const GAutomaton& aut, StateId x, const GuardedString& w);
FiniteGsLang g_language_upto(const GAutomaton& aut, StateId x, std::size_t k);

// States whose language is non-empty.
std::vector<bool> live_states(const GAutomaton& aut);
bool is_normal(const GAutomaton& aut);
GAutomaton normalise(const GAutomaton& aut);

// Restriction to states reachable from the initial one, numbered in BFS
// order (atoms ascending) so the initial state becomes 0.
GAutomaton reachable(const GAutomaton& aut);

bool bisimilar(const GAutomaton& a1, StateId x, const GAutomaton& a2, StateId y);
bool similar(const GAutomaton& aut, StateId x, StateId y);
// Greatest simulation as a row-major |X|x|X| matrix.
std::vector<bool> simulation_relation(const GAutomaton& aut);

GAutomaton minimise(const GAutomaton& aut);
bool g_isomorphic(const GAutomaton& a1, const GAutomaton& a2);

// Distinct states of a normal automaton are separated by some guarded
// string of action-length at most num_states.
bool is_observable(const GAutomaton& aut);

}  // namespace gkat
