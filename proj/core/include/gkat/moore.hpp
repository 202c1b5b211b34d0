#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gkat/automaton.hpp"

namespace gkat {

using MooreOutput = std::vector<bool>;
using MooreWord = std::vector<LetterId>;

// Moore machine over letters 0..num_inputs-1 with bit-vector outputs.
struct MooreAutomaton {
    std::size_t num_inputs = 0;
    std::vector<StateId> delta;  // state * num_inputs + letter
    std::vector<MooreOutput> out;
    StateId initial = 0;

    std::size_t num_states() const noexcept { return out.size(); }
    StateId next(StateId x, LetterId a) const { return delta[x * num_inputs + a]; }
    friend bool operator==(const MooreAutomaton&, const MooreAutomaton&) = default;
};

// Adds a sink as the last state; inputs are the (atom, action) letters of
// the alphabet and outputs record the accepting atoms.
MooreAutomaton to_moore(const GAutomaton& aut);

MooreOutput moore_accepts(const MooreAutomaton& m, const MooreWord& w);
MooreAutomaton moore_minimise(const MooreAutomaton& m);
// Shortest word (then least in letter order) on which the outputs differ.
std::optional<MooreWord> moore_bisim_cex(const MooreAutomaton& m1, const MooreAutomaton& m2);
bool moore_isomorphic(const MooreAutomaton& m1, const MooreAutomaton& m2);

GuardedWord word_to_guarded(const MooreWord& w, const Alphabet& alphabet);
MooreWord guarded_to_word(const GuardedWord& w, const Alphabet& alphabet);

}  // namespace gkat
