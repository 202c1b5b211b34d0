#pragma once

#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "gkat/dfa.hpp"

namespace gkat {

// Shared shape of automata whose transitions map a state and letter to a
// set of states. How sets combine depends on the concrete type.
struct SetAutomaton {
    std::vector<std::string> alphabet;
    std::size_t num_states = 0;
    std::vector<std::vector<std::uint32_t>> delta;  // state * |alphabet| + letter, sorted
    std::vector<bool> accepting;
    std::vector<std::uint32_t> initial;  // sorted

    const std::vector<std::uint32_t>& next(std::uint32_t q, std::uint32_t a) const {
        return delta[q * alphabet.size() + a];
    }
    friend bool operator==(const SetAutomaton&, const SetAutomaton&) = default;
};

// Configurations are unions of states; acceptance by any accepting member.
struct Nfa : SetAutomaton {};

// Configurations are GF(2) sums of states; successor sets and acceptance
// combine by parity.
struct XorAutomaton : SetAutomaton {};

Nfa make_nfa(std::vector<std::string> alphabet, std::size_t num_states,
             const std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>>& edges,
             std::vector<std::uint32_t> initial, const std::vector<std::uint32_t>& accepting);
XorAutomaton make_xor(std::vector<std::string> alphabet, std::size_t num_states,
                      const std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>>& edges,
                      std::vector<std::uint32_t> initial, const std::vector<std::uint32_t>& accepting);

bool succinct_accepts(const Nfa& aut, const Word& w);
bool succinct_accepts(const XorAutomaton& aut, const Word& w);

// Brute force over state permutations; intended for small automata.
bool set_automata_isomorphic(const SetAutomaton& a, const SetAutomaton& b);

// Compares against the DFA on every word of length at most max_len.
template <class Aut>
bool agrees_with_dfa(const Aut& aut, const Dfa& dfa, std::size_t max_len) {
    for (const auto& w : all_words(dfa.num_letters(), max_len))
        if (succinct_accepts(aut, w) != dfa_accepts(dfa, w)) return false;
    return true;
}

}  // namespace gkat
