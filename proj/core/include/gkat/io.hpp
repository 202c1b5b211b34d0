#pragma once

#include <string>

#include "gkat/automaton.hpp"
#include "gkat/closure.hpp"
#include "gkat/dfa.hpp"
#include "gkat/moore.hpp"

namespace gkat {

// DOT output: nodes q0..qn in BFS order from the initial state, the
// initial state marked by an edge from a point-shaped node.
std::string to_dot(const GAutomaton& aut);
std::string to_dot(const MooreAutomaton& m, const Alphabet& alphabet);
std::string to_dot(const Dfa& dfa);
std::string to_dot(const SuccinctAutomaton& aut);

// JSON exchange format for G-automata:
// {"tests":[..],"actions":[..],"initial":0,
//  "states":[{"<atom>":"accept"|"reject"|{"action":"p","target":1}, ...}]}
std::string to_json(const GAutomaton& aut);
GAutomaton g_automaton_from_json(const std::string& text);

}  // namespace gkat
