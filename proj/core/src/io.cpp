#include "gkat/io.hpp"

#include "json.hpp"

#include "gkat/errors.hpp"

namespace gkat {

namespace {

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

std::string header(const std::string& name) {
    return "digraph " + name + " {\n  rankdir=LR;\n  init [shape=point];\n";
}

}  // namespace

std::string to_dot(const GAutomaton& aut) {
    const GAutomaton r = reachable(aut);
    const Alphabet& al = r.alphabet();
    std::string out = header("gkat");
    for (StateId x = 0; x < r.num_states(); ++x) {
        std::string accept;
        for (AtomId a = 0; a < al.num_atoms(); ++a)
            if (r.at(x, a).is_accept()) accept += (accept.empty() ? "" : ",") + al.atom_name(a);
        out += "  q" + std::to_string(x) + " [shape=circle, accept=" + quote(accept) + "];\n";
    }
    out += "  init -> q0;\n";
    for (StateId x = 0; x < r.num_states(); ++x)
        for (AtomId a = 0; a < al.num_atoms(); ++a) {
            const Outcome& o = r.at(x, a);
            if (o.is_step())
                out += "  q" + std::to_string(x) + " -> q" + std::to_string(o.target) + " [label=" +
                       quote(al.atom_name(a) + "|" + al.action_name(o.action)) + "];\n";
        }
    return out + "}\n";
}

std::string to_dot(const MooreAutomaton& m, const Alphabet& alphabet) {
    const MooreAutomaton& r = m;
    // BFS numbering without merging states.
    std::vector<StateId> index(r.num_states(), static_cast<StateId>(-1));
    std::vector<StateId> order{r.initial};
    index[r.initial] = 0;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (LetterId a = 0; a < r.num_inputs; ++a) {
            StateId y = r.next(order[i], a);
            if (index[y] == static_cast<StateId>(-1)) {
                index[y] = static_cast<StateId>(order.size());
                order.push_back(y);
            }
        }
    std::string out = header("moore");
    for (std::size_t i = 0; i < order.size(); ++i) {
        std::string label;
        for (AtomId a = 0; a < alphabet.num_atoms(); ++a)
            label += (label.empty() ? "" : "+") + std::string(r.out[order[i]][a] ? "1" : "0") + alphabet.atom_name(a);
        out += "  q" + std::to_string(i) + " [shape=box, output=" + quote(label) + "];\n";
    }
    out += "  init -> q0;\n";
    for (std::size_t i = 0; i < order.size(); ++i)
        for (LetterId a = 0; a < r.num_inputs; ++a)
            out += "  q" + std::to_string(i) + " -> q" + std::to_string(index[r.next(order[i], a)]) +
                   " [label=" + quote(alphabet.letter_name(a)) + "];\n";
    return out + "}\n";
}

std::string to_dot(const Dfa& dfa) {
    std::string out = header("dfa");
    for (std::uint32_t q = 0; q < dfa.num_states; ++q)
        out += "  q" + std::to_string(q) + " [shape=" + (dfa.accepting[q] ? "doublecircle" : "circle") + "];\n";
    out += "  init -> q" + std::to_string(dfa.initial) + ";\n";
    for (std::uint32_t q = 0; q < dfa.num_states; ++q)
        for (std::uint32_t a = 0; a < dfa.num_letters(); ++a)
            out += "  q" + std::to_string(q) + " -> q" + std::to_string(dfa.next(q, a)) + " [label=" +
                   quote(dfa.alphabet[a]) + "];\n";
    return out + "}\n";
}

std::string to_dot(const SuccinctAutomaton& aut) {
    const bool is_xor = std::holds_alternative<XorAutomaton>(aut);
    const SetAutomaton& a = is_xor ? static_cast<const SetAutomaton&>(std::get<XorAutomaton>(aut))
                                   : static_cast<const SetAutomaton&>(std::get<Nfa>(aut));
    std::string out = header(is_xor ? "xor" : "nfa");
    for (std::uint32_t q = 0; q < a.num_states; ++q)
        out += "  q" + std::to_string(q) + " [shape=" + (a.accepting[q] ? "doublecircle" : "circle") + "];\n";
    for (auto q : a.initial) out += "  init -> q" + std::to_string(q) + (is_xor ? " [label=\"+\"]" : "") + ";\n";
    for (std::uint32_t q = 0; q < a.num_states; ++q)
        for (std::uint32_t l = 0; l < a.alphabet.size(); ++l)
            for (auto y : a.next(q, l))
                out += "  q" + std::to_string(q) + " -> q" + std::to_string(y) + " [label=" +
                       quote(is_xor ? a.alphabet[l] + " +" : a.alphabet[l]) + "];\n";
    return out + "}\n";
}

std::string to_json(const GAutomaton& aut) {
    using nlohmann::json;
    const Alphabet& al = aut.alphabet();
    json j;
    j["tests"] = al.tests();
    j["actions"] = al.actions();
    j["initial"] = aut.initial();
    j["states"] = json::array();
    for (StateId x = 0; x < aut.num_states(); ++x) {
        json st = json::object();
        for (AtomId a = 0; a < al.num_atoms(); ++a) {
            const Outcome& o = aut.at(x, a);
            if (o.is_accept()) st[al.atom_name(a)] = "accept";
            else if (o.is_reject()) st[al.atom_name(a)] = "reject";
            else st[al.atom_name(a)] = {{"action", al.action_name(o.action)}, {"target", o.target}};
        }
        j["states"].push_back(st);
    }
    return j.dump(2) + "\n";
}

GAutomaton g_automaton_from_json(const std::string& text) {
    using nlohmann::json;
    try {
        json j = json::parse(text);
        Alphabet al(j.at("tests").get<std::vector<std::string>>(), j.at("actions").get<std::vector<std::string>>());
        const auto& states = j.at("states");
        if (!states.is_array() || states.empty()) throw InputError("automaton needs a non-empty state list");
        GAutomaton aut(al, states.size(), j.value("initial", 0U));
        for (StateId x = 0; x < states.size(); ++x) {
            for (auto& [atom_text, val] : states[x].items()) {
                AtomId a = al.parse_atom(atom_text);
                if (val.is_string()) {
                    std::string v = val.get<std::string>();
                    if (v == "accept") aut.set(x, a, Outcome::accept());
                    else if (v == "reject") aut.set(x, a, Outcome::reject());
                    else throw InputError("unknown outcome '" + v + "'");
                } else {
                    auto p = al.action_index(val.at("action").get<std::string>());
                    if (!p) throw InputError("unknown action in automaton file");
                    aut.set(x, a, Outcome::step(*p, val.at("target").get<StateId>()));
                }
            }
        }
        return aut;
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed automaton JSON: ") + e.what());
    }
}

}  // namespace gkat
