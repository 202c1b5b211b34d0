#include "gkat/succinct.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "gkat/errors.hpp"

namespace gkat {

namespace {

template <class Aut>
Aut make_set_automaton(std::vector<std::string> alphabet, std::size_t num_states,
                       const std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>>& edges,
                       std::vector<std::uint32_t> initial, const std::vector<std::uint32_t>& accepting) {
    Aut aut;
    aut.alphabet = std::move(alphabet);
    aut.num_states = num_states;
    aut.delta.assign(num_states * aut.alphabet.size(), {});
    aut.accepting.assign(num_states, false);
    for (auto [from, letter, to] : edges) {
        if (from >= num_states || to >= num_states || letter >= aut.alphabet.size())
            throw InputError("edge out of range");
        aut.delta[from * aut.alphabet.size() + letter].push_back(to);
    }
    for (auto& targets : aut.delta) {
        std::sort(targets.begin(), targets.end());
        targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    }
    for (auto q : accepting) aut.accepting.at(q) = true;
    std::sort(initial.begin(), initial.end());
    aut.initial = std::move(initial);
    return aut;
}

}  // namespace

Nfa make_nfa(std::vector<std::string> alphabet, std::size_t num_states,
             const std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>>& edges,
             std::vector<std::uint32_t> initial, const std::vector<std::uint32_t>& accepting) {
    return make_set_automaton<Nfa>(std::move(alphabet), num_states, edges, std::move(initial), accepting);
}

XorAutomaton make_xor(std::vector<std::string> alphabet, std::size_t num_states,
                      const std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>>& edges,
                      std::vector<std::uint32_t> initial, const std::vector<std::uint32_t>& accepting) {
    return make_set_automaton<XorAutomaton>(std::move(alphabet), num_states, edges, std::move(initial), accepting);
}

bool succinct_accepts(const Nfa& aut, const Word& w) {
    std::vector<bool> cur(aut.num_states, false);
    for (auto q : aut.initial) cur[q] = true;
    for (auto a : w) {
        std::vector<bool> next(aut.num_states, false);
        for (std::uint32_t q = 0; q < aut.num_states; ++q)
            if (cur[q])
                for (auto y : aut.next(q, a)) next[y] = true;
        cur = std::move(next);
    }
    for (std::uint32_t q = 0; q < aut.num_states; ++q)
        if (cur[q] && aut.accepting[q]) return true;
    return false;
}

bool succinct_accepts(const XorAutomaton& aut, const Word& w) {
    std::vector<bool> cur(aut.num_states, false);
    for (auto q : aut.initial) cur[q] = !cur[q];
    for (auto a : w) {
        std::vector<bool> next(aut.num_states, false);
        for (std::uint32_t q = 0; q < aut.num_states; ++q)
            if (cur[q])
                for (auto y : aut.next(q, a)) next[y] = !next[y];
        cur = std::move(next);
    }
    bool parity = false;
    for (std::uint32_t q = 0; q < aut.num_states; ++q)
        if (cur[q] && aut.accepting[q]) parity = !parity;
    return parity;
}

bool set_automata_isomorphic(const SetAutomaton& a, const SetAutomaton& b) {
    if (a.alphabet != b.alphabet || a.num_states != b.num_states) return false;
    const std::size_t n = a.num_states;
    if (n > 10) throw ResourceError("isomorphism check limited to 10 states");
    std::vector<std::uint32_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    auto mapped = [&](const std::vector<std::uint32_t>& set) {
        std::vector<std::uint32_t> out;
        for (auto q : set) out.push_back(perm[q]);
        std::sort(out.begin(), out.end());
        return out;
    };
    do {
        bool ok = mapped(a.initial) == b.initial;
        for (std::uint32_t q = 0; q < n && ok; ++q) {
            ok = a.accepting[q] == b.accepting[perm[q]];
            for (std::uint32_t l = 0; l < a.alphabet.size() && ok; ++l)
                ok = mapped(a.next(q, l)) == b.next(perm[q], l);
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace gkat
