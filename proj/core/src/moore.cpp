#include "gkat/moore.hpp"

#include <deque>

#include "gkat/errors.hpp"
#include "partition.hpp"

namespace gkat {

MooreAutomaton to_moore(const GAutomaton& aut) {
    const Alphabet& al = aut.alphabet();
    const std::size_t n = aut.num_states();
    const std::size_t atoms = al.num_atoms();
    const StateId sink = static_cast<StateId>(n);
    MooreAutomaton m;
    m.num_inputs = al.num_letters();
    m.initial = aut.initial();
    m.delta.assign((n + 1) * m.num_inputs, sink);
    m.out.assign(n + 1, MooreOutput(atoms, false));
    for (StateId x = 0; x < n; ++x)
        for (AtomId a = 0; a < atoms; ++a) {
            const Outcome& o = aut.at(x, a);
            if (o.is_accept()) m.out[x][a] = true;
            if (o.is_step()) m.delta[x * m.num_inputs + al.letter(a, o.action)] = o.target;
        }
    return m;
}

MooreOutput moore_accepts(const MooreAutomaton& m, const MooreWord& w) {
    StateId x = m.initial;
    for (LetterId a : w) {
        if (a >= m.num_inputs) throw InputError("letter out of range");
        x = m.next(x, a);
    }
    return m.out[x];
}

namespace {

MooreAutomaton moore_reachable(const MooreAutomaton& m) {
    std::vector<StateId> index(m.num_states(), detail::kNoSuccessor);
    std::vector<StateId> order{m.initial};
    index[m.initial] = 0;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (LetterId a = 0; a < m.num_inputs; ++a) {
            StateId y = m.next(order[i], a);
            if (index[y] == detail::kNoSuccessor) {
                index[y] = static_cast<StateId>(order.size());
                order.push_back(y);
            }
        }
    MooreAutomaton r;
    r.num_inputs = m.num_inputs;
    r.initial = 0;
    for (StateId x : order) {
        r.out.push_back(m.out[x]);
        for (LetterId a = 0; a < m.num_inputs; ++a) r.delta.push_back(index[m.next(x, a)]);
    }
    return r;
}

}  // namespace

MooreAutomaton moore_minimise(const MooreAutomaton& m) {
    MooreAutomaton r = moore_reachable(m);
    auto cls = detail::refine_partition(detail::number_by_first_occurrence(r.out), r.num_inputs,
                                        [&](std::uint32_t x, std::size_t a) {
                                            return r.next(x, static_cast<LetterId>(a));
                                        });
    std::size_t classes = 0;
    for (auto c : cls) classes = std::max<std::size_t>(classes, c + 1);
    std::vector<StateId> rep(classes, detail::kNoSuccessor);
    for (StateId x = 0; x < r.num_states(); ++x)
        if (rep[cls[x]] == detail::kNoSuccessor) rep[cls[x]] = x;
    MooreAutomaton q;
    q.num_inputs = r.num_inputs;
    q.initial = cls[r.initial];
    for (StateId c = 0; c < classes; ++c) {
        q.out.push_back(r.out[rep[c]]);
        for (LetterId a = 0; a < r.num_inputs; ++a) q.delta.push_back(cls[r.next(rep[c], a)]);
    }
    return moore_reachable(q);
}

std::optional<MooreWord> moore_bisim_cex(const MooreAutomaton& m1, const MooreAutomaton& m2) {
    if (m1.num_inputs != m2.num_inputs) throw InputError("Moore machines over different inputs");
    const std::size_t n2 = m2.num_states();
    struct Visit {
        std::size_t parent;
        LetterId letter;
    };
    constexpr std::size_t kRoot = static_cast<std::size_t>(-1);
    std::vector<std::size_t> seen(m1.num_states() * n2, kRoot);
    std::vector<std::pair<StateId, StateId>> nodes;
    std::vector<Visit> visits;
    auto path = [&](std::size_t node) {
        MooreWord w;
        for (; visits[node].parent != kRoot; node = visits[node].parent) w.push_back(visits[node].letter);
        return MooreWord(w.rbegin(), w.rend());
    };
    nodes.emplace_back(m1.initial, m2.initial);
    visits.push_back({kRoot, 0});
    seen[m1.initial * n2 + m2.initial] = 0;
    // Pairs are discovered in length-lexicographic order of their access
    // words, so the first differing pair yields the least distinguishing word.
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        auto [x, y] = nodes[i];
        if (m1.out[x] != m2.out[y]) return path(i);
        for (LetterId a = 0; a < m1.num_inputs; ++a) {
            StateId x2 = m1.next(x, a), y2 = m2.next(y, a);
            std::size_t key = x2 * n2 + y2;
            if (seen[key] != kRoot) continue;
            seen[key] = nodes.size();
            nodes.emplace_back(x2, y2);
            visits.push_back({i, a});
        }
    }
    return std::nullopt;
}

bool moore_isomorphic(const MooreAutomaton& m1, const MooreAutomaton& m2) {
    if (m1.num_inputs != m2.num_inputs || m1.num_states() != m2.num_states()) return false;
    const std::size_t n = m1.num_states();
    std::vector<StateId> fwd(n, detail::kNoSuccessor), back(n, detail::kNoSuccessor);
    std::deque<StateId> queue{m1.initial};
    fwd[m1.initial] = m2.initial;
    back[m2.initial] = m1.initial;
    std::size_t mapped = 1;
    while (!queue.empty()) {
        StateId x = queue.front();
        queue.pop_front();
        StateId y = fwd[x];
        if (m1.out[x] != m2.out[y]) return false;
        for (LetterId a = 0; a < m1.num_inputs; ++a) {
            StateId x2 = m1.next(x, a), y2 = m2.next(y, a);
            if (fwd[x2] == detail::kNoSuccessor && back[y2] == detail::kNoSuccessor) {
                fwd[x2] = y2;
                back[y2] = x2;
                ++mapped;
                queue.push_back(x2);
            } else if (fwd[x2] != y2) {
                return false;
            }
        }
    }
    return mapped == n;
}

GuardedWord word_to_guarded(const MooreWord& w, const Alphabet& alphabet) {
    GuardedWord g;
    for (LetterId l : w) g.push(alphabet.letter_atom(l), alphabet.letter_action(l));
    return g;
}

MooreWord guarded_to_word(const GuardedWord& w, const Alphabet& alphabet) {
    MooreWord out;
    for (std::size_t i = 0; i < w.length(); ++i) out.push_back(alphabet.letter(w.atom(i), w.action(i)));
    return out;
}

}  // namespace gkat
