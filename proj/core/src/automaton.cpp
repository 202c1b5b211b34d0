#include "gkat/automaton.hpp"

#include <deque>
#include <functional>

#include "gkat/errors.hpp"
#include "partition.hpp"

namespace gkat {

GAutomaton::GAutomaton(Alphabet alphabet, std::size_t num_states, StateId initial)
    : alphabet_(std::move(alphabet)),
      num_states_(num_states),
      delta_(num_states * alphabet_.num_atoms()),
      initial_(initial) {
    if (num_states == 0) throw InputError("automaton needs at least one state");
    if (initial >= num_states) throw InputError("initial state out of range");
}

GAutomaton::GAutomaton(Alphabet alphabet, std::vector<Outcome> delta, StateId initial)
    : alphabet_(std::move(alphabet)), delta_(std::move(delta)), initial_(initial) {
    const std::size_t atoms = alphabet_.num_atoms();
    if (delta_.empty() || delta_.size() % atoms != 0)
        throw InputError("transition table size is not a multiple of the atom count");
    num_states_ = delta_.size() / atoms;
    if (initial >= num_states_) throw InputError("initial state out of range");
    for (const auto& o : delta_) {
        if (o.is_step() && (o.target >= num_states_ || o.action >= alphabet_.num_actions()))
            throw InputError("transition targets an unknown state or action");
    }
}

void GAutomaton::set_initial(StateId s) {
    if (s >= num_states_) throw InputError("initial state out of range");
    initial_ = s;
}

void GAutomaton::set(StateId x, AtomId a, Outcome o) {
    if (x >= num_states_ || a >= alphabet_.num_atoms()) throw InputError("transition source out of range");
    if (o.is_step() && (o.target >= num_states_ || o.action >= alphabet_.num_actions()))
        throw InputError("transition targets an unknown state or action");
    delta_[x * alphabet_.num_atoms() + a] = o;
}

bool g_accepts_from(const GAutomaton& aut, StateId x, const GuardedString& w) {
    for (std::size_t i = 0;; ++i) {
        const Outcome& o = aut.at(x, w.atom(i));
        if (i == w.length()) return o.is_accept();
        if (!o.is_step() || o.action != w.action(i)) return false;
        x = o.target;
    }
}

bool g_accepts(const GAutomaton& aut, const GuardedString& w) {
    return g_accepts_from(aut, aut.initial(), w);
}

FiniteGsLang g_language_upto(const GAutomaton& aut, StateId x, std::size_t k) {
    FiniteGsLang out;
    out.bound = k;
    GuardedWord prefix;
    std::function<void(StateId, std::size_t)> walk = [&](StateId s, std::size_t budget) {
        for (AtomId a = 0; a < aut.alphabet().num_atoms(); ++a) {
            const Outcome& o = aut.at(s, a);
            if (o.is_accept()) {
                out.strings.insert(GuardedString(prefix, a));
            } else if (o.is_step() && budget > 0) {
                prefix.push(a, o.action);
                walk(o.target, budget - 1);
                prefix.symbols.resize(prefix.symbols.size() - 2);
            }
        }
    };
    walk(x, k);
    return out;
}

std::vector<bool> live_states(const GAutomaton& aut) {
    const std::size_t n = aut.num_states();
    const std::size_t atoms = aut.alphabet().num_atoms();
    std::vector<bool> live(n, false);
    bool changed = true;
    while (changed) {
        changed = false;
        for (StateId x = 0; x < n; ++x) {
            if (live[x]) continue;
            for (AtomId a = 0; a < atoms; ++a) {
                const Outcome& o = aut.at(x, a);
                if (o.is_accept() || (o.is_step() && live[o.target])) {
                    live[x] = true;
                    changed = true;
                    break;
                }
            }
        }
    }
    return live;
}

bool is_normal(const GAutomaton& aut) {
    auto live = live_states(aut);
    for (StateId x = 0; x < aut.num_states(); ++x)
        for (AtomId a = 0; a < aut.alphabet().num_atoms(); ++a) {
            const Outcome& o = aut.at(x, a);
            if (o.is_step() && !live[o.target]) return false;
        }
    return true;
}

GAutomaton normalise(const GAutomaton& aut) {
    auto live = live_states(aut);
    GAutomaton out = aut;
    for (StateId x = 0; x < aut.num_states(); ++x)
        for (AtomId a = 0; a < aut.alphabet().num_atoms(); ++a) {
            const Outcome& o = aut.at(x, a);
            if (o.is_step() && !live[o.target]) out.set(x, a, Outcome::reject());
        }
    return out;
}

namespace {

// BFS numbering from the initial state; unreachable states map to kNoSuccessor.
std::vector<StateId> bfs_order(const GAutomaton& aut, std::vector<StateId>* order) {
    std::vector<StateId> index(aut.num_states(), detail::kNoSuccessor);
    std::deque<StateId> queue{aut.initial()};
    index[aut.initial()] = 0;
    order->assign(1, aut.initial());
    while (!queue.empty()) {
        StateId x = queue.front();
        queue.pop_front();
        for (AtomId a = 0; a < aut.alphabet().num_atoms(); ++a) {
            const Outcome& o = aut.at(x, a);
            if (o.is_step() && index[o.target] == detail::kNoSuccessor) {
                index[o.target] = static_cast<StateId>(order->size());
                order->push_back(o.target);
                queue.push_back(o.target);
            }
        }
    }
    return index;
}

void require_normal(const GAutomaton& aut, const char* op) {
    if (!is_normal(aut)) throw PreconditionError(std::string(op) + " requires a normal automaton");
}

}  // namespace

GAutomaton reachable(const GAutomaton& aut) {
    std::vector<StateId> order;
    auto index = bfs_order(aut, &order);
    GAutomaton out(aut.alphabet(), order.size(), 0);
    for (StateId i = 0; i < order.size(); ++i)
        for (AtomId a = 0; a < aut.alphabet().num_atoms(); ++a) {
            Outcome o = aut.at(order[i], a);
            if (o.is_step()) o.target = index[o.target];
            out.set(i, a, o);
        }
    return out;
}

bool bisimilar(const GAutomaton& a1, StateId x, const GAutomaton& a2, StateId y) {
    if (!(a1.alphabet() == a2.alphabet())) throw InputError("bisimilarity needs a shared alphabet");
    require_normal(a1, "bisimilar");
    require_normal(a2, "bisimilar");
    const std::size_t off = a1.num_states();
    const std::size_t atoms = a1.alphabet().num_atoms();
    auto outcome = [&](std::size_t s, AtomId a) -> Outcome {
        if (s < off) return a1.at(static_cast<StateId>(s), a);
        Outcome o = a2.at(static_cast<StateId>(s - off), a);
        if (o.is_step()) o.target += static_cast<StateId>(off);
        return o;
    };
    detail::UnionFind uf(off + a2.num_states());
    std::deque<std::pair<std::size_t, std::size_t>> work{{x, off + y}};
    uf.unite(x, off + y);
    while (!work.empty()) {
        auto [s, t] = work.front();
        work.pop_front();
        for (AtomId a = 0; a < atoms; ++a) {
            Outcome o1 = outcome(s, a);
            Outcome o2 = outcome(t, a);
            if (o1.kind != o2.kind) return false;
            if (o1.is_step()) {
                if (o1.action != o2.action) return false;
                if (uf.unite(o1.target, o2.target)) work.emplace_back(o1.target, o2.target);
            }
        }
    }
    return true;
}

std::vector<bool> simulation_relation(const GAutomaton& aut) {
    require_normal(aut, "similar");
    const std::size_t n = aut.num_states();
    const std::size_t atoms = aut.alphabet().num_atoms();
    std::vector<bool> rel(n * n, true);
    bool changed = true;
    while (changed) {
        changed = false;
        for (StateId x = 0; x < n; ++x)
            for (StateId y = 0; y < n; ++y) {
                if (!rel[x * n + y]) continue;
                for (AtomId a = 0; a < atoms; ++a) {
                    const Outcome& ox = aut.at(x, a);
                    const Outcome& oy = aut.at(y, a);
                    bool ok = ox.is_reject() || (ox.is_accept() && oy.is_accept()) ||
                              (ox.is_step() && oy.is_step() && ox.action == oy.action &&
                               rel[ox.target * n + oy.target]);
                    if (!ok) {
                        rel[x * n + y] = false;
                        changed = true;
                        break;
                    }
                }
            }
    }
    return rel;
}

bool similar(const GAutomaton& aut, StateId x, StateId y) {
    return simulation_relation(aut)[x * aut.num_states() + y];
}

GAutomaton minimise(const GAutomaton& aut) {
    GAutomaton r = reachable(normalise(aut));
    const std::size_t atoms = r.alphabet().num_atoms();
    const std::size_t n = r.num_states();
    std::vector<std::vector<std::int64_t>> local(n);
    for (StateId x = 0; x < n; ++x)
        for (AtomId a = 0; a < atoms; ++a) {
            const Outcome& o = r.at(x, a);
            local[x].push_back(o.is_step() ? 2 + static_cast<std::int64_t>(o.action)
                                           : static_cast<std::int64_t>(o.kind));
        }
    auto cls = detail::refine_partition(detail::number_by_first_occurrence(local), atoms,
                                        [&](std::uint32_t x, std::size_t a) {
                                            const Outcome& o = r.at(x, static_cast<AtomId>(a));
                                            return o.is_step() ? o.target : detail::kNoSuccessor;
                                        });
    std::size_t classes = 0;
    for (auto c : cls) classes = std::max<std::size_t>(classes, c + 1);
    // States are in BFS order, so the first member of each class is its
    // least BFS-numbered state.
    std::vector<StateId> rep(classes, detail::kNoSuccessor);
    for (StateId x = 0; x < n; ++x)
        if (rep[cls[x]] == detail::kNoSuccessor) rep[cls[x]] = x;
    GAutomaton q(r.alphabet(), classes, cls[r.initial()]);
    for (StateId c = 0; c < classes; ++c)
        for (AtomId a = 0; a < atoms; ++a) {
            Outcome o = r.at(rep[c], a);
            if (o.is_step()) o.target = cls[o.target];
            q.set(c, a, o);
        }
    return reachable(q);
}

bool g_isomorphic(const GAutomaton& a1, const GAutomaton& a2) {
    if (!(a1.alphabet() == a2.alphabet()) || a1.num_states() != a2.num_states()) return false;
    const std::size_t n = a1.num_states();
    std::vector<StateId> fwd(n, detail::kNoSuccessor), back(n, detail::kNoSuccessor);
    std::deque<StateId> queue{a1.initial()};
    fwd[a1.initial()] = a2.initial();
    back[a2.initial()] = a1.initial();
    std::size_t mapped = 1;
    while (!queue.empty()) {
        StateId x = queue.front();
        queue.pop_front();
        StateId y = fwd[x];
        for (AtomId a = 0; a < a1.alphabet().num_atoms(); ++a) {
            const Outcome& o1 = a1.at(x, a);
            const Outcome& o2 = a2.at(y, a);
            if (o1.kind != o2.kind) return false;
            if (!o1.is_step()) continue;
            if (o1.action != o2.action) return false;
            if (fwd[o1.target] == detail::kNoSuccessor && back[o2.target] == detail::kNoSuccessor) {
                fwd[o1.target] = o2.target;
                back[o2.target] = o1.target;
                ++mapped;
                queue.push_back(o1.target);
            } else if (fwd[o1.target] != o2.target) {
                return false;
            }
        }
    }
    // Unreached states cannot be matched through the initial state.
    return mapped == n;
}

bool is_observable(const GAutomaton& aut) {
    // Pairwise distinguishability by iterated refinement: a pair is split at
    // depth d+1 when some atom separates it directly or leads to a pair split
    // at depth d. Refinement stabilises within num_states rounds.
    require_normal(aut, "is_observable");
    const std::size_t n = aut.num_states();
    const std::size_t atoms = aut.alphabet().num_atoms();
    std::vector<bool> split(n * n, false);
    for (std::size_t round = 0; round <= n; ++round) {
        std::vector<bool> next = split;
        for (StateId x = 0; x < n; ++x)
            for (StateId y = 0; y < n; ++y)
                for (AtomId a = 0; a < atoms && !next[x * n + y]; ++a) {
                    const Outcome& ox = aut.at(x, a);
                    const Outcome& oy = aut.at(y, a);
                    if (ox.kind != oy.kind || (ox.is_step() && ox.action != oy.action) ||
                        (ox.is_step() && split[ox.target * n + oy.target]))
                        next[x * n + y] = true;
                }
        split = std::move(next);
    }
    for (StateId x = 0; x < n; ++x)
        for (StateId y = x + 1; y < n; ++y)
            if (!split[x * n + y]) return false;
    return true;
}

}  // namespace gkat
