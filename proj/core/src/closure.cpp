#include "gkat/closure.hpp"

#include <bit>
#include <deque>
#include <functional>
#include <map>
#include <set>

#include "gkat/errors.hpp"
#include "partition.hpp"

namespace gkat {

std::string monad_name(Monad m) {
    switch (m) {
        case Monad::P: return "P";
        case Monad::H: return "H";
        case Monad::A: return "A";
        case Monad::R: return "R";
    }
    return "?";
}

Construction parse_construction(const std::string& name) {
    if (name == "rfsa") return Construction::Rfsa;
    if (name == "atomaton") return Construction::Atomaton;
    if (name == "distromaton") return Construction::Distromaton;
    if (name == "xor") return Construction::Xor;
    if (name == "xorcaba") return Construction::XorCaba;
    throw InputError("unknown construction '" + name + "'");
}

std::string construction_name(Construction c) {
    switch (c) {
        case Construction::Rfsa: return "rfsa";
        case Construction::Atomaton: return "atomaton";
        case Construction::Distromaton: return "distromaton";
        case Construction::Xor: return "xor";
        case Construction::XorCaba: return "xorcaba";
    }
    return "?";
}

Monad construction_monad(Construction c) {
    switch (c) {
        case Construction::Rfsa: return Monad::P;
        case Construction::Atomaton: return Monad::H;
        case Construction::Distromaton: return Monad::A;
        case Construction::Xor: return Monad::R;
        case Construction::XorCaba: return Monad::H;
    }
    return Monad::P;
}

GeneratorTarget construction_target(Construction c) {
    return (c == Construction::Xor || c == Construction::XorCaba) ? GeneratorTarget::R : GeneratorTarget::P;
}

std::uint32_t ClosureAlgebra::index_of(std::uint32_t encoding) const {
    if (encoding >= lookup.size() || lookup[encoding] < 0)
        throw InvariantError("encoding " + std::to_string(encoding) + " is outside the carrier");
    return static_cast<std::uint32_t>(lookup[encoding]);
}

namespace {

bool families(Monad m) { return m == Monad::H || m == Monad::A; }

// Families of subsets of an m-element set: sub = 2^m subset masks.
std::uint32_t upset(std::uint32_t phi, std::uint32_t sub) {
    std::uint32_t out = 0;
    for (std::uint32_t psi = 0; psi < sub; ++psi)
        if ((psi & phi) == phi) out |= 1U << psi;
    return out;
}

std::uint32_t downset(std::uint32_t phi, std::uint32_t sub) {
    std::uint32_t out = 0;
    for (std::uint32_t psi = 0; psi < sub; ++psi)
        if ((psi & phi) == psi) out |= 1U << psi;
    return out;
}

bool upward_closed(std::uint32_t fam, std::uint32_t m) {
    const std::uint32_t sub = 1U << m;
    for (std::uint32_t phi = 0; phi < sub; ++phi) {
        if (!((fam >> phi) & 1U)) continue;
        for (std::uint32_t q = 0; q < m; ++q)
            if (!((fam >> (phi | (1U << q))) & 1U)) return false;
    }
    return true;
}

struct Operation {
    std::string name;
    std::function<std::uint32_t(std::uint32_t, std::uint32_t)> apply;
    std::vector<std::uint32_t> generators;  // every element is a combination of these
};

std::vector<Operation> operations(const ClosureAlgebra& c) {
    const std::uint32_t m = static_cast<std::uint32_t>(c.base.num_states);
    auto join = [](std::uint32_t x, std::uint32_t y) { return x | y; };
    auto meet = [](std::uint32_t x, std::uint32_t y) { return x & y; };
    auto exor = [](std::uint32_t x, std::uint32_t y) { return x ^ y; };
    std::vector<std::uint32_t> singletons;
    switch (c.monad) {
        case Monad::P:
            for (std::uint32_t q = 0; q < m; ++q) singletons.push_back(1U << q);
            return {{"join", join, singletons}};
        case Monad::R:
            for (std::uint32_t q = 0; q < m; ++q) singletons.push_back(1U << q);
            return {{"xor", exor, singletons}};
        case Monad::H: {
            const std::uint32_t sub = 1U << m;
            std::vector<std::uint32_t> cosingletons;
            for (std::uint32_t phi = 0; phi < sub; ++phi) {
                singletons.push_back(1U << phi);
                cosingletons.push_back(c.full ^ (1U << phi));
            }
            return {{"join", join, singletons}, {"meet", meet, cosingletons}, {"xor", exor, singletons}};
        }
        case Monad::A: {
            const std::uint32_t sub = 1U << m;
            std::vector<std::uint32_t> ups, co_downs;
            for (std::uint32_t phi = 0; phi < sub; ++phi) {
                ups.push_back(upset(phi, sub));
                co_downs.push_back(c.full ^ downset(phi, sub));
            }
            return {{"join", join, ups}, {"meet", meet, co_downs}};
        }
    }
    return {};
}

}  // namespace

ClosureAlgebra free_bialgebra(const Dfa& dfa, Monad monad) {
    const std::size_t m = dfa.num_states;
    const std::size_t k = dfa.num_letters();
    if (families(monad) ? m > kMaxStatesFamilies : m > kMaxStatesSubsets)
        throw ResourceError(monad_name(monad) + " closure limited to " +
                            std::to_string(families(monad) ? kMaxStatesFamilies : kMaxStatesSubsets) +
                            " DFA states, got " + std::to_string(m));
    ClosureAlgebra c;
    c.monad = monad;
    c.base = dfa;
    std::uint32_t accept_mask = 0;
    for (std::uint32_t q = 0; q < m; ++q)
        if (dfa.accepting[q]) accept_mask |= 1U << q;

    const std::uint32_t sub = 1U << m;  // number of subsets of the states
    const std::uint32_t universe = families(monad) ? static_cast<std::uint32_t>((std::uint64_t{1} << sub)) : sub;
    c.full = families(monad) ? static_cast<std::uint32_t>((std::uint64_t{1} << sub) - 1) : sub - 1;
    c.lookup.assign(universe, -1);
    for (std::uint32_t e = 0; e < universe; ++e) {
        if (monad == Monad::A && !upward_closed(e, static_cast<std::uint32_t>(m))) continue;
        c.lookup[e] = static_cast<std::int32_t>(c.elements.size());
        c.elements.push_back(e);
    }

    // preimage[a][phi] = {q : delta_a(q) in phi}
    std::vector<std::vector<std::uint32_t>> preimage(k, std::vector<std::uint32_t>(sub, 0));
    for (std::uint32_t a = 0; a < k; ++a)
        for (std::uint32_t phi = 0; phi < sub; ++phi)
            for (std::uint32_t q = 0; q < m; ++q)
                if ((phi >> dfa.next(q, a)) & 1U) preimage[a][phi] |= 1U << q;

    for (std::uint32_t e : c.elements) {
        switch (monad) {
            case Monad::P: c.out.push_back((e & accept_mask) != 0); break;
            case Monad::R: c.out.push_back((std::popcount(e & accept_mask) & 1) != 0); break;
            default: c.out.push_back(((e >> accept_mask) & 1U) != 0); break;
        }
        for (std::uint32_t a = 0; a < k; ++a) {
            std::uint32_t next = 0;
            if (families(monad)) {
                for (std::uint32_t phi = 0; phi < sub; ++phi)
                    if ((e >> preimage[a][phi]) & 1U) next |= 1U << phi;
            } else {
                for (std::uint32_t q = 0; q < m; ++q) {
                    if (!((e >> q) & 1U)) continue;
                    std::uint32_t bit = 1U << dfa.next(q, a);
                    next = monad == Monad::P ? (next | bit) : (next ^ bit);
                }
            }
            c.delta.push_back(c.index_of(next));
        }
    }
    std::uint32_t init = 0;
    if (families(monad)) {
        for (std::uint32_t phi = 0; phi < sub; ++phi)
            if ((phi >> dfa.initial) & 1U) init |= 1U << phi;
    } else {
        init = 1U << dfa.initial;
    }
    c.initial = c.index_of(init);
    return c;
}

ClosureAlgebra minimise_bialgebra(ClosureAlgebra c) {
    const std::size_t k = c.num_letters();
    const std::size_t n = c.elements.size();
    std::vector<std::uint32_t> init(n);
    for (std::size_t i = 0; i < n; ++i) init[i] = c.out[i] ? 1 : 0;
    c.class_of = detail::refine_partition(init, k, [&](std::uint32_t x, std::size_t a) { return c.delta[x * k + a]; });
    std::size_t classes = 0;
    for (auto cl : c.class_of) classes = std::max<std::size_t>(classes, cl + 1);
    c.representative.assign(classes, detail::kNoSuccessor);
    for (std::uint32_t i = 0; i < n; ++i)
        if (c.representative[c.class_of[i]] == detail::kNoSuccessor) c.representative[c.class_of[i]] = i;
    c.class_out.clear();
    c.class_delta.clear();
    for (std::uint32_t cl = 0; cl < classes; ++cl) {
        std::uint32_t r = c.representative[cl];
        c.class_out.push_back(c.out[r]);
        for (std::size_t a = 0; a < k; ++a) c.class_delta.push_back(c.class_of[c.delta[r * k + a]]);
    }
    c.initial_class = c.class_of[c.initial];
    c.quotiented = true;

    for (std::uint32_t i = 0; i < n; ++i) {
        std::uint32_t cl = c.class_of[i];
        if (c.out[i] != c.class_out[cl]) throw InvariantError("output not constant on a class");
        for (std::size_t a = 0; a < k; ++a)
            if (c.class_of[c.delta[i * k + a]] != c.class_delta[cl * k + a])
                throw InvariantError("transition not well defined on classes");
    }
    // Each operation is associative and commutative, so compatibility with
    // one generating argument at a time implies compatibility in general.
    for (const Operation& op : operations(c)) {
        for (std::uint32_t i = 0; i < n; ++i) {
            std::uint32_t x = c.elements[i];
            std::uint32_t rx = c.encoding_of_class(c.class_of[i]);
            if (x == rx) continue;
            for (std::uint32_t g : op.generators)
                if (c.class_of_encoding(op.apply(x, g)) != c.class_of_encoding(op.apply(rx, g)))
                    throw InvariantError(op.name + " does not descend to language classes");
        }
    }
    if (c.monad == Monad::H)
        for (std::uint32_t i = 0; i < n; ++i)
            if (c.class_of_encoding(c.full ^ c.elements[i]) !=
                c.class_of_encoding(c.full ^ c.encoding_of_class(c.class_of[i])))
                throw InvariantError("complement does not descend to language classes");
    return c;
}

std::uint32_t class_join(const ClosureAlgebra& c, std::uint32_t x, std::uint32_t y) {
    std::uint32_t ex = c.encoding_of_class(x), ey = c.encoding_of_class(y);
    return c.class_of_encoding(c.monad == Monad::R ? (ex ^ ey) : (ex | ey));
}

std::uint32_t class_xor(const ClosureAlgebra& c, std::uint32_t x, std::uint32_t y) {
    if (c.monad != Monad::R && c.monad != Monad::H) throw InputError("xor needs the R or H closure");
    return c.class_of_encoding(c.encoding_of_class(x) ^ c.encoding_of_class(y));
}

bool class_leq(const ClosureAlgebra& c, std::uint32_t x, std::uint32_t y) { return class_join(c, x, y) == y; }

std::uint32_t class_bottom(const ClosureAlgebra& c) { return c.class_of_encoding(0); }

std::uint32_t recompose(const ClosureAlgebra& c, const GeneratorSet& g, const std::vector<std::uint32_t>& idx) {
    std::uint32_t acc = class_bottom(c);
    for (auto i : idx)
        acc = g.target == GeneratorTarget::R ? class_xor(c, acc, g.elements.at(i)) : class_join(c, acc, g.elements.at(i));
    return acc;
}

GeneratorSet extract_generators(const ClosureAlgebra& c, GeneratorTarget target) {
    if (!c.quotiented) throw PreconditionError("extract_generators needs a quotiented algebra");
    const std::uint32_t classes = static_cast<std::uint32_t>(c.num_classes());
    const std::uint32_t bottom = class_bottom(c);
    GeneratorSet g;
    g.target = target;
    g.decomposition.assign(classes, {});

    if (target == GeneratorTarget::P) {
        if (c.monad == Monad::R) throw InputError("the R closure has no union structure");
        // Every class is a join of the classes of the raw join generators,
        // so irreducibles and atoms are among them.
        std::set<std::uint32_t> candidates;
        const std::vector<Operation> ops = operations(c);
        for (std::uint32_t raw : ops.front().generators) {
            std::uint32_t cl = c.class_of_encoding(raw);
            if (cl != bottom) candidates.insert(cl);
        }
        for (std::uint32_t x : candidates) {
            bool keep;
            if (c.monad == Monad::H) {
                keep = true;  // atom: nothing non-zero strictly below
                for (std::uint32_t y : candidates)
                    if (y != x && class_leq(c, y, x)) keep = false;
            } else {
                std::uint32_t below = bottom;
                for (std::uint32_t y : candidates)
                    if (y != x && class_leq(c, y, x)) below = class_join(c, below, y);
                keep = below != x;
            }
            if (keep) g.elements.push_back(x);
        }
        for (std::uint32_t x = 0; x < classes; ++x)
            for (std::uint32_t i = 0; i < g.elements.size(); ++i)
                if (class_leq(c, g.elements[i], x)) g.decomposition[x].push_back(i);
    } else {
        if (c.monad != Monad::R && c.monad != Monad::H) throw InputError("xor generators need the R or H closure");
        // Incremental elimination: a class outside the current span becomes a
        // pivot and doubles the span.
        std::vector<std::int64_t> coord(classes, -1);
        std::vector<std::uint32_t> span{bottom};
        coord[bottom] = 0;
        for (std::uint32_t x = 0; x < classes; ++x) {
            if (coord[x] >= 0) continue;
            const std::uint32_t bit = static_cast<std::uint32_t>(g.elements.size());
            if (bit >= 63) throw ResourceError("xor basis larger than 63 elements");
            g.elements.push_back(x);
            const std::size_t old = span.size();
            for (std::size_t i = 0; i < old; ++i) {
                std::uint32_t y = class_xor(c, span[i], x);
                if (coord[y] >= 0) throw InvariantError("xor pivot is linearly dependent");
                coord[y] = coord[span[i]] | (std::int64_t{1} << bit);
                span.push_back(y);
            }
        }
        for (std::uint32_t x = 0; x < classes; ++x)
            for (std::uint32_t i = 0; i < g.elements.size(); ++i)
                if ((coord[x] >> i) & 1) g.decomposition[x].push_back(i);
    }

    std::set<std::vector<std::uint32_t>> distinct;
    for (std::uint32_t x = 0; x < classes; ++x) {
        if (recompose(c, g, g.decomposition[x]) != x) throw InvariantError("generators fail to recompose a class");
        distinct.insert(g.decomposition[x]);
    }
    const bool basis = target == GeneratorTarget::R || c.monad == Monad::H;
    if (basis && distinct.size() != classes) throw InvariantError("basis decomposition is not injective");
    return g;
}

SuccinctAutomaton succinct_automaton(const ClosureAlgebra& c, const GeneratorSet& g) {
    SetAutomaton s;
    s.alphabet = c.base.alphabet;
    s.num_states = g.elements.size();
    const std::size_t k = c.num_letters();
    for (std::uint32_t y : g.elements) {
        s.accepting.push_back(c.class_out[y]);
        for (std::size_t a = 0; a < k; ++a) s.delta.push_back(g.decompose(c.class_delta[y * k + a]));
    }
    s.initial = g.decompose(c.initial_class);
    if (g.target == GeneratorTarget::R) return XorAutomaton{s};
    return Nfa{s};
}

std::size_t CanonResult::num_states() const { return gkat::num_states(automaton); }

CanonResult canonize(const Dfa& dfa, Construction construction) {
    Dfa minimal = minimal_dfa(dfa);
    ClosureAlgebra algebra = minimise_bialgebra(free_bialgebra(minimal, construction_monad(construction)));
    GeneratorSet gens = extract_generators(algebra, construction_target(construction));
    SuccinctAutomaton aut = succinct_automaton(algebra, gens);
    return CanonResult{std::move(minimal), std::move(algebra), std::move(gens), std::move(aut)};
}

CanonResult canonize(std::string_view regex, const std::vector<std::string>& alphabet, Construction construction) {
    return canonize(minimal_dfa(regex, alphabet), construction);
}

bool succinct_accepts(const SuccinctAutomaton& aut, const Word& w) {
    return std::visit([&](const auto& a) { return succinct_accepts(a, w); }, aut);
}

std::size_t num_states(const SuccinctAutomaton& aut) {
    return std::visit([](const auto& a) { return a.num_states; }, aut);
}

ClosurePair parse_closure_pair(const std::string& name) {
    if (name == "CSL-CABA") return ClosurePair::CslCaba;
    if (name == "CSL-CDL") return ClosurePair::CslCdl;
    if (name == "Z2-CABA") return ClosurePair::Z2Caba;
    throw InputError("unknown closure pair '" + name + "'");
}

namespace {

using Subset = std::vector<bool>;  // over realised valuations

Subset subset_or(const Subset& a, const Subset& b) {
    Subset r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] || b[i];
    return r;
}
Subset subset_and(const Subset& a, const Subset& b) {
    Subset r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] && b[i];
    return r;
}
Subset subset_xor(const Subset& a, const Subset& b) {
    Subset r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] != b[i];
    return r;
}

// Closure of `seed` under the binary operations, breadth first.
std::set<Subset> close_under(std::set<Subset> seed, const std::vector<std::function<Subset(const Subset&, const Subset&)>>& ops,
                             const std::vector<Subset>& gens, bool pairwise, std::size_t cap) {
    std::deque<Subset> work(seed.begin(), seed.end());
    while (!work.empty()) {
        Subset x = work.front();
        work.pop_front();
        std::vector<Subset> partners = pairwise ? std::vector<Subset>(seed.begin(), seed.end()) : gens;
        for (const auto& op : ops)
            for (const auto& y : partners) {
                Subset z = op(x, y);
                if (seed.insert(z).second) {
                    if (seed.size() > cap) throw ResourceError("closure exceeds cap");
                    work.push_back(z);
                }
            }
    }
    return seed;
}

}  // namespace

AlphaClosedReport check_alpha_closed(const SuccinctAutomaton& aut, ClosurePair pair, std::size_t cap) {
    const bool xor_semantics = std::holds_alternative<XorAutomaton>(aut);
    if (xor_semantics != (pair == ClosurePair::Z2Caba))
        throw InputError("closure pair does not match the automaton's semantics");
    const SetAutomaton& a = xor_semantics ? static_cast<const SetAutomaton&>(std::get<XorAutomaton>(aut))
                                          : static_cast<const SetAutomaton&>(std::get<Nfa>(aut));
    const std::size_t n = a.num_states;
    const std::size_t k = a.alphabet.size();
    if (n > 64) throw ResourceError("alpha-closedness check limited to 64 states");

    std::uint64_t accept_mask = 0;
    std::vector<std::vector<std::uint64_t>> succ(n, std::vector<std::uint64_t>(k, 0));
    for (std::uint32_t q = 0; q < n; ++q) {
        if (a.accepting[q]) accept_mask |= std::uint64_t{1} << q;
        for (std::uint32_t l = 0; l < k; ++l)
            for (auto y : a.next(q, l)) succ[q][l] |= std::uint64_t{1} << y;
    }
    auto step = [&](std::uint64_t conf, std::uint32_t l) {
        std::uint64_t out = 0;
        for (std::uint32_t q = 0; q < n; ++q)
            if ((conf >> q) & 1U) out = xor_semantics ? (out ^ succ[q][l]) : (out | succ[q][l]);
        return out;
    };
    auto accepts = [&](std::uint64_t conf) {
        return xor_semantics ? (std::popcount(conf & accept_mask) & 1) != 0 : (conf & accept_mask) != 0;
    };

    // Simultaneous runs from every single state; each reachable tuple of
    // configurations yields the set of states whose language holds the word.
    std::vector<std::uint64_t> start(n);
    for (std::uint32_t q = 0; q < n; ++q) start[q] = std::uint64_t{1} << q;
    std::set<std::vector<std::uint64_t>> seen{start};
    std::deque<std::vector<std::uint64_t>> work{start};
    std::set<std::uint64_t> valuation_set;
    while (!work.empty()) {
        auto tuple = work.front();
        work.pop_front();
        std::uint64_t v = 0;
        for (std::uint32_t q = 0; q < n; ++q)
            if (accepts(tuple[q])) v |= std::uint64_t{1} << q;
        valuation_set.insert(v);
        for (std::uint32_t l = 0; l < k; ++l) {
            std::vector<std::uint64_t> next(n);
            for (std::uint32_t q = 0; q < n; ++q) next[q] = step(tuple[q], l);
            if (seen.insert(next).second) {
                if (seen.size() > cap) throw ResourceError("determinisation exceeds cap");
                work.push_back(std::move(next));
            }
        }
    }
    const std::vector<std::uint64_t> valuations(valuation_set.begin(), valuation_set.end());
    const std::size_t r = valuations.size();
    std::vector<Subset> langs;
    for (std::uint32_t q = 0; q < n; ++q) {
        Subset s(r);
        for (std::size_t i = 0; i < r; ++i) s[i] = ((valuations[i] >> q) & 1U) != 0;
        langs.push_back(std::move(s));
    }
    const Subset empty(r, false), full(r, true);

    AlphaClosedReport rep;
    rep.valuations = r;
    std::set<Subset> weak;
    if (pair == ClosurePair::Z2Caba) weak = close_under({empty}, {subset_xor}, langs, false, cap);
    else weak = close_under({empty}, {subset_or}, langs, false, cap);
    rep.weak_size = weak.size();
    if (pair == ClosurePair::CslCdl) {
        std::set<Subset> seed(langs.begin(), langs.end());
        seed.insert(empty);
        seed.insert(full);
        std::set<Subset> strong = close_under(seed, {subset_or, subset_and}, {}, true, cap);
        rep.strong_size = strong.size();
        rep.closed = strong == weak;
    } else {
        if (r >= 63) throw ResourceError("Boolean closure too large to compare");
        rep.strong_size = std::size_t{1} << r;
        rep.closed = rep.weak_size == rep.strong_size;
    }
    return rep;
}

}  // namespace gkat
