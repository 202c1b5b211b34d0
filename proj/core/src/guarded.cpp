#include "gkat/guarded.hpp"

#include <map>
#include <sstream>
#include <unordered_map>

#include "gkat/errors.hpp"

namespace gkat {

GuardedString GuardedString::suffix_from(std::size_t i) const {
    GuardedString s;
    s.symbols.assign(symbols.begin() + static_cast<std::ptrdiff_t>(2 * i), symbols.end());
    return s;
}

GuardedString concat(const GuardedWord& w, const GuardedString& s) {
    GuardedString out;
    out.symbols = w.symbols;
    out.symbols.insert(out.symbols.end(), s.symbols.begin(), s.symbols.end());
    return out;
}

GuardedWord concat(const GuardedWord& w, const GuardedWord& v) {
    GuardedWord out = w;
    out.symbols.insert(out.symbols.end(), v.symbols.begin(), v.symbols.end());
    return out;
}

namespace {

std::string render(const std::vector<std::uint32_t>& symbols, const Alphabet& a) {
    std::string out;
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        if (i > 0) out += ' ';
        out += (i % 2 == 0) ? a.atom_name(symbols[i]) : a.action_name(symbols[i]);
    }
    return out;
}

std::vector<std::uint32_t> parse_symbols(const std::string& text, const Alphabet& a) {
    std::istringstream in(text);
    std::vector<std::uint32_t> out;
    std::string tok;
    while (in >> tok) {
        if (out.size() % 2 == 0) {
            out.push_back(a.parse_atom(tok));
        } else {
            auto p = a.action_index(tok);
            if (!p) throw InputError("unknown action '" + tok + "'");
            out.push_back(*p);
        }
    }
    return out;
}

}  // namespace

std::string to_string(const GuardedString& s, const Alphabet& alphabet) {
    return render(s.symbols, alphabet);
}

std::string to_string(const GuardedWord& w, const Alphabet& alphabet) {
    return w.empty() ? std::string("ε") : render(w.symbols, alphabet);
}

GuardedString parse_guarded_string(const std::string& text, const Alphabet& alphabet) {
    GuardedString s;
    s.symbols = parse_symbols(text, alphabet);
    if (s.symbols.size() % 2 == 0) throw InputError("guarded string must end with an atom: " + text);
    return s;
}

GuardedWord parse_guarded_word(const std::string& text, const Alphabet& alphabet) {
    GuardedWord w;
    if (text == "ε" || text == "eps") return w;
    w.symbols = parse_symbols(text, alphabet);
    if (w.symbols.size() % 2 != 0) throw InputError("guarded word must end with an action: " + text);
    return w;
}

AtomSet atoms_satisfying(const Alphabet& alphabet, const BExpr& b) {
    AtomSet out(alphabet.num_atoms());
    for (AtomId a = 0; a < out.size(); ++a) out[a] = atom_satisfies(alphabet, a, b);
    return out;
}

FiniteGsLang truncate(const FiniteGsLang& l, std::size_t k) {
    FiniteGsLang out;
    out.bound = std::min(l.bound, k);
    for (const auto& s : l.strings)
        if (s.length() <= k) out.strings.insert(s);
    return out;
}

FiniteGsLang fusion(const FiniteGsLang& l, const FiniteGsLang& k) {
    std::unordered_map<AtomId, std::vector<const GuardedString*>> by_first;
    for (const auto& w : k.strings) by_first[w.first_atom()].push_back(&w);
    FiniteGsLang out;
    out.bound = l.bound + k.bound;
    for (const auto& v : l.strings) {
        auto it = by_first.find(v.last_atom());
        if (it == by_first.end()) continue;
        for (const GuardedString* w : it->second) {
            GuardedString fused;
            fused.symbols = v.symbols;
            fused.symbols.insert(fused.symbols.end(), w->symbols.begin() + 1, w->symbols.end());
            out.strings.insert(std::move(fused));
        }
    }
    return out;
}

FiniteGsLang guarded_sum(const FiniteGsLang& l, const FiniteGsLang& k, const AtomSet& guard) {
    FiniteGsLang out;
    out.bound = std::max(l.bound, k.bound);
    for (const auto& s : l.strings)
        if (guard.at(s.first_atom())) out.strings.insert(s);
    for (const auto& s : k.strings)
        if (!guard.at(s.first_atom())) out.strings.insert(s);
    return out;
}

FiniteGsLang atoms_lang(const AtomSet& atoms) {
    FiniteGsLang out;
    for (AtomId a = 0; a < atoms.size(); ++a)
        if (atoms[a]) out.strings.insert(GuardedString(a));
    return out;
}

FiniteGsLang all_atoms(const Alphabet& alphabet) {
    return atoms_lang(AtomSet(alphabet.num_atoms(), true));
}

FiniteGsLang lang_upto(const Alphabet& alphabet, const Expr& e, std::size_t k) {
    const std::size_t n_atoms = alphabet.num_atoms();
    FiniteGsLang out;
    switch (e->kind) {
        case ExprNode::Kind::Act:
            if (k >= 1)
                for (AtomId a = 0; a < n_atoms; ++a)
                    for (AtomId b = 0; b < n_atoms; ++b)
                        out.strings.insert(GuardedString{GuardedWord{{a, e->action}}, b});
            break;
        case ExprNode::Kind::Test:
            out = atoms_lang(atoms_satisfying(alphabet, e->guard));
            break;
        case ExprNode::Kind::Seq:
            out = truncate(fusion(lang_upto(alphabet, e->lhs, k), lang_upto(alphabet, e->rhs, k)), k);
            break;
        case ExprNode::Kind::If:
            out = guarded_sum(lang_upto(alphabet, e->lhs, k), lang_upto(alphabet, e->rhs, k),
                              atoms_satisfying(alphabet, e->guard));
            break;
        case ExprNode::Kind::While: {
            AtomSet guard = atoms_satisfying(alphabet, e->guard);
            AtomSet exit = guard;
            exit.flip();
            const FiniteGsLang exit_lang = atoms_lang(exit);
            // Bare atoms of the guarded body are fusion identities and can
            // never be followed by an exit atom, so only productive strings
            // drive the unrolling.
            FiniteGsLang productive;
            for (const auto& s : lang_upto(alphabet, e->lhs, k).strings)
                if (s.length() > 0 && guard[s.first_atom()]) productive.strings.insert(s);
            productive.bound = k;
            FiniteGsLang power = all_atoms(alphabet);
            for (std::size_t round = 0; round <= k + 1; ++round) {
                for (auto& s : fusion(power, exit_lang).strings) out.strings.insert(s);
                power = truncate(fusion(power, productive), k);
                if (power.strings.empty()) break;
            }
            break;
        }
    }
    out.bound = k;
    return out;
}

bool is_deterministic(const FiniteGsLang& l) {
    // For every prefix ending in an atom, all members continuing it must
    // agree on what happens next: terminate (-1) or a specific action.
    std::map<std::vector<std::uint32_t>, std::int64_t> next;
    for (const auto& s : l.strings) {
        std::vector<std::uint32_t> prefix;
        for (std::size_t i = 0; i < s.symbols.size(); i += 2) {
            prefix.push_back(s.symbols[i]);
            std::int64_t step = (i + 1 < s.symbols.size()) ? static_cast<std::int64_t>(s.symbols[i + 1]) : -1;
            auto [it, inserted] = next.emplace(prefix, step);
            if (!inserted && it->second != step) return false;
            if (i + 1 < s.symbols.size()) prefix.push_back(s.symbols[i + 1]);
        }
    }
    return true;
}

std::vector<GuardedString> suffixes(const GuardedString& z) {
    std::vector<GuardedString> out;
    for (std::size_t i = 0; i <= z.length(); ++i) out.push_back(z.suffix_from(i));
    return out;
}

std::vector<GuardedString> all_guarded_strings(const Alphabet& alphabet, std::size_t k) {
    std::vector<GuardedString> out;
    std::vector<GuardedWord> layer{GuardedWord{}};
    for (std::size_t len = 0; len <= k; ++len) {
        std::vector<GuardedWord> next;
        for (const auto& w : layer) {
            for (AtomId a = 0; a < alphabet.num_atoms(); ++a) {
                out.emplace_back(w, a);
                if (len < k)
                    for (ActionId p = 0; p < alphabet.num_actions(); ++p) next.push_back(w.extended(a, p));
            }
        }
        layer = std::move(next);
    }
    return out;
}

}  // namespace gkat
