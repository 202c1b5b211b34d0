#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "gkat/alphabet.hpp"
#include "gkat/expr.hpp"

namespace gkat {

// Alternating atom/action symbols. A guarded word holds (atom, action) pairs
// and so has even length; a guarded string adds a final atom.
struct GuardedWord {
    std::vector<std::uint32_t> symbols;

    std::size_t length() const noexcept { return symbols.size() / 2; }
    bool empty() const noexcept { return symbols.empty(); }
    AtomId atom(std::size_t i) const { return symbols[2 * i]; }
    ActionId action(std::size_t i) const { return symbols[2 * i + 1]; }
    void push(AtomId a, ActionId p) {
        symbols.push_back(a);
        symbols.push_back(p);
    }
    GuardedWord extended(AtomId a, ActionId p) const {
        GuardedWord w = *this;
        w.push(a, p);
        return w;
    }

    friend bool operator==(const GuardedWord&, const GuardedWord&) = default;
    friend std::strong_ordering operator<=>(const GuardedWord& x, const GuardedWord& y) {
        if (auto c = x.symbols.size() <=> y.symbols.size(); c != 0) return c;
        return x.symbols <=> y.symbols;
    }
};

struct GuardedString {
    std::vector<std::uint32_t> symbols{0};

    GuardedString() = default;
    explicit GuardedString(AtomId a) : symbols{a} {}
    GuardedString(const GuardedWord& prefix, AtomId last) : symbols(prefix.symbols) {
        symbols.push_back(last);
    }

    // Number of actions.
    std::size_t length() const noexcept { return symbols.size() / 2; }
    AtomId atom(std::size_t i) const { return symbols[2 * i]; }
    ActionId action(std::size_t i) const { return symbols[2 * i + 1]; }
    AtomId first_atom() const { return symbols.front(); }
    AtomId last_atom() const { return symbols.back(); }
    GuardedWord prefix() const {
        return GuardedWord{std::vector<std::uint32_t>(symbols.begin(), symbols.end() - 1)};
    }
    // The guarded string that starts at the i-th atom.
    GuardedString suffix_from(std::size_t i) const;

    friend bool operator==(const GuardedString&, const GuardedString&) = default;
    friend std::strong_ordering operator<=>(const GuardedString& x, const GuardedString& y) {
        if (auto c = x.symbols.size() <=> y.symbols.size(); c != 0) return c;
        return x.symbols <=> y.symbols;
    }
};

GuardedString concat(const GuardedWord& w, const GuardedString& s);
GuardedWord concat(const GuardedWord& w, const GuardedWord& v);

// Words are written as space-separated atoms and actions, e.g. "b p !b q b".
std::string to_string(const GuardedString& s, const Alphabet& alphabet);
std::string to_string(const GuardedWord& w, const Alphabet& alphabet);
GuardedString parse_guarded_string(const std::string& text, const Alphabet& alphabet);
GuardedWord parse_guarded_word(const std::string& text, const Alphabet& alphabet);

using AtomSet = std::vector<bool>;  // indexed by AtomId

AtomSet atoms_satisfying(const Alphabet& alphabet, const BExpr& b);

struct FiniteGsLang {
    std::set<GuardedString> strings;
    std::size_t bound = 0;

    bool contains(const GuardedString& s) const { return strings.count(s) != 0; }
    std::size_t size() const noexcept { return strings.size(); }
    friend bool operator==(const FiniteGsLang& a, const FiniteGsLang& b) {
        return a.strings == b.strings;
    }
};

// The members of l of action-length at most k.
FiniteGsLang truncate(const FiniteGsLang& l, std::size_t k);

FiniteGsLang fusion(const FiniteGsLang& l, const FiniteGsLang& k);
FiniteGsLang guarded_sum(const FiniteGsLang& l, const FiniteGsLang& k, const AtomSet& guard);
// All atoms as length-0 strings.
FiniteGsLang all_atoms(const Alphabet& alphabet);
FiniteGsLang atoms_lang(const AtomSet& atoms);

FiniteGsLang lang_upto(const Alphabet& alphabet, const Expr& e, std::size_t k);

bool is_deterministic(const FiniteGsLang& l);

// Longest first: z itself down to its bare final atom.
std::vector<GuardedString> suffixes(const GuardedString& z);

// Every guarded string of action-length at most k, shortest first.
std::vector<GuardedString> all_guarded_strings(const Alphabet& alphabet, std::size_t k);

}  // namespace gkat
