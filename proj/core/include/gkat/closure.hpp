#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "gkat/dfa.hpp"
#include "gkat/succinct.hpp"

namespace gkat {

// P: subsets under union; H: families of subsets (full Boolean algebra);
// A: upward-closed families (distributive lattice); R: subsets under xor.
enum class Monad { P, H, A, R };
enum class GeneratorTarget { P, R };
enum class Construction { Rfsa, Atomaton, Distromaton, Xor, XorCaba };

std::string monad_name(Monad m);
Construction parse_construction(const std::string& name);
std::string construction_name(Construction c);
Monad construction_monad(Construction c);
GeneratorTarget construction_target(Construction c);

inline constexpr std::size_t kMaxStatesFamilies = 4;  // H and A
inline constexpr std::size_t kMaxStatesSubsets = 16;  // P and R

// The free algebra over the states of a DFA with its induced deterministic
// structure. Elements are bit-encoded: for P and R a subset of states, for
// H and A a set of subsets (bit i stands for the subset with mask i).
struct ClosureAlgebra {
    Monad monad = Monad::P;
    Dfa base;
    std::vector<std::uint32_t> elements;  // encodings, ascending
    std::vector<std::uint32_t> delta;     // element index * letters + letter -> element index
    std::vector<bool> out;
    std::uint32_t initial = 0;  // element index

    bool quotiented = false;
    std::vector<std::uint32_t> class_of;        // element index -> class
    std::vector<std::uint32_t> representative;  // class -> least element index
    std::vector<std::uint32_t> class_delta;     // class * letters + letter -> class
    std::vector<bool> class_out;
    std::uint32_t initial_class = 0;

    std::size_t num_letters() const noexcept { return base.num_letters(); }
    std::size_t num_classes() const noexcept { return representative.size(); }
    std::uint32_t index_of(std::uint32_t encoding) const;
    std::uint32_t class_of_encoding(std::uint32_t encoding) const { return class_of[index_of(encoding)]; }
    std::uint32_t encoding_of_class(std::uint32_t c) const { return elements[representative[c]]; }

    std::vector<std::int32_t> lookup;  // encoding -> element index or -1
    std::uint32_t full = 0;            // top encoding for H and A
};

ClosureAlgebra free_bialgebra(const Dfa& dfa, Monad monad);
// Language-equivalence quotient; verifies that the Moore structure and the
// algebra operations are well defined on classes.
ClosureAlgebra minimise_bialgebra(ClosureAlgebra c);

// Join of two classes (union for P/H/A, xor for R).
std::uint32_t class_join(const ClosureAlgebra& c, std::uint32_t x, std::uint32_t y);
std::uint32_t class_xor(const ClosureAlgebra& c, std::uint32_t x, std::uint32_t y);
bool class_leq(const ClosureAlgebra& c, std::uint32_t x, std::uint32_t y);
std::uint32_t class_bottom(const ClosureAlgebra& c);

struct GeneratorSet {
    GeneratorTarget target = GeneratorTarget::P;
    std::vector<std::uint32_t> elements;                    // classes
    std::vector<std::vector<std::uint32_t>> decomposition;  // class -> generator indices
    const std::vector<std::uint32_t>& decompose(std::uint32_t cls) const { return decomposition.at(cls); }
};

GeneratorSet extract_generators(const ClosureAlgebra& c, GeneratorTarget target);
// Class obtained by combining the given generators with the target operation.
std::uint32_t recompose(const ClosureAlgebra& c, const GeneratorSet& g, const std::vector<std::uint32_t>& idx);

using SuccinctAutomaton = std::variant<Nfa, XorAutomaton>;

SuccinctAutomaton succinct_automaton(const ClosureAlgebra& c, const GeneratorSet& g);

struct CanonResult {
    Dfa dfa;
    ClosureAlgebra algebra;
    GeneratorSet generators;
    SuccinctAutomaton automaton;

    std::size_t num_states() const;
};

CanonResult canonize(const Dfa& dfa, Construction construction);
CanonResult canonize(std::string_view regex, const std::vector<std::string>& alphabet, Construction construction);

bool succinct_accepts(const SuccinctAutomaton& aut, const Word& w);
std::size_t num_states(const SuccinctAutomaton& aut);

enum class ClosurePair { CslCaba, CslCdl, Z2Caba };

ClosurePair parse_closure_pair(const std::string& name);

struct AlphaClosedReport {
    bool closed = false;
    std::size_t valuations = 0;   // distinct realised state-acceptance patterns
    std::size_t weak_size = 0;    // closure under the weaker algebra
    std::size_t strong_size = 0;  // closure under the stronger algebra
};

// Compares the closures of the state languages under the two algebras of
// the pair, inside the finite Boolean algebra generated by those languages.
AlphaClosedReport check_alpha_closed(const SuccinctAutomaton& aut, ClosurePair pair,
                                     std::size_t cap = 1'000'000);

}  // namespace gkat
