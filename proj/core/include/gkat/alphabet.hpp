#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gkat {

using AtomId = std::uint32_t;
using ActionId = std::uint32_t;
using LetterId = std::uint32_t;  // (atom, action) pair packed atom-major

// Ordered test and action names. Atoms are indexed 0..2^n-1 so that index
// order is lexicographic over the declared tests with a true value sorting
// before a false one: atom 0 makes every test true.
class Alphabet {
public:
    static constexpr std::size_t kMaxTests = 16;

    Alphabet() = default;
    Alphabet(std::vector<std::string> tests, std::vector<std::string> actions);

    const std::vector<std::string>& tests() const noexcept { return tests_; }
    const std::vector<std::string>& actions() const noexcept { return actions_; }
    std::size_t num_tests() const noexcept { return tests_.size(); }
    std::size_t num_actions() const noexcept { return actions_.size(); }
    std::size_t num_atoms() const noexcept { return std::size_t{1} << tests_.size(); }
    std::size_t num_letters() const noexcept { return num_atoms() * num_actions(); }

    std::optional<std::size_t> test_index(std::string_view name) const;
    std::optional<ActionId> action_index(std::string_view name) const;

    bool test_value(AtomId atom, std::size_t test) const noexcept {
        return ((atom >> (tests_.size() - 1 - test)) & 1U) == 0;
    }
    AtomId atom_from(const std::vector<bool>& values) const;

    LetterId letter(AtomId atom, ActionId action) const noexcept {
        return static_cast<LetterId>(atom * actions_.size() + action);
    }
    AtomId letter_atom(LetterId l) const noexcept {
        return static_cast<AtomId>(l / actions_.size());
    }
    ActionId letter_action(LetterId l) const noexcept {
        return static_cast<ActionId>(l % actions_.size());
    }

    // "b", "!b", or "t1·!t2" for several tests.
    std::string atom_name(AtomId atom) const;
    const std::string& action_name(ActionId a) const { return actions_.at(a); }
    std::string letter_name(LetterId l) const;

    // Accepts the rendering of atom_name, with '·' or '.' as separator, in
    // any test order; every test must occur exactly once.
    AtomId parse_atom(std::string_view text) const;

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::vector<std::string> tests_;
    std::vector<std::string> actions_;
};

std::vector<AtomId> atoms_of(const Alphabet& alphabet);

// Splits "a,b, c" into trimmed non-empty names.
std::vector<std::string> split_names(std::string_view csv);

}  // namespace gkat
