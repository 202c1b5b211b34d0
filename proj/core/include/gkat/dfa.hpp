#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gkat {

using Word = std::vector<std::uint32_t>;

struct Dfa {
    std::vector<std::string> alphabet;
    std::size_t num_states = 0;
    std::vector<std::uint32_t> delta;  // state * |alphabet| + letter
    std::vector<bool> accepting;
    std::uint32_t initial = 0;

    std::size_t num_letters() const noexcept { return alphabet.size(); }
    std::uint32_t next(std::uint32_t q, std::uint32_t a) const { return delta[q * alphabet.size() + a]; }
    friend bool operator==(const Dfa&, const Dfa&) = default;
};

// Derivative construction followed by minimisation.
Dfa minimal_dfa(std::string_view regex, const std::vector<std::string>& alphabet);
// Reachable part quotiented by language equivalence, states in BFS order.
Dfa minimal_dfa(const Dfa& dfa);

bool dfa_accepts(const Dfa& dfa, const Word& w);
bool dfa_accepts_from(const Dfa& dfa, std::uint32_t q, const Word& w);

// Letters of a plain string, one character per letter.
Word word_from_text(std::string_view text, const std::vector<std::string>& alphabet);
std::string word_to_text(const Word& w, const std::vector<std::string>& alphabet);
// All words of length at most n, shortest first.
std::vector<Word> all_words(std::size_t num_letters, std::size_t n);

}  // namespace gkat
