#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace gkat {

struct RegexNode;
using Regex = std::shared_ptr<const RegexNode>;

// Regular expressions kept in a normal form: unions are flattened, sorted
// and deduplicated, concatenation is right-associated with unit and zero
// laws applied, and stars are not nested. `key` identifies the normal form.
struct RegexNode {
    enum class Kind { Empty, Eps, Sym, Cat, Alt, Star };
    Kind kind;
    std::uint32_t letter = 0;
    std::vector<Regex> children;
    std::string key;
    bool nullable = false;
};

Regex re_empty();
Regex re_eps();
Regex re_sym(std::uint32_t letter);
Regex re_cat(const Regex& l, const Regex& r);
Regex re_alt(std::vector<Regex> parts);
Regex re_star(const Regex& r);

Regex re_derivative(const Regex& r, std::uint32_t letter);

// Letters are single characters from `alphabet`; '+' is union, juxtaposition
// concatenation, '*' iteration; "eps"/"ε" and "empty"/"∅" are constants.
Regex parse_regex(std::string_view text, const std::vector<std::string>& alphabet);

}  // namespace gkat
