#include "gkat/alphabet.hpp"

#include <algorithm>
#include <set>

#include "gkat/errors.hpp"

namespace gkat {

namespace {

bool valid_identifier(std::string_view s) {
    if (s.empty()) return false;
    auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
    auto digit = [](char c) { return c >= '0' && c <= '9'; };
    if (!alpha(s.front())) return false;
    return std::all_of(s.begin(), s.end(), [&](char c) { return alpha(c) || digit(c); });
}

const std::set<std::string, std::less<>> kReserved = {
    "if", "then", "else", "while", "do", "assert", "and", "or", "true", "false"};

}  // namespace

Alphabet::Alphabet(std::vector<std::string> tests, std::vector<std::string> actions)
    : tests_(std::move(tests)), actions_(std::move(actions)) {
    if (tests_.empty()) throw InputError("alphabet needs at least one test");
    if (actions_.empty()) throw InputError("alphabet needs at least one action");
    if (tests_.size() > kMaxTests)
        throw InputError("at most " + std::to_string(kMaxTests) + " tests are supported");
    std::set<std::string, std::less<>> seen;
    for (const auto* group : {&tests_, &actions_}) {
        for (const auto& name : *group) {
            if (!valid_identifier(name) || kReserved.count(name))
                throw InputError("invalid name '" + name + "'");
            if (!seen.insert(name).second)
                throw InputError("duplicate name '" + name + "'");
        }
    }
}

std::optional<std::size_t> Alphabet::test_index(std::string_view name) const {
    auto it = std::find(tests_.begin(), tests_.end(), name);
    if (it == tests_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - tests_.begin());
}

std::optional<ActionId> Alphabet::action_index(std::string_view name) const {
    auto it = std::find(actions_.begin(), actions_.end(), name);
    if (it == actions_.end()) return std::nullopt;
    return static_cast<ActionId>(it - actions_.begin());
}

AtomId Alphabet::atom_from(const std::vector<bool>& values) const {
    if (values.size() != tests_.size()) throw InputError("atom needs one value per test");
    AtomId a = 0;
    for (bool v : values) a = (a << 1) | (v ? 0U : 1U);
    return a;
}

std::string Alphabet::atom_name(AtomId atom) const {
    std::string out;
    for (std::size_t i = 0; i < tests_.size(); ++i) {
        if (i > 0) out += "·";
        if (!test_value(atom, i)) out += '!';
        out += tests_[i];
    }
    return out;
}

std::string Alphabet::letter_name(LetterId l) const {
    return atom_name(letter_atom(l)) + " " + action_name(letter_action(l));
}

AtomId Alphabet::parse_atom(std::string_view text) const {
    std::vector<int> values(tests_.size(), -1);
    std::string s(text);
    for (std::size_t pos = 0; (pos = s.find("·", pos)) != std::string::npos;) s.replace(pos, 2, ".");
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t end = s.find('.', start);
        if (end == std::string::npos) end = s.size();
        std::string lit = s.substr(start, end - start);
        lit.erase(std::remove(lit.begin(), lit.end(), ' '), lit.end());
        bool positive = true;
        if (!lit.empty() && lit.front() == '!') {
            positive = false;
            lit.erase(0, 1);
        }
        auto idx = test_index(lit);
        if (!idx) throw InputError("unknown test '" + lit + "' in atom '" + std::string(text) + "'");
        if (values[*idx] != -1) throw InputError("test repeated in atom '" + std::string(text) + "'");
        values[*idx] = positive ? 1 : 0;
        start = end + 1;
    }
    std::vector<bool> bits;
    for (int v : values) {
        if (v < 0) throw InputError("incomplete atom '" + std::string(text) + "'");
        bits.push_back(v == 1);
    }
    return atom_from(bits);
}

std::vector<AtomId> atoms_of(const Alphabet& alphabet) {
    std::vector<AtomId> out(alphabet.num_atoms());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<AtomId>(i);
    return out;
}

std::vector<std::string> split_names(std::string_view csv) {
    std::vector<std::string> out;
    std::string cur;
    auto flush = [&] {
        auto b = cur.find_first_not_of(" \t");
        auto e = cur.find_last_not_of(" \t");
        if (b != std::string::npos) out.push_back(cur.substr(b, e - b + 1));
        cur.clear();
    };
    for (char c : csv) {
        if (c == ',') flush();
        else cur += c;
    }
    flush();
    return out;
}

}  // namespace gkat
