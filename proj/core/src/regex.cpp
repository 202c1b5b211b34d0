#include "gkat/regex.hpp"

#include <algorithm>

#include "gkat/errors.hpp"

namespace gkat {

namespace {

Regex make(RegexNode::Kind kind, std::uint32_t letter, std::vector<Regex> children, std::string key,
           bool nullable) {
    return std::make_shared<RegexNode>(RegexNode{kind, letter, std::move(children), std::move(key), nullable});
}

}  // namespace

Regex re_empty() {
    static const Regex r = make(RegexNode::Kind::Empty, 0, {}, "0", false);
    return r;
}

Regex re_eps() {
    static const Regex r = make(RegexNode::Kind::Eps, 0, {}, "1", true);
    return r;
}

Regex re_sym(std::uint32_t letter) {
    return make(RegexNode::Kind::Sym, letter, {}, "s" + std::to_string(letter), false);
}

Regex re_cat(const Regex& l, const Regex& r) {
    using K = RegexNode::Kind;
    if (l->kind == K::Empty || r->kind == K::Empty) return re_empty();
    if (l->kind == K::Eps) return r;
    if (r->kind == K::Eps) return l;
    if (l->kind == K::Cat) return re_cat(l->children[0], re_cat(l->children[1], r));
    return make(K::Cat, 0, {l, r}, "(" + l->key + "." + r->key + ")", l->nullable && r->nullable);
}

Regex re_alt(std::vector<Regex> parts) {
    using K = RegexNode::Kind;
    std::vector<Regex> flat;
    for (auto& p : parts) {
        if (p->kind == K::Alt) flat.insert(flat.end(), p->children.begin(), p->children.end());
        else if (p->kind != K::Empty) flat.push_back(p);
    }
    std::sort(flat.begin(), flat.end(), [](const Regex& a, const Regex& b) { return a->key < b->key; });
    flat.erase(std::unique(flat.begin(), flat.end(), [](const Regex& a, const Regex& b) { return a->key == b->key; }),
               flat.end());
    if (flat.empty()) return re_empty();
    if (flat.size() == 1) return flat.front();
    std::string key = "(";
    bool nullable = false;
    for (std::size_t i = 0; i < flat.size(); ++i) {
        if (i > 0) key += "+";
        key += flat[i]->key;
        nullable = nullable || flat[i]->nullable;
    }
    key += ")";
    return make(K::Alt, 0, std::move(flat), std::move(key), nullable);
}

Regex re_star(const Regex& r) {
    using K = RegexNode::Kind;
    if (r->kind == K::Empty || r->kind == K::Eps) return re_eps();
    if (r->kind == K::Star) return r;
    return make(K::Star, 0, {r}, r->key + "*", true);
}

Regex re_derivative(const Regex& r, std::uint32_t letter) {
    using K = RegexNode::Kind;
    switch (r->kind) {
        case K::Empty:
        case K::Eps: return re_empty();
        case K::Sym: return r->letter == letter ? re_eps() : re_empty();
        case K::Cat: {
            const Regex& l = r->children[0];
            const Regex& rest = r->children[1];
            Regex first = re_cat(re_derivative(l, letter), rest);
            if (!l->nullable) return first;
            return re_alt({first, re_derivative(rest, letter)});
        }
        case K::Alt: {
            std::vector<Regex> parts;
            for (const auto& c : r->children) parts.push_back(re_derivative(c, letter));
            return re_alt(std::move(parts));
        }
        case K::Star: return re_cat(re_derivative(r->children[0], letter), r);
    }
    return re_empty();
}

namespace {

class RegexParser {
public:
    RegexParser(std::string_view src, const std::vector<std::string>& alphabet) : src_(src), alpha_(alphabet) {
        for (const auto& l : alphabet)
            if (l.size() != 1 || std::string_view("+*() \t").find(l[0]) != std::string_view::npos)
                throw InputError("regex letters must be single non-operator characters, got '" + l + "'");
    }

    Regex parse() {
        Regex r = alt();
        skip();
        if (pos_ != src_.size()) throw SyntaxError("unexpected '" + std::string(1, src_[pos_]) + "'", pos_);
        return r;
    }

private:
    void skip() {
        while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t')) ++pos_;
    }
    bool starts(std::string_view word) {
        return src_.substr(pos_, word.size()) == word;
    }

    Regex alt() {
        std::vector<Regex> parts{cat()};
        skip();
        while (pos_ < src_.size() && src_[pos_] == '+') {
            ++pos_;
            parts.push_back(cat());
            skip();
        }
        return re_alt(std::move(parts));
    }

    bool at_factor_start() {
        skip();
        if (pos_ >= src_.size()) return false;
        char c = src_[pos_];
        return c != '+' && c != ')' && c != '*';
    }

    Regex cat() {
        if (!at_factor_start())
            throw SyntaxError("expected a regular expression", pos_);
        Regex r = star();
        while (at_factor_start()) r = re_cat(r, star());
        return r;
    }

    Regex star() {
        Regex r = atom();
        skip();
        while (pos_ < src_.size() && src_[pos_] == '*') {
            ++pos_;
            r = re_star(r);
            skip();
        }
        return r;
    }

    Regex atom() {
        skip();
        if (pos_ >= src_.size()) throw SyntaxError("unexpected end of regex", pos_);
        if (src_[pos_] == '(') {
            ++pos_;
            Regex r = alt();
            skip();
            if (pos_ >= src_.size() || src_[pos_] != ')') throw SyntaxError("expected ')'", pos_);
            ++pos_;
            return r;
        }
        for (auto [word, value] : {std::pair{std::string_view("empty"), re_empty()},
                                   std::pair{std::string_view("∅"), re_empty()},
                                   std::pair{std::string_view("eps"), re_eps()},
                                   std::pair{std::string_view("ε"), re_eps()}}) {
            if (starts(word)) {
                pos_ += word.size();
                return value;
            }
        }
        std::string letter(1, src_[pos_]);
        auto it = std::find(alpha_.begin(), alpha_.end(), letter);
        if (it == alpha_.end()) throw SyntaxError("letter '" + letter + "' not in alphabet", pos_);
        ++pos_;
        return re_sym(static_cast<std::uint32_t>(it - alpha_.begin()));
    }

    std::string_view src_;
    const std::vector<std::string>& alpha_;
    std::size_t pos_ = 0;
};

}  // namespace

Regex parse_regex(std::string_view text, const std::vector<std::string>& alphabet) {
    return RegexParser(text, alphabet).parse();
}

}  // namespace gkat
