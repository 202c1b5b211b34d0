#include "gkat/dfa.hpp"

#include <algorithm>
#include <unordered_map>

#include "gkat/errors.hpp"
#include "gkat/regex.hpp"
#include "partition.hpp"

namespace gkat {

namespace {

constexpr std::size_t kRegexStateCap = 100'000;

}  // namespace

Dfa minimal_dfa(std::string_view regex, const std::vector<std::string>& alphabet) {
    if (alphabet.empty()) throw InputError("regex alphabet must be non-empty");
    Regex start = parse_regex(regex, alphabet);
    std::unordered_map<std::string, std::uint32_t> ids{{start->key, 0}};
    std::vector<Regex> states{start};
    Dfa dfa;
    dfa.alphabet = alphabet;
    for (std::size_t i = 0; i < states.size(); ++i) {
        Regex cur = states[i];
        dfa.accepting.push_back(cur->nullable);
        for (std::uint32_t a = 0; a < alphabet.size(); ++a) {
            Regex d = re_derivative(cur, a);
            auto [it, fresh] = ids.emplace(d->key, static_cast<std::uint32_t>(states.size()));
            if (fresh) {
                if (states.size() >= kRegexStateCap) throw ResourceError("regex derivative closure too large");
                states.push_back(d);
            }
            dfa.delta.push_back(it->second);
        }
    }
    dfa.num_states = states.size();
    return minimal_dfa(dfa);
}

Dfa minimal_dfa(const Dfa& dfa) {
    const std::size_t k = dfa.num_letters();
    // Reachable states in BFS order.
    std::vector<std::uint32_t> index(dfa.num_states, detail::kNoSuccessor);
    std::vector<std::uint32_t> order{dfa.initial};
    index[dfa.initial] = 0;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::uint32_t a = 0; a < k; ++a) {
            std::uint32_t y = dfa.next(order[i], a);
            if (index[y] == detail::kNoSuccessor) {
                index[y] = static_cast<std::uint32_t>(order.size());
                order.push_back(y);
            }
        }
    std::vector<std::uint32_t> init;
    for (auto q : order) init.push_back(dfa.accepting[q] ? 1 : 0);
    auto cls = detail::refine_partition(init, k, [&](std::uint32_t x, std::size_t a) {
        return index[dfa.next(order[x], static_cast<std::uint32_t>(a))];
    });
    std::size_t classes = 0;
    for (auto c : cls) classes = std::max<std::size_t>(classes, c + 1);
    // Number the quotient states in BFS order.
    std::vector<std::uint32_t> rep(classes, detail::kNoSuccessor);
    for (std::uint32_t x = 0; x < order.size(); ++x)
        if (rep[cls[x]] == detail::kNoSuccessor) rep[cls[x]] = x;
    std::vector<std::uint32_t> qindex(classes, detail::kNoSuccessor);
    std::vector<std::uint32_t> qorder{cls[0]};
    qindex[cls[0]] = 0;
    for (std::size_t i = 0; i < qorder.size(); ++i)
        for (std::uint32_t a = 0; a < k; ++a) {
            std::uint32_t y = cls[index[dfa.next(order[rep[qorder[i]]], a)]];
            if (qindex[y] == detail::kNoSuccessor) {
                qindex[y] = static_cast<std::uint32_t>(qorder.size());
                qorder.push_back(y);
            }
        }
    Dfa out;
    out.alphabet = dfa.alphabet;
    out.num_states = qorder.size();
    out.initial = 0;
    for (auto c : qorder) {
        std::uint32_t q = order[rep[c]];
        out.accepting.push_back(dfa.accepting[q]);
        for (std::uint32_t a = 0; a < k; ++a) out.delta.push_back(qindex[cls[index[dfa.next(q, a)]]]);
    }
    return out;
}

bool dfa_accepts_from(const Dfa& dfa, std::uint32_t q, const Word& w) {
    for (auto a : w) {
        if (a >= dfa.num_letters()) throw InputError("letter out of range");
        q = dfa.next(q, a);
    }
    return dfa.accepting[q];
}

bool dfa_accepts(const Dfa& dfa, const Word& w) { return dfa_accepts_from(dfa, dfa.initial, w); }

Word word_from_text(std::string_view text, const std::vector<std::string>& alphabet) {
    Word w;
    for (char c : text) {
        auto it = std::find(alphabet.begin(), alphabet.end(), std::string(1, c));
        if (it == alphabet.end()) throw InputError(std::string("letter '") + c + "' not in alphabet");
        w.push_back(static_cast<std::uint32_t>(it - alphabet.begin()));
    }
    return w;
}

std::string word_to_text(const Word& w, const std::vector<std::string>& alphabet) {
    std::string s;
    for (auto a : w) s += alphabet.at(a);
    return s.empty() ? std::string("ε") : s;
}

std::vector<Word> all_words(std::size_t num_letters, std::size_t n) {
    std::vector<Word> out{Word{}};
    std::size_t layer_start = 0;
    for (std::size_t len = 1; len <= n; ++len) {
        std::size_t layer_end = out.size();
        for (std::size_t i = layer_start; i < layer_end; ++i)
            for (std::uint32_t a = 0; a < num_letters; ++a) {
                Word w = out[i];
                w.push_back(a);
                out.push_back(std::move(w));
            }
        layer_start = layer_end;
    }
    return out;
}

}  // namespace gkat
