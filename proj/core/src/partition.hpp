#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <vector>

namespace gkat::detail {

inline constexpr std::uint32_t kNoSuccessor = std::numeric_limits<std::uint32_t>::max();

// Renumbers arbitrary keys by order of first occurrence.
template <class Key>
std::vector<std::uint32_t> number_by_first_occurrence(const std::vector<Key>& keys) {
    std::map<Key, std::uint32_t> ids;
    std::vector<std::uint32_t> out(keys.size());
    for (std::size_t i = 0; i < keys.size(); ++i) {
        auto [it, fresh] = ids.emplace(keys[i], static_cast<std::uint32_t>(ids.size()));
        out[i] = it->second;
    }
    return out;
}

// Coarsest partition refining `initial` that is stable under the k
// successor functions; succ(x, a) may return kNoSuccessor. Classes are
// numbered by their least member.
template <class Succ>
std::vector<std::uint32_t> refine_partition(const std::vector<std::uint32_t>& initial, std::size_t k,
                                            Succ succ) {
    const std::size_t n = initial.size();
    std::vector<std::uint32_t> cls = number_by_first_occurrence(initial);
    std::size_t count = 0;
    for (auto c : cls) count = std::max<std::size_t>(count, c + 1);
    while (true) {
        std::vector<std::vector<std::uint32_t>> sig(n);
        for (std::size_t x = 0; x < n; ++x) {
            sig[x].reserve(k + 1);
            sig[x].push_back(cls[x]);
            for (std::size_t a = 0; a < k; ++a) {
                std::uint32_t y = succ(static_cast<std::uint32_t>(x), a);
                sig[x].push_back(y == kNoSuccessor ? kNoSuccessor : cls[y]);
            }
        }
        std::vector<std::uint32_t> next = number_by_first_occurrence(sig);
        std::size_t next_count = 0;
        for (auto c : next) next_count = std::max<std::size_t>(next_count, c + 1);
        cls = std::move(next);
        if (next_count == count) return cls;
        count = next_count;
    }
}

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) {
        for (std::size_t i = 0; i < n; ++i) parent_[i] = i;
    }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent_[std::max(a, b)] = std::min(a, b);
        return true;
    }

private:
    std::vector<std::size_t> parent_;
};

}  // namespace gkat::detail
