#pragma once
// Independent sign oracle: states are raw creation-operator strings applied
// to the vacuum, canonicalized by explicit anticommutation swaps. No packed
// words, no popcount shortcuts; only the algebra
//   c_a c+_b + c+_b c_a = delta_ab,   c+_a c+_b + c+_b c+_a = 0.
// Modes are integers 2*(site-1) + (0 for up, 1 for down), ascending order is
// the canonical product.

#include <cstdlib>
#include <optional>
#include <utility>
#include <vector>

namespace oracle {

using ModeList = std::vector<int>;  // creation ops left to right

// Sort a creation string into ascending order, tracking the sign of the
// permutation; equal modes square a creation operator to zero.
inline std::optional<std::pair<int, ModeList>> canonicalize(ModeList ops) {
    int sign = 1;
    for (std::size_t i = 1; i < ops.size(); ++i) {
        std::size_t k = i;
        while (k > 0) {
            if (ops[k - 1] == ops[k]) return std::nullopt;
            if (ops[k - 1] < ops[k]) break;
            std::swap(ops[k - 1], ops[k]);
            sign = -sign;
            --k;
        }
    }
    return std::make_pair(sign, ops);
}

// c+_m |s> : prepend and re-canonicalize.
inline std::optional<std::pair<int, ModeList>> create(const ModeList& s, int m) {
    ModeList ops;
    ops.reserve(s.size() + 1);
    ops.push_back(m);
    ops.insert(ops.end(), s.begin(), s.end());
    return canonicalize(std::move(ops));
}

// c_m |s> : anticommute c_m to the right until it meets c+_m, else hit the
// vacuum and vanish.
inline std::optional<std::pair<int, ModeList>> annihilate(const ModeList& s, int m) {
    int sign = 1;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == m) {
            ModeList rest;
            rest.reserve(s.size() - 1);
            for (std::size_t k = 0; k < s.size(); ++k)
                if (k != i) rest.push_back(s[k]);
            return std::make_pair(sign, rest);
        }
        sign = -sign;
    }
    return std::nullopt;
}

struct StringOp {
    bool dagger;
    int mode;
};

// Apply a product of operators (rightmost factor acts first) to |s>.
inline std::optional<std::pair<int, ModeList>> apply_string(
    const std::vector<StringOp>& ops, ModeList s) {
    int sign = 1;
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        auto r = it->dagger ? create(s, it->mode) : annihilate(s, it->mode);
        if (!r) return std::nullopt;
        sign *= r->first;
        s = std::move(r->second);
    }
    return std::make_pair(sign, s);
}

}  // namespace oracle
