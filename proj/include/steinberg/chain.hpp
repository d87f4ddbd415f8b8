#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "steinberg/intmatrix.hpp"

namespace steinberg {

// A simplex is a strictly increasing list of vertex ids; the increasing
// order is the canonical orientation.
using SimplexKey = std::vector<int>;

// Formal integer combination of simplices, all of one dimension unless a
// caller mixes degrees on purpose. Zero coefficients are never stored.
using Chain = std::map<SimplexKey, Int>;

inline void chain_add_term(Chain& z, const SimplexKey& s, const Int& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = z.try_emplace(s, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) z.erase(it);
    }
}

inline Chain chain_add(const Chain& a, const Chain& b) {
    Chain out = a;
    for (const auto& [s, c] : b) chain_add_term(out, s, c);
    return out;
}

inline Chain chain_scale(const Chain& a, const Int& k) {
    Chain out;
    if (k == 0) return out;
    for (const auto& [s, c] : a) out[s] = c * k;
    return out;
}

inline Chain chain_negate(const Chain& a) { return chain_scale(a, Int(-1)); }

// Sign of the permutation sorting `tuple` ascending; 0 if entries repeat.
inline int sort_sign(std::vector<int>& tuple) {
    int sign = 1;
    for (std::size_t i = 0; i < tuple.size(); ++i)
        for (std::size_t j = i + 1; j < tuple.size(); ++j) {
            if (tuple[i] == tuple[j]) return 0;
            if (tuple[i] > tuple[j]) sign = -sign;
        }
    std::sort(tuple.begin(), tuple.end());
    return sign;
}

// The chain of an ordered vertex tuple: +/- its sorted simplex, or zero when
// the tuple is degenerate.
inline Chain tuple_chain(std::vector<int> tuple, const Int& coeff = Int(1)) {
    Chain out;
    int sign = sort_sign(tuple);
    if (sign != 0 && coeff != 0) out[tuple] = coeff * sign;
    return out;
}

// Alternating face sum of an ordered tuple, degenerate faces collapsing to
// zero. For a strictly increasing tuple this is the simplicial boundary.
inline Chain tuple_boundary(const std::vector<int>& tuple) {
    Chain out;
    int sign = 1;
    for (std::size_t i = 0; i < tuple.size(); ++i, sign = -sign) {
        std::vector<int> face;
        face.reserve(tuple.size() - 1);
        for (std::size_t j = 0; j < tuple.size(); ++j)
            if (j != i) face.push_back(tuple[j]);
        for (auto& [s, c] : tuple_chain(std::move(face), Int(sign))) chain_add_term(out, s, c);
    }
    return out;
}

inline Chain chain_boundary(const Chain& z) {
    Chain out;
    for (const auto& [s, c] : z)
        for (const auto& [f, fc] : tuple_boundary(s)) chain_add_term(out, f, fc * c);
    return out;
}

}  // namespace steinberg
