#pragma once

#include <vector>

#include "steinberg/errors.hpp"
#include "steinberg/gf.hpp"

namespace steinberg {

/*
 * A proper layer (W0, W1): nested subspaces W0 <= W1 of F_q^n with the
 * single pair (0, V) excluded.
 */
struct Layer {
    Subspace lower;
    Subspace upper;

    Layer() = default;
    Layer(Subspace lo, Subspace hi) : lower(std::move(lo)), upper(std::move(hi)) {
        if (!upper.contains(lower)) throw DimMismatch("layer requires nested subspaces");
        if (lower.is_zero() && upper.is_full()) throw DimMismatch("the pair (0, V) is not a proper layer");
    }

    int width() const { return upper.dim() - lower.dim(); }

    bool operator==(const Layer& o) const { return lower == o.lower && upper == o.upper; }
    bool operator<(const Layer& o) const {
        if (!(lower == o.lower)) return lower < o.lower;
        return upper < o.upper;
    }
};

// (W0, W1) <= (W0', W1') iff W0' <= W0 <= W1 <= W1': wider layers are larger.
inline bool layer_leq(const Layer& a, const Layer& b) {
    return a.lower.contains(b.lower) && b.upper.contains(a.upper);
}

struct LayerPoset {
    int q = 2;
    int n = 1;
    std::vector<Layer> elements;

    bool leq(std::size_t i, std::size_t j) const { return layer_leq(elements[i], elements[j]); }

    long size() const { return static_cast<long>(elements.size()); }
};

/* J(V): every proper layer of F_q^n, ordered by layer_leq. */
inline LayerPoset layer_poset(int q, int n) {
    if (n < 1) throw DimMismatch("layer poset needs n >= 1");
    LayerPoset p;
    p.q = q;
    p.n = n;
    auto subs = all_subspaces(q, n);
    for (const auto& w0 : subs)
        for (const auto& w1 : subs) {
            if (!w1.contains(w0)) continue;
            if (w0.is_zero() && w1.is_full()) continue;
            p.elements.emplace_back(w0, w1);
        }
    std::sort(p.elements.begin(), p.elements.end());
    return p;
}

// The open principal down-set { l : l < top } of a layer inside J(V).
inline LayerPoset layer_downset(const LayerPoset& all, const Layer& top) {
    LayerPoset p;
    p.q = all.q;
    p.n = all.n;
    for (const auto& l : all.elements)
        if (layer_leq(l, top) && !(l == top)) p.elements.push_back(l);
    return p;
}

}  // namespace steinberg
