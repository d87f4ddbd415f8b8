#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "steinberg/chain.hpp"
#include "steinberg/errors.hpp"
#include "steinberg/homology.hpp"

namespace steinberg {

/*
 * Abstract simplicial complex over a fixed vertex id table. Simplices are
 * recognized by a membership predicate on ascending id sets, so exponentially
 * large complexes are fine as long as they are only enumerated through a
 * degree window. Several complexes may share one vertex table, which is what
 * makes union/intersection decompositions and inclusion maps id-stable.
 */
template <typename Label>
struct Complex {
    std::vector<Label> labels;
    std::function<bool(const SimplexKey&)> member;
    int full_cap = 12;  // largest vertex table allowed to materialize fully

    int nvertices() const { return static_cast<int>(labels.size()); }

    bool is_simplex(const SimplexKey& s) const { return !s.empty() && member(s); }

    // All simplices of dimension <= maxdim, grouped by dimension.
    std::vector<std::vector<SimplexKey>> simplices_up_to(int maxdim) const {
        std::vector<std::vector<SimplexKey>> out;
        std::vector<SimplexKey> current;
        for (int v = 0; v < nvertices(); ++v) {
            SimplexKey s{v};
            if (member(s)) current.push_back(std::move(s));
        }
        out.push_back(current);
        for (int d = 1; d <= maxdim; ++d) {
            std::vector<SimplexKey> next;
            for (const auto& s : out.back()) {
                for (int v = s.back() + 1; v < nvertices(); ++v) {
                    SimplexKey t = s;
                    t.push_back(v);
                    if (member(t)) next.push_back(std::move(t));
                }
            }
            out.push_back(std::move(next));
        }
        return out;
    }

    // Every simplex, ordered by (dimension, lexicographic ids). Guarded by
    // the cap: full materialization is exponential in the vertex count.
    std::vector<SimplexKey> all_simplices() const {
        if (nvertices() > full_cap)
            throw CapExceeded("full materialization beyond the vertex cap; use a degree window");
        auto by_dim = simplices_up_to(nvertices() - 1);
        std::vector<SimplexKey> out;
        for (auto& level : by_dim)
            for (auto& s : level) out.push_back(std::move(s));
        return out;
    }
};

/*
 * Chain complex of a simplicial complex through degrees [0, top]. The
 * boundary is the alternating face sum in ascending-id orientation.
 */
template <typename Label>
std::shared_ptr<const ChainComplex> chains(const Complex<Label>& c, int top) {
    return std::make_shared<const ChainComplex>(c.simplices_up_to(top));
}

/*
 * First barycentric subdivision: vertices are the simplices of the base,
 * simplices are chains under strict inclusion. Vertex ids follow the
 * (dimension, lex) order of the base simplices, so inclusion chains are
 * always ascending in id order.
 */
struct SdComplex {
    Complex<SimplexKey> cx;                // labels are base simplices
    std::map<SimplexKey, int> vertex_of;   // base simplex -> sd vertex id

    int id_of(const SimplexKey& base_simplex) const {
        auto it = vertex_of.find(base_simplex);
        if (it == vertex_of.end()) throw Error("simplex is not a subdivision vertex");
        return it->second;
    }
};

inline bool is_strict_subset(const SimplexKey& a, const SimplexKey& b) {
    if (a.size() >= b.size()) return false;
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline bool is_inclusion_chain(const std::vector<SimplexKey>& labels, const SimplexKey& ids) {
    for (std::size_t i = 0; i + 1 < ids.size(); ++i)
        if (!is_strict_subset(labels[ids[i]], labels[ids[i + 1]])) return false;
    return true;
}

template <typename Label>
SdComplex barycentric_sd(const Complex<Label>& base) {
    SdComplex sd;
    sd.cx.labels = base.all_simplices();
    sd.cx.full_cap = base.full_cap;
    for (std::size_t i = 0; i < sd.cx.labels.size(); ++i) sd.vertex_of[sd.cx.labels[i]] = static_cast<int>(i);
    auto labels = std::make_shared<std::vector<SimplexKey>>(sd.cx.labels);
    sd.cx.member = [labels](const SimplexKey& ids) { return is_inclusion_chain(*labels, ids); };
    return sd;
}

/*
 * Order complex B(P): simplices are the finite chains of the poset. The
 * relation is supplied as a predicate on element indices.
 */
template <typename Label>
Complex<Label> order_complex(std::vector<Label> elements, std::function<bool(int, int)> leq) {
    Complex<Label> c;
    c.labels = std::move(elements);
    auto rel = std::make_shared<std::function<bool(int, int)>>(std::move(leq));
    c.member = [rel](const SimplexKey& ids) {
        for (std::size_t i = 0; i < ids.size(); ++i)
            for (std::size_t j = i + 1; j < ids.size(); ++j)
                if (!(*rel)(ids[i], ids[j]) && !(*rel)(ids[j], ids[i])) return false;
        return true;
    };
    return c;
}

/*
 * Simplicial map given by a total vertex assignment. Pushforward collapses
 * degenerate images to zero and carries the sign of the sorting permutation.
 */
struct VertexMap {
    std::vector<int> to;  // domain id -> codomain id

    int operator()(int v) const { return to[v]; }
};

template <typename LC>
Chain pushforward(const VertexMap& f, const Chain& z, const Complex<LC>& codomain) {
    Chain out;
    for (const auto& [s, coeff] : z) {
        std::vector<int> image;
        image.reserve(s.size());
        for (int v : s) image.push_back(f.to[v]);
        int sign = sort_sign(image);
        if (sign == 0) continue;
        if (!codomain.member(image)) throw NotASimplicialMap("image of a simplex is not a simplex");
        chain_add_term(out, image, coeff * sign);
    }
    return out;
}

// Pushforward without a codomain check, for maps into predicate complexes
// whose membership is already guaranteed by construction.
inline Chain pushforward_unchecked(const VertexMap& f, const Chain& z) {
    Chain out;
    for (const auto& [s, coeff] : z) {
        std::vector<int> image;
        image.reserve(s.size());
        for (int v : s) image.push_back(f.to[v]);
        int sign = sort_sign(image);
        if (sign == 0) continue;
        chain_add_term(out, image, coeff * sign);
    }
    return out;
}

/*
 * Mayer-Vietoris split of a chain of D = B u C: each simplex goes to B when
 * B contains it, otherwise to C. Deterministic, so lifts are reproducible.
 */
template <typename LB, typename LC>
std::pair<Chain, Chain> mv_decompose(const Complex<LB>& b, const Complex<LC>& c, const Chain& z) {
    Chain in_b, in_c;
    for (const auto& [s, coeff] : z) {
        if (b.member(s))
            in_b[s] = coeff;
        else if (c.member(s))
            in_c[s] = coeff;
        else
            throw NotACover("simplex lies in neither cover member");
    }
    return {in_b, in_c};
}

/*
 * Barycentric subdivision chain map C_*(K) -> C_*(sd K). A p-simplex maps to
 * the signed sum of the p-chains of its faces, one per vertex ordering.
 */
inline Chain subdivide_chain(const Chain& z, const SdComplex& sd) {
    Chain out;
    for (const auto& [s, coeff] : z) {
        std::vector<int> perm(s.size());
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
        std::vector<int> sorted = perm;
        do {
            // parity of this ordering
            std::vector<int> p = perm;
            int sign = sort_sign(p);
            SimplexKey prefix, ids;
            prefix.reserve(s.size());
            ids.reserve(s.size());
            bool ok = true;
            for (std::size_t i = 0; i < perm.size(); ++i) {
                prefix.push_back(s[perm[i]]);
                std::sort(prefix.begin(), prefix.end());
                auto it = sd.vertex_of.find(prefix);
                if (it == sd.vertex_of.end()) {
                    ok = false;
                    break;
                }
                ids.push_back(it->second);
            }
            if (!ok) throw Error("subdivision vertex missing; base simplex not materialized");
            chain_add_term(out, ids, coeff * sign);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return out;
}

// Euler characteristic of the materialized window (alternating simplex count).
inline long euler_characteristic(const ChainComplex& c) {
    long chi = 0;
    for (int d = 0; d <= c.top_degree(); ++d) chi += (d % 2 == 0 ? 1 : -1) * c.basis_size(d);
    return chi;
}

}  // namespace steinberg
