#pragma once

#include <algorithm>
#include <memory>
#include <vector>

#include "steinberg/gf.hpp"
#include "steinberg/layer.hpp"
#include "steinberg/simplicial.hpp"

namespace steinberg {

/*
 * Complexes built from the vectors of V = F_q^n share one vertex table: all
 * q^n vectors in base-q encoding order, so the vertex id of v is v.encode()
 * and the zero vector is vertex 0. Punctured complexes simply reject any
 * simplex through vertex 0.
 */
inline std::vector<GFVector> vector_table(int q, int n) {
    long long total = 1;
    for (int i = 0; i < n; ++i) total *= q;
    std::vector<GFVector> out;
    out.reserve(total);
    for (long long code = 0; code < total; ++code) out.push_back(GFVector::decode(q, n, code));
    return out;
}

namespace detail {

struct VectorContext {
    int q, n;
    std::shared_ptr<const std::vector<GFVector>> table;

    int span_dim(const SimplexKey& ids) const {
        std::vector<GFVector> vs;
        vs.reserve(ids.size());
        for (int id : ids) vs.push_back((*table)[id]);
        return span(q, n, vs).dim();
    }

    Subspace span_of(const SimplexKey& ids) const {
        std::vector<GFVector> vs;
        vs.reserve(ids.size());
        for (int id : ids) vs.push_back((*table)[id]);
        return span(q, n, vs);
    }

    bool has_zero(const SimplexKey& ids) const { return !ids.empty() && ids.front() == 0; }
};

inline VectorContext vector_context(int q, int n) {
    return {q, n, std::make_shared<const std::vector<GFVector>>(vector_table(q, n))};
}

}  // namespace detail

// E(V): every nonempty finite subset of V, including the zero vector.
inline Complex<GFVector> complex_e(int q, int n) {
    auto ctx = detail::vector_context(q, n);
    Complex<GFVector> c;
    c.labels = *ctx.table;
    c.member = [](const SimplexKey&) { return true; };
    return c;
}

// Full complex on an arbitrary finite label set.
template <typename Label>
Complex<Label> full_complex(std::vector<Label> labels) {
    Complex<Label> c;
    c.labels = std::move(labels);
    c.member = [](const SimplexKey&) { return true; };
    return c;
}

// E*(V): subsets through 0 must span a proper subspace.
inline Complex<GFVector> estar_complex(int q, int n) {
    auto ctx = detail::vector_context(q, n);
    Complex<GFVector> c;
    c.labels = *ctx.table;
    c.member = [ctx, n](const SimplexKey& ids) { return !ctx.has_zero(ids) || ctx.span_dim(ids) < n; };
    return c;
}

// E(V - {0}): subsets of the nonzero vectors, on the shared table.
inline Complex<GFVector> complex_e_punctured(int q, int n) {
    auto ctx = detail::vector_context(q, n);
    Complex<GFVector> c;
    c.labels = *ctx.table;
    c.member = [ctx](const SimplexKey& ids) { return !ctx.has_zero(ids); };
    return c;
}

// E*(V - {0}): nonzero subsets spanning a proper subspace.
inline Complex<GFVector> estar_punctured(int q, int n) {
    auto ctx = detail::vector_context(q, n);
    Complex<GFVector> c;
    c.labels = *ctx.table;
    c.member = [ctx, n](const SimplexKey& ids) { return !ctx.has_zero(ids) && ctx.span_dim(ids) < n; };
    return c;
}

// E^{<n}(V): union of the full complexes of the hyperplanes.
inline Complex<GFVector> elowern_complex(int q, int n) {
    auto ctx = detail::vector_context(q, n);
    Complex<GFVector> c;
    c.labels = *ctx.table;
    c.member = [ctx, n](const SimplexKey& ids) { return ctx.span_dim(ids) <= n - 1; };
    return c;
}

// E**(V): E*(V) minus the 0-simplices whose span has dimension n - 1.
inline Complex<GFVector> estar_doublestar(int q, int n) {
    auto ctx = detail::vector_context(q, n);
    Complex<GFVector> c;
    c.labels = *ctx.table;
    c.member = [ctx, n](const SimplexKey& ids) { return !ctx.has_zero(ids) || ctx.span_dim(ids) <= n - 2; };
    return c;
}

// Intersection of two complexes over one shared vertex table.
template <typename Label>
Complex<Label> intersect_complexes(const Complex<Label>& a, const Complex<Label>& b) {
    if (a.nvertices() != b.nvertices()) throw DimMismatch("intersection needs a shared vertex table");
    Complex<Label> c;
    c.labels = a.labels;
    c.full_cap = a.full_cap;
    auto ma = a.member, mb = b.member;
    c.member = [ma, mb](const SimplexKey& ids) { return ma(ids) && mb(ids); };
    return c;
}

/*
 * Flag complexes on the table of all subspaces of F_q^n, sorted by
 * (dimension, basis). A simplex is a chain under inclusion; ascending vertex
 * ids have nondecreasing dimension, so checking consecutive containment
 * suffices.
 */
namespace detail {

struct SubspaceContext {
    int q, n;
    std::shared_ptr<const std::vector<Subspace>> table;

    bool is_flag(const SimplexKey& ids) const {
        for (std::size_t i = 0; i + 1 < ids.size(); ++i) {
            const Subspace& a = (*table)[ids[i]];
            const Subspace& b = (*table)[ids[i + 1]];
            if (a.dim() >= b.dim() || !b.contains(a)) return false;
        }
        return true;
    }
};

inline SubspaceContext subspace_context(int q, int n) {
    return {q, n, std::make_shared<const std::vector<Subspace>>(all_subspaces(q, n))};
}

}  // namespace detail

inline int subspace_id(const std::vector<Subspace>& table, const Subspace& s) {
    auto it = std::lower_bound(table.begin(), table.end(), s);
    if (it == table.end() || !(*it == s)) throw Error("subspace missing from table");
    return static_cast<int>(it - table.begin());
}

// T(V): flags of proper nonzero subspaces. Empty for n = 1.
inline Complex<Subspace> tits(int q, int n) {
    auto ctx = detail::subspace_context(q, n);
    Complex<Subspace> c;
    c.labels = *ctx.table;
    c.full_cap = 64;  // vertex labels are subspaces; flags stay short
    c.member = [ctx, n](const SimplexKey& ids) {
        for (int id : ids) {
            int d = (*ctx.table)[id].dim();
            if (d == 0 || d == n) return false;
        }
        return ctx.is_flag(ids);
    };
    return c;
}

// Suspension model: flags may reach 0 or V but not both.
inline Complex<Subspace> sigma_tits(int q, int n) {
    auto ctx = detail::subspace_context(q, n);
    int full_id = static_cast<int>(ctx.table->size()) - 1;
    Complex<Subspace> c;
    c.labels = *ctx.table;
    c.full_cap = 64;
    c.member = [ctx, full_id](const SimplexKey& ids) {
        bool has_zero = ids.front() == 0;
        bool has_full = ids.back() == full_id;
        if (has_zero && has_full) return false;
        return ctx.is_flag(ids);
    };
    return c;
}

// Union of the cones Ct(W) over the hyperplanes: every flag avoiding V.
inline Complex<Subspace> cone_union(int q, int n) {
    auto ctx = detail::subspace_context(q, n);
    int full_id = static_cast<int>(ctx.table->size()) - 1;
    Complex<Subspace> c;
    c.labels = *ctx.table;
    c.full_cap = 64;
    c.member = [ctx, full_id](const SimplexKey& ids) {
        if (ids.back() == full_id) return false;
        return ctx.is_flag(ids);
    };
    return c;
}

/*
 * J1: image of flags of AR'(sd E**) under (W0 < ... < Wp) -> (W0, Wp).
 * As a filter on J(V): keep (X, Y) unless Y != V and dim(Y/X) > n - 2.
 */
inline LayerPoset subposet_j1(int q, int n) {
    LayerPoset all = layer_poset(q, n);
    LayerPoset p;
    p.q = q;
    p.n = n;
    for (const auto& l : all.elements) {
        if (!l.upper.is_full() && l.width() > n - 2) continue;
        p.elements.push_back(l);
    }
    return p;
}

// J2: J(V) minus the layers (L, V) with L a line.
inline LayerPoset subposet_j2(int q, int n) {
    LayerPoset all = layer_poset(q, n);
    LayerPoset p;
    p.q = q;
    p.n = n;
    for (const auto& l : all.elements) {
        if (l.upper.is_full() && l.lower.dim() == 1) continue;
        p.elements.push_back(l);
    }
    return p;
}

inline Complex<Layer> layer_order_complex(const LayerPoset& p) {
    auto elems = std::make_shared<const std::vector<Layer>>(p.elements);
    return order_complex<Layer>(p.elements,
                                [elems](int i, int j) { return layer_leq((*elems)[i], (*elems)[j]); });
}

/*
 * X: the subdivision of E*(V) with the chains from a line up to V removed.
 * Shares the vertex table of sd E*(V).
 */
inline Complex<SimplexKey> model_x(int q, int n, const SdComplex& sd_estar) {
    auto ctx = detail::vector_context(q, n);
    auto labels = std::make_shared<const std::vector<SimplexKey>>(sd_estar.cx.labels);
    auto chain_member = sd_estar.cx.member;
    Complex<SimplexKey> c;
    c.labels = *labels;
    c.full_cap = sd_estar.cx.full_cap;
    c.member = [ctx, labels, chain_member, n](const SimplexKey& ids) {
        if (!chain_member(ids)) return false;
        return !(ctx.span_dim((*labels)[ids.front()]) == 1 && ctx.span_dim((*labels)[ids.back()]) == n);
    };
    return c;
}

/*
 * X_L: chains of nonzero subsets K with L <= <K>, the chains from exactly L
 * up to V removed. Same vertex table as sd E*(V).
 */
inline Complex<SimplexKey> model_xl(int q, int n, const Subspace& line, const SdComplex& sd_estar) {
    if (line.dim() != 1) throw BadLine("X_L needs a line");
    auto ctx = detail::vector_context(q, n);
    auto labels = std::make_shared<const std::vector<SimplexKey>>(sd_estar.cx.labels);
    auto chain_member = sd_estar.cx.member;
    Complex<SimplexKey> c;
    c.labels = *labels;
    c.full_cap = sd_estar.cx.full_cap;
    c.member = [ctx, labels, chain_member, line, n](const SimplexKey& ids) {
        for (int id : ids) {
            const SimplexKey& k = (*labels)[id];
            if (!k.empty() && k.front() == 0) return false;      // no zero vertex
            if (!ctx.span_of(k).contains(line)) return false;    // L <= <K>
        }
        if (!chain_member(ids)) return false;
        return !(ctx.span_of((*labels)[ids.front()]) == line && ctx.span_dim((*labels)[ids.back()]) == n);
    };
    return c;
}

/*
 * Vertex map of AR': a subdivision vertex (a subset X of V) goes to the
 * subspace <X> in the subspace table.
 */
inline VertexMap span_vertex_map(int q, int n, const SdComplex& sd, const std::vector<Subspace>& subspace_table) {
    auto ctx = detail::vector_context(q, n);
    VertexMap f;
    f.to.reserve(sd.cx.labels.size());
    for (const auto& base : sd.cx.labels) f.to.push_back(subspace_id(subspace_table, ctx.span_of(base)));
    return f;
}

/*
 * Vertex map of q_L: a subset K of V - {0} with L <= <K> goes to the image
 * subset in V/L, dropping the zero class unless nothing else remains.
 */
inline VertexMap quotient_vertex_map(int q, int n, const Subspace& line, const SdComplex& sd_dom,
                                     const SdComplex& sd_cod) {
    if (line.dim() != 1) throw BadLine("quotient map needs a line");
    QuotientMap qm = quotient_map(q, n, line);
    VertexMap f;
    f.to.assign(sd_dom.cx.labels.size(), -1);
    for (std::size_t i = 0; i < sd_dom.cx.labels.size(); ++i) {
        const SimplexKey& k = sd_dom.cx.labels[i];
        if (!k.empty() && k.front() == 0) continue;  // not an X_L vertex
        SimplexKey image;
        for (int id : k) {
            GFVector v = GFVector::decode(q, n, id);
            image.push_back(static_cast<int>(qm.apply(v).encode()));
        }
        std::sort(image.begin(), image.end());
        image.erase(std::unique(image.begin(), image.end()), image.end());
        if (image.size() > 1 && image.front() == 0) image.erase(image.begin());
        auto it = sd_cod.vertex_of.find(image);
        if (it == sd_cod.vertex_of.end()) continue;  // image not a simplex of E*(V/L)
        f.to[i] = it->second;
    }
    return f;
}

/*
 * Matrix of the map induced on homology by a vertex map, as columns of
 * target coordinates of the pushed cycle basis.
 */
inline IntMatrix induced_homology_matrix(const HomologyGroup& dom, const HomologyGroup& cod, const VertexMap& f) {
    IntMatrix m(static_cast<int>(cod.rank + cod.torsion.size()), static_cast<int>(dom.rank));
    for (long j = 0; j < dom.rank; ++j) {
        Chain image = pushforward_unchecked(f, dom.cycle_basis[j]);
        auto coords = cod.coordinates(image);
        for (std::size_t i = 0; i < coords.size(); ++i) m.set(static_cast<int>(i), static_cast<int>(j), coords[i]);
    }
    return m;
}

// True when the induced map is an isomorphism of finitely generated groups
// with free parts only: equal ranks, no torsion, determinant a unit.
inline bool induced_map_is_iso(const HomologyGroup& dom, const HomologyGroup& cod, const VertexMap& f) {
    if (dom.rank != cod.rank) return false;
    if (!dom.torsion.empty() || !cod.torsion.empty()) return false;
    IntMatrix m = induced_homology_matrix(dom, cod, f);
    SnfResult snf = smith_normal_form(m);
    if (snf.rank != dom.rank) return false;
    for (int i = 0; i < snf.rank; ++i)
        if (snf.d.get(i, i) != 1) return false;
    return true;
}

}  // namespace steinberg
