#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "steinberg/errors.hpp"
#include "steinberg/rng.hpp"

namespace steinberg {

inline bool is_prime(int q) {
    if (q < 2) return false;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

inline int mod_reduce(long long x, int q) {
    long long r = x % q;
    return static_cast<int>(r < 0 ? r + q : r);
}

inline int mod_inverse(int a, int q) {
    a = mod_reduce(a, q);
    if (a == 0) throw NotInvertible("zero has no inverse");
    // Fermat; q is a small prime.
    int result = 1, base = a, e = q - 2;
    while (e > 0) {
        if (e & 1) result = mod_reduce(static_cast<long long>(result) * base, q);
        base = mod_reduce(static_cast<long long>(base) * base, q);
        e >>= 1;
    }
    return result;
}

/* Vector over the prime field F_q, all coordinates reduced mod q. */
struct GFVector {
    int q = 2;
    std::vector<int> c;

    GFVector() = default;
    GFVector(int q_, std::vector<int> coords) : q(q_), c(std::move(coords)) {
        for (auto& x : c) x = mod_reduce(x, q);
    }

    int dim() const { return static_cast<int>(c.size()); }

    bool is_zero() const {
        return std::all_of(c.begin(), c.end(), [](int x) { return x == 0; });
    }

    GFVector operator+(const GFVector& o) const {
        check_compatible(o);
        GFVector out = *this;
        for (int i = 0; i < dim(); ++i) out.c[i] = mod_reduce(out.c[i] + o.c[i], q);
        return out;
    }

    GFVector operator-(const GFVector& o) const {
        check_compatible(o);
        GFVector out = *this;
        for (int i = 0; i < dim(); ++i) out.c[i] = mod_reduce(out.c[i] - o.c[i], q);
        return out;
    }

    GFVector scaled(int a) const {
        GFVector out = *this;
        for (auto& x : out.c) x = mod_reduce(static_cast<long long>(x) * a, q);
        return out;
    }

    bool operator==(const GFVector& o) const { return q == o.q && c == o.c; }
    bool operator<(const GFVector& o) const { return c < o.c; }

    // Dense integer encoding, base q with the leading coordinate most
    // significant; doubles as a canonical vertex id.
    long long encode() const {
        long long v = 0;
        for (int x : c) v = v * q + x;
        return v;
    }

    static GFVector decode(int q, int n, long long code) {
        std::vector<int> c(n, 0);
        for (int i = n - 1; i >= 0; --i) {
            c[i] = static_cast<int>(code % q);
            code /= q;
        }
        return GFVector(q, std::move(c));
    }

  private:
    void check_compatible(const GFVector& o) const {
        if (q != o.q || c.size() != o.c.size()) throw DimMismatch("vector field or length mismatch");
    }
};

// Reduced row echelon form over F_q; returns pivot columns. Zero rows are
// removed so the result is the canonical basis of the row space.
inline std::vector<int> rref_in_place(std::vector<std::vector<int>>& rows, int q) {
    std::vector<int> pivots;
    if (rows.empty()) return pivots;
    int ncols = static_cast<int>(rows[0].size());
    int r = 0;
    for (int col = 0; col < ncols && r < static_cast<int>(rows.size()); ++col) {
        int sel = -1;
        for (int i = r; i < static_cast<int>(rows.size()); ++i)
            if (rows[i][col] % q != 0) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(rows[r], rows[sel]);
        int inv = mod_inverse(rows[r][col], q);
        for (auto& x : rows[r]) x = mod_reduce(static_cast<long long>(x) * inv, q);
        for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
            if (i == r || rows[i][col] % q == 0) continue;
            int f = mod_reduce(rows[i][col], q);
            for (int j = 0; j < ncols; ++j) rows[i][j] = mod_reduce(rows[i][j] - static_cast<long long>(f) * rows[r][j], q);
        }
        pivots.push_back(col);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

/*
 * Subspace of F_q^n in canonical form: the basis is the reduced row echelon
 * matrix of any spanning set, so equal subspaces compare equal entrywise.
 */
struct Subspace {
    int q = 2;
    int n = 0;
    std::vector<std::vector<int>> basis;  // RREF rows
    std::vector<int> pivots;

    Subspace() = default;

    static Subspace zero(int q, int n) {
        Subspace s;
        s.q = q;
        s.n = n;
        return s;
    }

    static Subspace full(int q, int n) {
        Subspace s;
        s.q = q;
        s.n = n;
        s.basis.assign(n, std::vector<int>(n, 0));
        for (int i = 0; i < n; ++i) {
            s.basis[i][i] = 1;
            s.pivots.push_back(i);
        }
        return s;
    }

    int dim() const { return static_cast<int>(basis.size()); }

    bool is_zero() const { return basis.empty(); }
    bool is_full() const { return dim() == n; }

    GFVector basis_vector(int i) const { return GFVector(q, basis[i]); }

    // Residue of v after eliminating against the RREF rows.
    std::vector<int> residue(const GFVector& v) const {
        std::vector<int> x = v.c;
        for (int i = 0; i < dim(); ++i) {
            int f = x[pivots[i]];
            if (f == 0) continue;
            for (int j = 0; j < n; ++j) x[j] = mod_reduce(x[j] - static_cast<long long>(f) * basis[i][j], q);
        }
        return x;
    }

    bool contains(const GFVector& v) const {
        if (v.q != q || v.dim() != n) throw DimMismatch("vector not over the ambient space");
        auto x = residue(v);
        return std::all_of(x.begin(), x.end(), [](int t) { return t == 0; });
    }

    bool contains(const Subspace& other) const {
        if (other.q != q || other.n != n) throw DimMismatch("subspace ambient mismatch");
        for (int i = 0; i < other.dim(); ++i)
            if (!contains(other.basis_vector(i))) return false;
        return true;
    }

    // Coordinates of v in the RREF basis; v must lie in the subspace.
    std::vector<int> coordinates(const GFVector& v) const {
        if (!contains(v)) throw DimMismatch("vector outside subspace");
        std::vector<int> coords(dim());
        for (int i = 0; i < dim(); ++i) coords[i] = v.c[pivots[i]];
        return coords;
    }

    GFVector from_coordinates(const std::vector<int>& coords) const {
        if (static_cast<int>(coords.size()) != dim()) throw DimMismatch("coordinate length mismatch");
        GFVector v(q, std::vector<int>(n, 0));
        for (int i = 0; i < dim(); ++i)
            for (int j = 0; j < n; ++j) v.c[j] = mod_reduce(v.c[j] + static_cast<long long>(coords[i]) * basis[i][j], q);
        return v;
    }

    // Every vector of the subspace, in coordinate-enumeration order.
    std::vector<GFVector> elements() const {
        long long total = 1;
        for (int i = 0; i < dim(); ++i) total *= q;
        std::vector<GFVector> out;
        out.reserve(total);
        for (long long code = 0; code < total; ++code) {
            std::vector<int> coords(dim());
            long long t = code;
            for (int i = dim() - 1; i >= 0; --i) {
                coords[i] = static_cast<int>(t % q);
                t /= q;
            }
            out.push_back(from_coordinates(coords));
        }
        return out;
    }

    bool operator==(const Subspace& o) const { return q == o.q && n == o.n && basis == o.basis; }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    // Deterministic total order: dimension first, then flattened basis.
    bool operator<(const Subspace& o) const {
        if (dim() != o.dim()) return dim() < o.dim();
        return basis < o.basis;
    }
};

inline Subspace span(int q, int n, const std::vector<GFVector>& vectors) {
    std::vector<std::vector<int>> rows;
    rows.reserve(vectors.size());
    for (const auto& v : vectors) {
        if (v.q != q || v.dim() != n) throw DimMismatch("span input over wrong space");
        rows.push_back(v.c);
    }
    Subspace s;
    s.q = q;
    s.n = n;
    s.pivots = rref_in_place(rows, q);
    s.basis = std::move(rows);
    return s;
}

inline Subspace span_line(const GFVector& v) { return span(v.q, v.dim(), {v}); }

// Sum of two subspaces of the same ambient space.
inline Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    std::vector<GFVector> gens;
    for (int i = 0; i < a.dim(); ++i) gens.push_back(a.basis_vector(i));
    for (int i = 0; i < b.dim(); ++i) gens.push_back(b.basis_vector(i));
    return span(a.q, a.n, gens);
}

// Gaussian binomial [n choose k]_q as a plain count.
inline long long gaussian_binomial(int q, int n, int k) {
    if (k < 0 || k > n) return 0;
    // product formula evaluated exactly; values stay small at desk scale
    long long num = 1, den = 1;
    auto qpow = [&](int e) {
        long long p = 1;
        for (int i = 0; i < e; ++i) p *= q;
        return p;
    };
    for (int i = 0; i < k; ++i) {
        num *= qpow(n - i) - 1;
        den *= qpow(i + 1) - 1;
    }
    return num / den;
}

/*
 * All k-dimensional subspaces of F_q^n, each exactly once, enumerated by
 * the RREF normal form: choose pivot columns, then sweep the free entries.
 */
inline std::vector<Subspace> enumerate_subspaces(int q, int n, int k) {
    if (k < 0 || k > n) throw DimMismatch("subspace dimension out of range");
    std::vector<Subspace> out;
    if (k == 0) {
        out.push_back(Subspace::zero(q, n));
        return out;
    }
    std::vector<int> pivots(k);
    // iterate over strictly increasing pivot tuples
    for (int i = 0; i < k; ++i) pivots[i] = i;
    for (;;) {
        // positions free to vary: to the right of each pivot, excluding
        // later pivot columns
        std::vector<std::pair<int, int>> free_pos;
        for (int i = 0; i < k; ++i)
            for (int j = pivots[i] + 1; j < n; ++j)
                if (std::find(pivots.begin(), pivots.end(), j) == pivots.end()) free_pos.push_back({i, j});
        long long count = 1;
        for (std::size_t i = 0; i < free_pos.size(); ++i) count *= q;
        for (long long code = 0; code < count; ++code) {
            std::vector<std::vector<int>> rows(k, std::vector<int>(n, 0));
            for (int i = 0; i < k; ++i) rows[i][pivots[i]] = 1;
            long long t = code;
            for (auto [i, j] : free_pos) {
                rows[i][j] = static_cast<int>(t % q);
                t /= q;
            }
            Subspace s;
            s.q = q;
            s.n = n;
            s.basis = std::move(rows);
            s.pivots = pivots;
            out.push_back(std::move(s));
        }
        // next pivot combination
        int i = k - 1;
        while (i >= 0 && pivots[i] == n - k + i) --i;
        if (i < 0) break;
        ++pivots[i];
        for (int j = i + 1; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Subspace> all_subspaces(int q, int n) {
    std::vector<Subspace> out;
    for (int k = 0; k <= n; ++k) {
        auto sub = enumerate_subspaces(q, n, k);
        out.insert(out.end(), sub.begin(), sub.end());
    }
    return out;
}

/*
 * The quotient V -> V/L for a line L, realized on coordinates: normalize the
 * generator of L to a leading 1 at its pivot position j, subtract the
 * matching multiple, and delete coordinate j. Kernel is exactly L, and
 * inserting 0 back at position j is a section.
 */
struct QuotientMap {
    int q = 2;
    int n = 0;
    GFVector generator;  // normalized, leading 1 at `pivot`
    int pivot = 0;

    GFVector apply(const GFVector& v) const {
        if (v.q != q || v.dim() != n) throw DimMismatch("quotient input over wrong space");
        std::vector<int> out;
        out.reserve(n - 1);
        int f = v.c[pivot];
        for (int j = 0; j < n; ++j) {
            if (j == pivot) continue;
            out.push_back(mod_reduce(v.c[j] - static_cast<long long>(f) * generator.c[j], q));
        }
        return GFVector(q, std::move(out));
    }

    GFVector lift(const GFVector& w) const {
        if (w.q != q || w.dim() != n - 1) throw DimMismatch("quotient lift input over wrong space");
        std::vector<int> out(n, 0);
        for (int j = 0, k = 0; j < n; ++j)
            if (j != pivot) out[j] = w.c[k++];
        return GFVector(q, out);
    }
};

inline QuotientMap quotient_map(int q, int n, const Subspace& line) {
    if (line.q != q || line.n != n || line.dim() != 1) throw BadLine("quotient needs a one-dimensional subspace");
    QuotientMap m;
    m.q = q;
    m.n = n;
    m.generator = line.basis_vector(0);
    m.pivot = line.pivots[0];
    return m;
}

inline GFVector random_vector(int q, int n, SplitMix64& rng) {
    std::vector<int> c(n);
    for (auto& x : c) x = static_cast<int>(rng.below(q));
    return GFVector(q, std::move(c));
}

inline GFVector random_nonzero_vector(int q, int n, SplitMix64& rng) {
    for (;;) {
        GFVector v = random_vector(q, n, rng);
        if (!v.is_zero()) return v;
    }
}

}  // namespace steinberg
