#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "steinberg/chain.hpp"
#include "steinberg/errors.hpp"
#include "steinberg/snf.hpp"

namespace steinberg {

/*
 * Chain complex of simplices in a degree window [0, top]. Bases are ordered
 * lists of simplices per degree; boundary matrices are the alternating face
 * sums in those bases. d . d = 0 is asserted at construction.
 */
class ChainComplex {
  public:
    ChainComplex() = default;

    ChainComplex(std::vector<std::vector<SimplexKey>> bases) : bases_(std::move(bases)) {
        index_.resize(bases_.size());
        for (std::size_t d = 0; d < bases_.size(); ++d)
            for (std::size_t i = 0; i < bases_[d].size(); ++i) index_[d][bases_[d][i]] = static_cast<int>(i);
        boundaries_.resize(bases_.size());
        if (!bases_.empty()) boundaries_[0] = IntMatrix(0, static_cast<int>(bases_[0].size()));
        for (std::size_t d = 1; d < bases_.size(); ++d) {
            IntMatrix mat(static_cast<int>(bases_[d - 1].size()), static_cast<int>(bases_[d].size()));
            for (std::size_t j = 0; j < bases_[d].size(); ++j) {
                for (const auto& [face, coeff] : tuple_boundary(bases_[d][j])) {
                    auto it = index_[d - 1].find(face);
                    if (it == index_[d - 1].end())
                        throw Error("boundary face missing from complex basis; complex not downward closed");
                    mat.set(it->second, static_cast<int>(j), coeff);
                }
            }
            boundaries_[d] = std::move(mat);
        }
        for (std::size_t d = 2; d < bases_.size(); ++d)
            if (!boundaries_[d - 1].multiply(boundaries_[d]).is_zero())
                throw Error("boundary of boundary is nonzero");
    }

    int top_degree() const { return static_cast<int>(bases_.size()) - 1; }

    bool has_degree(int d) const { return d >= 0 && d <= top_degree(); }

    const std::vector<SimplexKey>& basis(int d) const {
        require_degree(d);
        return bases_[d];
    }

    long basis_size(int d) const { return has_degree(d) ? static_cast<long>(bases_[d].size()) : 0; }

    // Boundary matrix C_d -> C_{d-1}; degree 0 gives the zero map to 0.
    const IntMatrix& boundary(int d) const {
        require_degree(d);
        return boundaries_[d];
    }

    // Augmentation row: every vertex maps to 1.
    IntMatrix augmentation() const {
        require_degree(0);
        IntMatrix a(1, static_cast<int>(bases_[0].size()));
        for (int j = 0; j < a.cols(); ++j) a.set(0, j, 1);
        return a;
    }

    std::vector<Int> vector_of(const Chain& z, int d) const {
        require_degree(d);
        std::vector<Int> v(bases_[d].size(), Int(0));
        for (const auto& [s, c] : z) {
            auto it = index_[d].find(s);
            if (it == index_[d].end()) throw Error("chain supported outside the complex");
            v[it->second] = c;
        }
        return v;
    }

    Chain chain_of(const std::vector<Int>& v, int d) const {
        require_degree(d);
        if (v.size() != bases_[d].size()) throw DimMismatch("coefficient vector length mismatch");
        Chain z;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0) z[bases_[d][i]] = v[i];
        return z;
    }

    bool is_cycle(const Chain& z, int d) const {
        if (z.empty()) return true;
        auto v = vector_of(z, d);
        if (d == 0) return true;
        for (const auto& y : boundaries_[d].apply(v))
            if (y != 0) return false;
        return true;
    }

  private:
    void require_degree(int d) const {
        if (!has_degree(d)) throw WindowError("degree outside the complex window");
    }

    std::vector<std::vector<SimplexKey>> bases_;
    std::vector<std::map<SimplexKey, int>> index_;
    std::vector<IntMatrix> boundaries_;
};

/*
 * Integral homology in one degree: rank, invariant factors, a cycle basis
 * for the free part, and enough of the normal-form data to coordinatize any
 * cycle. Coordinates are laid out free part first, then one residue per
 * torsion factor; coordinates of cycle_basis[i] form the i-th unit vector.
 */
class HomologyGroup {
  public:
    int degree = 0;
    long rank = 0;
    std::vector<Int> torsion;          // invariant factors > 1
    std::vector<Chain> cycle_basis;    // free part representatives
    std::vector<Chain> torsion_basis;  // torsion part representatives

    HomologyGroup() = default;

    std::vector<Int> coordinates(const Chain& z) const {
        std::vector<Int> v = complex_->vector_of(z, degree);
        std::vector<Int> y = wd_.apply(v);
        for (int i = 0; i < rank_d_; ++i)
            if (y[i] != 0) throw NotACycle("chain is not a cycle");
        std::vector<Int> tail(y.begin() + rank_d_, y.end());
        std::vector<Int> c = u2inv_.apply(tail);
        std::vector<Int> out;
        out.reserve(rank + torsion.size());
        for (std::size_t j = rank2_; j < c.size(); ++j) out.push_back(c[j]);
        for (int j = 0; j < rank2_; ++j) {
            const Int& f = diag2_[j];
            if (f > 1) {
                Int r = c[j] % f;
                if (r < 0) r += f;
                out.push_back(r);
            }
        }
        return out;
    }

    bool is_zero_class(const Chain& z) const {
        for (const auto& c : coordinates(z))
            if (c != 0) return false;
        return true;
    }

    const ChainComplex& complex() const { return *complex_; }

    friend HomologyGroup homology(std::shared_ptr<const ChainComplex> cx, int degree, bool reduced);

  private:
    std::shared_ptr<const ChainComplex> complex_;
    IntMatrix wd_;      // W of the SNF of the d-th boundary (or augmentation)
    int rank_d_ = 0;    // rank of that boundary
    IntMatrix u2inv_;   // inverse basis change on kernel coordinates
    int rank2_ = 0;     // rank of the boundary lattice inside the kernel
    std::vector<Int> diag2_;
};

/*
 * Homology of C in one degree. Needs the boundary out of `degree` and the
 * one into it, so degree + 1 must lie in the window. With `reduced` set the
 * degree-0 boundary is replaced by the augmentation.
 */
inline HomologyGroup homology(std::shared_ptr<const ChainComplex> cx, int degree, bool reduced = false) {
    const ChainComplex& c = *cx;
    if (!c.has_degree(degree) || !c.has_degree(degree + 1))
        throw WindowError("homology needs degree and degree + 1 inside the window");

    IntMatrix del_d = (degree == 0 && reduced) ? c.augmentation() : c.boundary(degree);
    SnfOptions lower_opt;
    lower_opt.track_u = false;
    SnfResult snf_d = smith_normal_form(del_d, lower_opt);

    long n = c.basis_size(degree);
    int k = static_cast<int>(n) - snf_d.rank;  // cycle lattice dimension

    // Boundaries from one degree up, expressed in kernel coordinates
    // (the trailing coordinates of W * x).
    const IntMatrix& del_up = c.boundary(degree + 1);
    IntMatrix wdel = snf_d.w.multiply(del_up);
    IntMatrix bk(k, del_up.cols());
    for (const auto& [rc, v] : wdel.entries()) {
        if (rc.first < snf_d.rank) throw Error("boundary is not a cycle; d . d != 0");
        bk.set(rc.first - snf_d.rank, rc.second, v);
    }
    SnfOptions upper_opt;
    upper_opt.track_w = false;
    SnfResult snf_b = smith_normal_form(bk, upper_opt);

    HomologyGroup h;
    h.degree = degree;
    h.complex_ = std::move(cx);
    h.wd_ = snf_d.w;
    h.rank_d_ = snf_d.rank;
    h.u2inv_ = snf_b.u_inv;
    h.rank2_ = snf_b.rank;
    h.diag2_.assign(k, Int(0));
    for (int i = 0; i < snf_b.rank; ++i) h.diag2_[i] = snf_b.d.get(i, i);
    h.rank = k - snf_b.rank;
    for (int i = 0; i < snf_b.rank; ++i)
        if (h.diag2_[i] > 1) h.torsion.push_back(h.diag2_[i]);

    // Kernel lattice basis: trailing columns of W^-1.  Representatives of
    // homology classes are K * (columns of U2).
    IntMatrix kmat = kernel_basis(snf_d);
    IntMatrix reps = kmat.multiply(snf_b.u);
    auto column_chain = [&](int j) {
        std::vector<Int> v(n, Int(0));
        for (const auto& [rc, val] : reps.entries())
            if (rc.second == j) v[rc.first] = val;
        return c.chain_of(v, degree);
    };
    for (int j = snf_b.rank; j < k; ++j) h.cycle_basis.push_back(column_chain(j));
    for (int j = 0; j < snf_b.rank; ++j)
        if (h.diag2_[j] > 1) h.torsion_basis.push_back(column_chain(j));
    return h;
}

inline HomologyGroup homology(const ChainComplex& c, int degree, bool reduced = false) {
    return homology(std::make_shared<const ChainComplex>(c), degree, reduced);
}

/*
 * Witness for z being a boundary: some w with d(w) = z over the integers,
 * or absent when z is a nontrivial class. z must be a cycle.
 */
inline std::optional<Chain> boundary_witness(const ChainComplex& c, const Chain& z, int degree) {
    if (!c.is_cycle(z, degree)) throw NotACycle("boundary witness input must be a cycle");
    if (!c.has_degree(degree + 1)) throw WindowError("witness search needs degree + 1 inside the window");
    if (z.empty()) return Chain{};
    SnfResult snf = smith_normal_form(c.boundary(degree + 1));
    auto x = solve_integer(snf, c.vector_of(z, degree));
    if (!x) return std::nullopt;
    return c.chain_of(*x, degree + 1);
}

}  // namespace steinberg
