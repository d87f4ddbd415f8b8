#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "steinberg/intmatrix.hpp"

namespace steinberg {

/*
 * Smith normal form M = U * D * W with U, W unimodular and D diagonal,
 * d1 | d2 | ... | dr, all positive. Transformation matrices are tracked on
 * demand; homology only ever needs a subset of them.
 */
struct SnfResult {
    IntMatrix d;
    IntMatrix u, u_inv;
    IntMatrix w, w_inv;
    int rank = 0;

    std::vector<Int> diagonal() const {
        std::vector<Int> out;
        int m = std::min(d.rows(), d.cols());
        for (int i = 0; i < m; ++i) {
            Int v = d.get(i, i);
            if (v == 0) break;
            out.push_back(v);
        }
        return out;
    }
};

struct SnfOptions {
    bool track_u = true;
    bool track_w = true;
};

namespace detail {

// Floor division with remainder of minimal absolute value (|r| <= |b|/2),
// which keeps Euclidean pivot reduction short.
inline Int nearest_quotient(const Int& a, const Int& b) {
    Int q = a / b;  // truncated
    Int r = a - q * b;
    if (r != 0) {
        Int babs = abs(b);
        if (2 * abs(r) > babs) q += (r > 0) == (b > 0) ? 1 : -1;
    }
    return q;
}

// Row-major sparse store with a column index for pivot scans.
class SparseStore {
  public:
    SparseStore(int rows, int cols) : rows_(rows), cols_(cols), row_(rows), colrows_(cols) {}

    static SparseStore from(const IntMatrix& m) {
        SparseStore s(m.rows(), m.cols());
        for (const auto& [rc, v] : m.entries()) {
            s.row_[rc.first][rc.second] = v;
            s.colrows_[rc.second].insert(rc.first);
        }
        return s;
    }

    static SparseStore eye(int n) {
        SparseStore s(n, n);
        for (int i = 0; i < n; ++i) {
            s.row_[i][i] = 1;
            s.colrows_[i].insert(i);
        }
        return s;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const std::map<int, Int>& row(int r) const { return row_[r]; }
    const std::set<int>& col_rows(int c) const { return colrows_[c]; }

    Int get(int r, int c) const {
        auto it = row_[r].find(c);
        return it == row_[r].end() ? Int(0) : it->second;
    }

    void set(int r, int c, Int v) {
        if (v == 0) {
            row_[r].erase(c);
            colrows_[c].erase(r);
        } else {
            row_[r][c] = std::move(v);
            colrows_[c].insert(r);
        }
    }

    void row_swap(int r1, int r2) {
        if (r1 == r2) return;
        for (const auto& [c, v] : row_[r1]) colrows_[c].erase(r1), colrows_[c].insert(r2);
        for (const auto& [c, v] : row_[r2]) colrows_[c].erase(r2), colrows_[c].insert(r1);
        std::swap(row_[r1], row_[r2]);
        for (const auto& [c, v] : row_[r1]) colrows_[c].insert(r1);
        for (const auto& [c, v] : row_[r2]) colrows_[c].insert(r2);
    }

    void row_negate(int r) {
        for (auto& [c, v] : row_[r]) v = -v;
    }

    // row[dst] += k * row[src]
    void row_addmul(int dst, int src, const Int& k) {
        if (k == 0 || dst == src) return;
        for (const auto& [c, v] : row_[src]) {
            auto it = row_[dst].find(c);
            if (it == row_[dst].end()) {
                row_[dst][c] = k * v;
                colrows_[c].insert(dst);
            } else {
                it->second += k * v;
                if (it->second == 0) {
                    row_[dst].erase(it);
                    colrows_[c].erase(dst);
                }
            }
        }
    }

    void col_swap(int c1, int c2) {
        if (c1 == c2) return;
        std::set<int> touched = colrows_[c1];
        touched.insert(colrows_[c2].begin(), colrows_[c2].end());
        for (int r : touched) {
            Int a = get(r, c1), b = get(r, c2);
            set(r, c1, b);
            set(r, c2, a);
        }
    }

    void col_negate(int c) {
        for (int r : colrows_[c]) row_[r][c] = -row_[r][c];
    }

    // col[dst] += k * col[src]
    void col_addmul(int dst, int src, const Int& k) {
        if (k == 0 || dst == src) return;
        std::vector<int> srcrows(colrows_[src].begin(), colrows_[src].end());
        for (int r : srcrows) {
            Int add = k * row_[r][src];
            auto it = row_[r].find(dst);
            if (it == row_[r].end()) {
                row_[r][dst] = std::move(add);
                colrows_[dst].insert(r);
            } else {
                it->second += add;
                if (it->second == 0) {
                    row_[r].erase(it);
                    colrows_[dst].erase(r);
                }
            }
        }
    }

    IntMatrix to_matrix() const {
        IntMatrix m(rows_, cols_);
        for (int r = 0; r < rows_; ++r)
            for (const auto& [c, v] : row_[r]) m.set(r, c, v);
        return m;
    }

  private:
    int rows_, cols_;
    std::vector<std::map<int, Int>> row_;
    std::vector<std::set<int>> colrows_;
};

/*
 * Elimination worker. Maintains M = U * A * W as an invariant; every
 * elementary operation applied to A is compensated in the trackers.
 * U and Wi are stored transposed so all updates stay row operations.
 */
class SnfWorker {
  public:
    SnfWorker(const IntMatrix& m, SnfOptions opt)
        : a_(SparseStore::from(m)), opt_(opt) {
        if (opt_.track_u) {
            ut_ = SparseStore::eye(m.rows());
            ui_ = SparseStore::eye(m.rows());
        }
        if (opt_.track_w) {
            w_ = SparseStore::eye(m.cols());
            wit_ = SparseStore::eye(m.cols());
        }
    }

    SnfResult run() {
        int t = 0;
        int bound = std::min(a_.rows(), a_.cols());
        while (t < bound) {
            auto pivot = find_pivot(t);
            if (!pivot) break;
            move_pivot(t, pivot->first, pivot->second);
            eliminate(t);
            ++t;
        }
        rank_ = t;
        for (int i = 0; i < rank_; ++i)
            if (a_.get(i, i) < 0) negate_row(i);
        fix_divisibility();
        SnfResult out;
        out.d = a_.to_matrix();
        out.rank = rank_;
        if (opt_.track_u) {
            out.u = ut_->to_matrix().transpose();
            out.u_inv = ui_->to_matrix();
        }
        if (opt_.track_w) {
            out.w = w_->to_matrix();
            out.w_inv = wit_->to_matrix().transpose();
        }
        return out;
    }

  private:
    // A <- E * A with E = "row dst += k row src"; U <- U E^-1, Ui <- E Ui.
    void addmul_row(int dst, int src, const Int& k) {
        a_.row_addmul(dst, src, k);
        if (opt_.track_u) {
            ui_->row_addmul(dst, src, k);
            ut_->row_addmul(src, dst, -k);  // column op on U, transposed store
        }
    }

    void swap_rows(int r1, int r2) {
        a_.row_swap(r1, r2);
        if (opt_.track_u) {
            ui_->row_swap(r1, r2);
            ut_->row_swap(r1, r2);
        }
    }

    void negate_row(int r) {
        a_.row_negate(r);
        if (opt_.track_u) {
            ui_->row_negate(r);
            ut_->row_negate(r);
        }
    }

    // A <- A * F with F = "col dst += k col src"; W <- F^-1 W, Wi <- Wi F.
    void addmul_col(int dst, int src, const Int& k) {
        a_.col_addmul(dst, src, k);
        if (opt_.track_w) {
            w_->row_addmul(src, dst, -k);
            wit_->row_addmul(dst, src, k);  // column op on Wi, transposed store
        }
    }

    void swap_cols(int c1, int c2) {
        a_.col_swap(c1, c2);
        if (opt_.track_w) {
            w_->row_swap(c1, c2);
            wit_->row_swap(c1, c2);
        }
    }

    // Smallest |value| wins; ties broken by Markowitz fill count.
    std::optional<std::pair<int, int>> find_pivot(int t) const {
        std::optional<std::pair<int, int>> best;
        Int best_abs = 0;
        long best_fill = 0;
        for (int r = t; r < a_.rows(); ++r) {
            for (const auto& [c, v] : a_.row(r)) {
                if (c < t) continue;
                Int va = abs(v);
                long fill = active_row_nnz(r, t) * active_col_nnz(c, t);
                if (!best || va < best_abs || (va == best_abs && fill < best_fill)) {
                    best = {r, c};
                    best_abs = va;
                    best_fill = fill;
                    if (best_abs == 1 && fill == 0) return best;
                }
            }
        }
        return best;
    }

    long active_row_nnz(int r, int t) const {
        long n = 0;
        for (const auto& [c, v] : a_.row(r))
            if (c >= t) ++n;
        return n - 1;
    }

    long active_col_nnz(int c, int t) const {
        long n = 0;
        for (int r : a_.col_rows(c))
            if (r >= t) ++n;
        return n - 1;
    }

    void move_pivot(int t, int r, int c) {
        swap_rows(t, r);
        swap_cols(t, c);
    }

    void eliminate(int t) {
        for (;;) {
            bool clean = true;
            // Clear column t below/above the pivot.
            for (;;) {
                std::vector<int> rows;
                for (int r : a_.col_rows(t))
                    if (r != t) rows.push_back(r);
                if (rows.empty()) break;
                for (int r : rows) {
                    Int v = a_.get(r, t);
                    if (v == 0) continue;
                    Int q = nearest_quotient(v, a_.get(t, t));
                    addmul_row(r, t, -q);
                    Int rem = a_.get(r, t);
                    if (rem != 0) {
                        swap_rows(t, r);  // strictly smaller |pivot|
                        clean = false;
                    }
                }
                if (clean) break;
                clean = true;
            }
            // Clear row t right of the pivot.
            bool row_done = true;
            for (;;) {
                std::vector<int> cols;
                for (const auto& [c, v] : a_.row(t))
                    if (c != t) cols.push_back(c);
                if (cols.empty()) break;
                for (int c : cols) {
                    Int v = a_.get(t, c);
                    if (v == 0) continue;
                    Int q = nearest_quotient(v, a_.get(t, t));
                    addmul_col(c, t, -q);
                    Int rem = a_.get(t, c);
                    if (rem != 0) {
                        swap_cols(t, c);
                        row_done = false;
                    }
                }
                if (row_done) break;
                row_done = true;
            }
            // Column may have been refilled by the column operations.
            bool col_clear = true;
            for (int r : a_.col_rows(t))
                if (r != t) col_clear = false;
            if (col_clear) break;
        }
    }

    // Enforce d1 | d2 | ... | dr by local gcd/lcm folds on adjacent pairs.
    void fix_divisibility() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int i = 0; i + 1 < rank_; ++i) {
                Int a = a_.get(i, i), b = a_.get(i + 1, i + 1);
                if (b % a == 0) continue;
                changed = true;
                addmul_row(i, i + 1, 1);  // block [[a, b], [0, b]]
                // gcd into (i, i) by column Euclid on row i
                for (;;) {
                    Int x = a_.get(i, i), y = a_.get(i, i + 1);
                    if (y == 0) break;
                    Int q = nearest_quotient(x, y);
                    addmul_col(i, i + 1, -q);
                    swap_cols(i, i + 1);
                }
                // clear (i+1, i); gcd divides everything in the block
                Int below = a_.get(i + 1, i);
                if (below != 0) addmul_row(i + 1, i, -below / a_.get(i, i));
                if (a_.get(i, i) < 0) negate_row(i);
                if (a_.get(i + 1, i + 1) < 0) negate_row(i + 1);
            }
        }
    }

    SparseStore a_;
    SnfOptions opt_;
    std::optional<SparseStore> ut_, ui_, w_, wit_;
    int rank_ = 0;
};

// Plain dense elimination, used as the small-matrix path and as an
// independent implementation to cross-check the sparse worker.
inline SnfResult snf_dense(const IntMatrix& m) {
    int rows = m.rows(), cols = m.cols();
    std::vector<std::vector<Int>> a(rows, std::vector<Int>(cols, Int(0)));
    for (const auto& [rc, v] : m.entries()) a[rc.first][rc.second] = v;
    std::vector<std::vector<Int>> u, ui, w, wi;
    auto eye = [](int n) {
        std::vector<std::vector<Int>> e(n, std::vector<Int>(n, Int(0)));
        for (int i = 0; i < n; ++i) e[i][i] = 1;
        return e;
    };
    u = eye(rows);
    ui = eye(rows);
    w = eye(cols);
    wi = eye(cols);

    auto row_addmul = [&](int dst, int src, const Int& k) {
        if (k == 0) return;
        for (int c = 0; c < cols; ++c) a[dst][c] += k * a[src][c];
        for (int c = 0; c < rows; ++c) {
            ui[dst][c] += k * ui[src][c];
            u[c][src] -= k * u[c][dst];
        }
    };
    auto row_swap = [&](int r1, int r2) {
        if (r1 == r2) return;
        std::swap(a[r1], a[r2]);
        std::swap(ui[r1], ui[r2]);
        for (int c = 0; c < rows; ++c) std::swap(u[c][r1], u[c][r2]);
    };
    auto row_negate = [&](int r) {
        for (auto& v : a[r]) v = -v;
        for (auto& v : ui[r]) v = -v;
        for (int c = 0; c < rows; ++c) u[c][r] = -u[c][r];
    };
    auto col_addmul = [&](int dst, int src, const Int& k) {
        if (k == 0) return;
        for (int r = 0; r < rows; ++r) a[r][dst] += k * a[r][src];
        for (int r = 0; r < cols; ++r) {
            w[src][r] -= k * w[dst][r];
            wi[r][dst] += k * wi[r][src];
        }
    };
    auto col_swap = [&](int c1, int c2) {
        if (c1 == c2) return;
        for (int r = 0; r < rows; ++r) std::swap(a[r][c1], a[r][c2]);
        std::swap(w[c1], w[c2]);
        for (int r = 0; r < cols; ++r) std::swap(wi[r][c1], wi[r][c2]);
    };

    int bound = std::min(rows, cols);
    int t = 0;
    while (t < bound) {
        int pr = -1, pc = -1;
        Int pv = 0;
        for (int r = t; r < rows; ++r)
            for (int c = t; c < cols; ++c)
                if (a[r][c] != 0 && (pr < 0 || abs(a[r][c]) < pv)) {
                    pr = r;
                    pc = c;
                    pv = abs(a[r][c]);
                }
        if (pr < 0) break;
        row_swap(t, pr);
        col_swap(t, pc);
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (int r = t + 1; r < rows; ++r) {
                if (a[r][t] == 0) continue;
                Int q = nearest_quotient(a[r][t], a[t][t]);
                row_addmul(r, t, -q);
                if (a[r][t] != 0) {
                    row_swap(t, r);
                    dirty = true;
                }
            }
            for (int c = t + 1; c < cols; ++c) {
                if (a[t][c] == 0) continue;
                Int q = nearest_quotient(a[t][c], a[t][t]);
                col_addmul(c, t, -q);
                if (a[t][c] != 0) {
                    col_swap(t, c);
                    dirty = true;
                }
            }
        }
        ++t;
    }
    int rank = t;
    for (int i = 0; i < rank; ++i)
        if (a[i][i] < 0) row_negate(i);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i + 1 < rank; ++i) {
            if (a[i + 1][i + 1] % a[i][i] == 0) continue;
            changed = true;
            row_addmul(i, i + 1, 1);
            for (;;) {
                if (a[i][i + 1] == 0) break;
                Int q = nearest_quotient(a[i][i], a[i][i + 1]);
                col_addmul(i, i + 1, -q);
                col_swap(i, i + 1);
            }
            if (a[i + 1][i] != 0) row_addmul(i + 1, i, -a[i + 1][i] / a[i][i]);
            if (a[i][i] < 0) row_negate(i);
            if (a[i + 1][i + 1] < 0) row_negate(i + 1);
        }
    }

    auto pack = [](const std::vector<std::vector<Int>>& src, int nr, int nc) {
        IntMatrix out(nr, nc);
        for (int r = 0; r < nr; ++r)
            for (int c = 0; c < nc; ++c)
                if (src[r][c] != 0) out.set(r, c, src[r][c]);
        return out;
    };
    SnfResult out;
    out.d = pack(a, rows, cols);
    out.u = pack(u, rows, rows);
    out.u_inv = pack(ui, rows, rows);
    out.w = pack(w, cols, cols);
    out.w_inv = pack(wi, cols, cols);
    out.rank = rank;
    return out;
}

}  // namespace detail

inline SnfResult smith_normal_form(const IntMatrix& m, SnfOptions opt = {}) {
    if (m.rows() < 64 && m.cols() < 64) return detail::snf_dense(m);
    return detail::SnfWorker(m, opt).run();
}

// Integer kernel of M: columns form a lattice basis of { x : M x = 0 }.
inline IntMatrix kernel_basis(const SnfResult& snf) {
    int n = snf.w.rows();
    int k = n - snf.rank;
    IntMatrix out(n, k);
    for (const auto& [rc, v] : snf.w_inv.entries())
        if (rc.second >= snf.rank) out.set(rc.first, rc.second - snf.rank, v);
    return out;
}

// Solve M x = b over the integers; empty if no integral solution exists.
inline std::optional<std::vector<Int>> solve_integer(const SnfResult& snf, const std::vector<Int>& b) {
    std::vector<Int> y = snf.u_inv.apply(b);
    std::vector<Int> z(snf.w.rows(), Int(0));
    for (int i = 0; i < static_cast<int>(y.size()); ++i) {
        if (i < snf.rank) {
            Int d = snf.d.get(i, i);
            if (y[i] % d != 0) return std::nullopt;
            z[i] = y[i] / d;
        } else if (y[i] != 0) {
            return std::nullopt;
        }
    }
    return snf.w_inv.apply(z);
}

}  // namespace steinberg
