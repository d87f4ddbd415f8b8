#pragma once

#include <map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "steinberg/errors.hpp"

namespace steinberg {

using Int = boost::multiprecision::cpp_int;

/*
 * Sparse integer matrix with arbitrary-precision entries. Zero entries are
 * never stored; every mutation canonicalizes.
 */
class IntMatrix {
  public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
        if (rows < 0 || cols < 0) throw DimMismatch("negative matrix dimension");
    }

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.set(i, i, 1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const std::map<std::pair<int, int>, Int>& entries() const { return entries_; }

    Int get(int r, int c) const {
        check_index(r, c);
        auto it = entries_.find({r, c});
        return it == entries_.end() ? Int(0) : it->second;
    }

    void set(int r, int c, Int v) {
        check_index(r, c);
        if (v == 0)
            entries_.erase({r, c});
        else
            entries_[{r, c}] = std::move(v);
    }

    void add_to(int r, int c, const Int& v) {
        if (v == 0) return;
        check_index(r, c);
        auto [it, inserted] = entries_.try_emplace({r, c}, v);
        if (!inserted) {
            it->second += v;
            if (it->second == 0) entries_.erase(it);
        }
    }

    bool is_zero() const { return entries_.empty(); }

    std::size_t nonzeros() const { return entries_.size(); }

    IntMatrix multiply(const IntMatrix& other) const {
        if (cols_ != other.rows_) throw DimMismatch("matrix product shape mismatch");
        // Row-major accumulation over the sparse supports only.
        std::vector<std::vector<std::pair<int, const Int*>>> rows_of_other(other.rows_);
        for (const auto& [rc, v] : other.entries_) rows_of_other[rc.first].push_back({rc.second, &v});
        IntMatrix out(rows_, other.cols_);
        for (const auto& [rc, v] : entries_) {
            for (const auto& [j, w] : rows_of_other[rc.second]) out.add_to(rc.first, j, v * (*w));
        }
        return out;
    }

    std::vector<Int> apply(const std::vector<Int>& x) const {
        if (static_cast<int>(x.size()) != cols_) throw DimMismatch("matrix-vector shape mismatch");
        std::vector<Int> y(rows_, Int(0));
        for (const auto& [rc, v] : entries_) y[rc.first] += v * x[rc.second];
        return y;
    }

    IntMatrix transpose() const {
        IntMatrix out(cols_, rows_);
        for (const auto& [rc, v] : entries_) out.set(rc.second, rc.first, v);
        return out;
    }

    bool operator==(const IntMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
    }

    bool is_diagonal() const {
        for (const auto& [rc, v] : entries_)
            if (rc.first != rc.second) return false;
        return true;
    }

  private:
    void check_index(int r, int c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw DimMismatch("matrix index out of range");
    }

    int rows_, cols_;
    std::map<std::pair<int, int>, Int> entries_;
};

}  // namespace steinberg
