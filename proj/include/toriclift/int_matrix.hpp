#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "toriclift/gf2_matrix.hpp"

namespace toriclift {

// Dense integer matrix for exact small-size arithmetic (lifts, subgroup
// matrices). Entries are small; determinants go through 128-bit Bareiss.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols, 0) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("IntMatrix: bad shape");
    }

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    // Entrywise {0,1} copy of a GF(2) matrix.
    static IntMatrix from_bits(const BitMatrix& b) {
        IntMatrix m(b.rows(), b.cols());
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) m.at(i, j) = b.get(i, j);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    long long& at(int i, int j) { return a_[std::size_t(i) * cols_ + j]; }
    long long at(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    IntMatrix select_rows(const std::vector<int>& rows) const {
        IntMatrix s(static_cast<int>(rows.size()), cols_);
        for (std::size_t k = 0; k < rows.size(); ++k)
            for (int j = 0; j < cols_; ++j) s.at(static_cast<int>(k), j) = at(rows[k], j);
        return s;
    }

    IntMatrix select_columns(const std::vector<int>& cols) const {
        IntMatrix s(rows_, static_cast<int>(cols.size()));
        for (int i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols.size(); ++k) s.at(i, static_cast<int>(k)) = at(i, cols[k]);
        return s;
    }

    BitMatrix mod2() const {
        BitMatrix b(rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) b.set(i, j, static_cast<int>(at(i, j) & 1));
        return b;
    }

    bool entries_in(long long lo, long long hi) const {
        for (long long v : a_)
            if (v < lo || v > hi) return false;
        return true;
    }

    std::string to_string() const {
        std::string s;
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) {
                if (j) s += ' ';
                s += std::to_string(at(i, j));
            }
            s += '\n';
        }
        return s;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<long long> a_;
};

// Exact determinant by fraction-free (Bareiss) elimination in 128-bit
// arithmetic. Sizes up to 16 only; the Hadamard bound for small-entry
// matrices of that size fits comfortably.
long long int_det(const IntMatrix& m);

} // namespace toriclift
