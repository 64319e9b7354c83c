#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "toriclift/bitset_util.hpp"

namespace toriclift {

// Dense GF(2) matrix, one 64-bit word per row (column count <= 64).
// Bit j of a row word is the entry in column j (0-based).
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(int rows, int cols) : rows_(rows), cols_(cols), row_(rows, 0) {
        if (cols < 0 || cols > 64 || rows < 0) throw std::invalid_argument("BitMatrix: bad shape");
    }

    static BitMatrix identity(int n) {
        BitMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.row_[i] = std::uint64_t{1} << i;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    std::uint64_t row(int i) const { return row_[i]; }
    void set_row(int i, std::uint64_t bits) { row_[i] = bits & full_set(cols_); }

    int get(int i, int j) const { return static_cast<int>((row_[i] >> j) & 1u); }
    void set(int i, int j, int v) {
        if (v & 1)
            row_[i] |= std::uint64_t{1} << j;
        else
            row_[i] &= ~(std::uint64_t{1} << j);
    }

    bool operator==(const BitMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && row_ == o.row_;
    }
    bool operator<(const BitMatrix& o) const {
        if (rows_ != o.rows_) return rows_ < o.rows_;
        if (cols_ != o.cols_) return cols_ < o.cols_;
        return row_ < o.row_;
    }

    BitMatrix transposed() const {
        BitMatrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i) {
            std::uint64_t r = row_[i];
            while (r) {
                int j = std::countr_zero(r);
                t.row_[j] |= std::uint64_t{1} << i;
                r &= r - 1;
            }
        }
        return t;
    }

    // Submatrix of the columns listed in `cols` (0-based), in that order.
    BitMatrix select_columns(const std::vector<int>& cols) const {
        BitMatrix s(rows_, static_cast<int>(cols.size()));
        for (int i = 0; i < rows_; ++i) {
            std::uint64_t out = 0;
            for (std::size_t k = 0; k < cols.size(); ++k)
                out |= ((row_[i] >> cols[k]) & 1u) << k;
            s.row_[i] = out;
        }
        return s;
    }

    // Submatrix of the rows listed (0-based), in that order.
    BitMatrix select_rows(const std::vector<int>& rows) const {
        BitMatrix s(static_cast<int>(rows.size()), cols_);
        for (std::size_t k = 0; k < rows.size(); ++k) s.row_[k] = row_[rows[k]];
        return s;
    }

    BitMatrix multiplied(const BitMatrix& rhs) const {
        if (cols_ != rhs.rows_) throw std::invalid_argument("BitMatrix: shape mismatch in product");
        BitMatrix out(rows_, rhs.cols_);
        for (int i = 0; i < rows_; ++i) {
            std::uint64_t acc = 0, r = row_[i];
            while (r) {
                int k = std::countr_zero(r);
                acc ^= rhs.row_[k];
                r &= r - 1;
            }
            out.row_[i] = acc;
        }
        return out;
    }

    std::string to_string() const {
        std::string s;
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) {
                if (j) s += ' ';
                s += char('0' + get(i, j));
            }
            s += '\n';
        }
        return s;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::uint64_t> row_;
};

int rank2(BitMatrix m);
int det2(const BitMatrix& m); // square input; 0 or 1

// Reduced row echelon form; pivots at the leftmost usable column of each row.
BitMatrix rref2(BitMatrix m);

// Left-multiplies by the inverse of the block on `pivot_cols` (0-based) so
// that block becomes the identity, row i of it pivoting column pivot_cols[i].
// Throws if the requested block is singular.
BitMatrix row_normal_form(const BitMatrix& m, const std::vector<int>& pivot_cols);

// Columns form a basis of the right kernel; empty (cols x 0) when injective.
// Deterministic: RREF with leftmost pivots, one basis vector per free column
// in ascending column order.
BitMatrix kernel_basis2(const BitMatrix& m);

// Inverse of a square invertible matrix; throws when singular.
BitMatrix inverse2(const BitMatrix& m);

// All 20160 invertible 4x4 GF(2) matrices, ascending in (row0,row1,row2,row3)
// lexicographic order. Built once, cached.
const std::vector<BitMatrix>& gl4_enumerate();

} // namespace toriclift
