#include "toriclift/gf2_matrix.hpp"

#include <mutex>

namespace toriclift {

namespace {

// In-place elimination; returns rank and leaves m in row echelon form.
int eliminate(BitMatrix& m) {
    int rank = 0;
    for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
        int pivot = -1;
        for (int i = rank; i < m.rows(); ++i) {
            if ((m.row(i) >> col) & 1u) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        std::uint64_t pr = m.row(pivot);
        m.set_row(pivot, m.row(rank));
        m.set_row(rank, pr);
        for (int i = rank + 1; i < m.rows(); ++i)
            if ((m.row(i) >> col) & 1u) m.set_row(i, m.row(i) ^ pr);
        ++rank;
    }
    return rank;
}

} // namespace

int rank2(BitMatrix m) { return eliminate(m); }

int det2(const BitMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det2: matrix not square");
    if (m.rows() == 0) return 1;
    BitMatrix w = m;
    return eliminate(w) == m.rows() ? 1 : 0;
}

BitMatrix rref2(BitMatrix m) {
    int rank = eliminate(m);
    // Back-substitute to clear above each pivot.
    for (int i = rank - 1; i >= 0; --i) {
        std::uint64_t r = m.row(i);
        if (!r) continue;
        int col = std::countr_zero(r);
        for (int k = 0; k < i; ++k)
            if ((m.row(k) >> col) & 1u) m.set_row(k, m.row(k) ^ r);
    }
    return m;
}

BitMatrix row_normal_form(const BitMatrix& m, const std::vector<int>& pivot_cols) {
    BitMatrix block = m.select_columns(pivot_cols);
    if (block.rows() != static_cast<int>(pivot_cols.size()) || det2(block) != 1)
        throw std::invalid_argument("row_normal_form: pivot block singular");
    return inverse2(block).multiplied(m);
}

BitMatrix kernel_basis2(const BitMatrix& m) {
    BitMatrix r = rref2(m);
    int rank = 0;
    std::vector<int> pivot_of_col(m.cols(), -1);
    for (int i = 0; i < r.rows(); ++i) {
        if (!r.row(i)) break;
        int col = std::countr_zero(r.row(i));
        pivot_of_col[col] = i;
        ++rank;
    }
    BitMatrix basis(m.cols(), m.cols() - rank);
    int k = 0;
    for (int free_col = 0; free_col < m.cols(); ++free_col) {
        if (pivot_of_col[free_col] >= 0) continue;
        basis.set(free_col, k, 1);
        for (int col = 0; col < free_col; ++col) {
            int pi = pivot_of_col[col];
            if (pi >= 0 && r.get(pi, free_col)) basis.set(col, k, 1);
        }
        ++k;
    }
    return basis;
}

BitMatrix inverse2(const BitMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse2: matrix not square");
    int n = m.rows();
    // Augment [m | I] packed into one word per row.
    if (2 * n > 64) throw std::invalid_argument("inverse2: size > 32 unsupported");
    std::vector<std::uint64_t> aug(n);
    for (int i = 0; i < n; ++i) aug[i] = m.row(i) | (std::uint64_t{1} << (n + i));
    int rank = 0;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int i = rank; i < n; ++i)
            if ((aug[i] >> col) & 1u) {
                pivot = i;
                break;
            }
        if (pivot < 0) throw std::invalid_argument("inverse2: singular matrix");
        std::swap(aug[pivot], aug[rank]);
        for (int i = 0; i < n; ++i)
            if (i != rank && ((aug[i] >> col) & 1u)) aug[i] ^= aug[rank];
        ++rank;
    }
    BitMatrix inv(n, n);
    for (int i = 0; i < n; ++i) inv.set_row(i, aug[i] >> n);
    return inv;
}

const std::vector<BitMatrix>& gl4_enumerate() {
    static std::vector<BitMatrix> cache;
    static std::once_flag once;
    std::call_once(once, [] {
        cache.reserve(20160);
        for (int r0 = 1; r0 < 16; ++r0)
            for (int r1 = 1; r1 < 16; ++r1) {
                if (r1 == r0) continue;
                for (int r2 = 1; r2 < 16; ++r2) {
                    if (r2 == r0 || r2 == r1 || r2 == (r0 ^ r1)) continue;
                    std::uint64_t span3[8] = {0,
                                              static_cast<std::uint64_t>(r0),
                                              static_cast<std::uint64_t>(r1),
                                              static_cast<std::uint64_t>(r0 ^ r1),
                                              static_cast<std::uint64_t>(r2),
                                              static_cast<std::uint64_t>(r0 ^ r2),
                                              static_cast<std::uint64_t>(r1 ^ r2),
                                              static_cast<std::uint64_t>(r0 ^ r1 ^ r2)};
                    for (int r3 = 1; r3 < 16; ++r3) {
                        bool in_span = false;
                        for (auto s : span3)
                            if (s == static_cast<std::uint64_t>(r3)) {
                                in_span = true;
                                break;
                            }
                        if (in_span) continue;
                        BitMatrix g(4, 4);
                        g.set_row(0, r0);
                        g.set_row(1, r1);
                        g.set_row(2, r2);
                        g.set_row(3, r3);
                        cache.push_back(g);
                    }
                }
            }
    });
    return cache;
}

} // namespace toriclift
