#include <doctest.h>

#include <random>

#include "toriclift/int_matrix.hpp"

using namespace toriclift;

namespace {

// Independent oracle: cofactor expansion along the first row.
long long cofactor_det(const IntMatrix& m) {
    int n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m.at(0, 0);
    long long acc = 0;
    for (int j = 0; j < n; ++j) {
        if (m.at(0, j) == 0) continue;
        IntMatrix sub(n - 1, n - 1);
        for (int i = 1; i < n; ++i) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                sub.at(i - 1, cc++) = m.at(i, c);
            }
        }
        long long term = m.at(0, j) * cofactor_det(sub);
        acc += (j % 2 ? -term : term);
    }
    return acc;
}

} // namespace

TEST_CASE("int_det basics") {
    CHECK(int_det(IntMatrix::identity(1)) == 1);
    CHECK(int_det(IntMatrix::identity(7)) == 1);
    IntMatrix swapped = IntMatrix::identity(2);
    swapped.at(0, 0) = 0;
    swapped.at(0, 1) = 1;
    swapped.at(1, 0) = 1;
    swapped.at(1, 1) = 0;
    CHECK(int_det(swapped) == -1);
    CHECK_THROWS_AS(int_det(IntMatrix(2, 3)), std::invalid_argument);
    CHECK_THROWS_AS(int_det(IntMatrix(17, 17)), std::invalid_argument);
}

TEST_CASE("int_det agrees with cofactor expansion up to size 4") {
    std::mt19937_64 rng(555);
    for (int trial = 0; trial < 500; ++trial) {
        int n = 1 + static_cast<int>(rng() % 4);
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = static_cast<long long>(rng() % 9) - 4;
        CHECK(int_det(m) == cofactor_det(m));
    }
}

TEST_CASE("exhaustive {0,1} determinant bounds for sizes 1..3") {
    // Validates the small-rank lifting principle: odd determinants of {0,1}
    // matrices of size <= 3 must be +-1.
    long long expected_max[] = {1, 1, 2};
    for (int n = 1; n <= 3; ++n) {
        long long max_abs = 0;
        int cells = n * n;
        for (int bits = 0; bits < (1 << cells); ++bits) {
            IntMatrix m(n, n);
            for (int c = 0; c < cells; ++c) m.at(c / n, c % n) = (bits >> c) & 1;
            long long d = int_det(m);
            if (d < 0) d = -d;
            max_abs = std::max(max_abs, d);
        }
        CHECK(max_abs == expected_max[n - 1]);
    }
}

TEST_CASE("the paper-displayed quadruple has determinant +-3") {
    // columns (1100),(1010),(1001),(0111)
    IntMatrix m(4, 4);
    int cols[4][4] = {{1, 1, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 1}};
    for (int j = 0; j < 4; ++j)
        for (int i = 0; i < 4; ++i) m.at(i, j) = cols[j][i];
    long long d = int_det(m);
    CHECK((d == 3 || d == -3));
}
