#include <doctest.h>

#include <random>

#include "toriclift/gf2_matrix.hpp"
#include "toriclift/int_matrix.hpp"

using namespace toriclift;

namespace {

BitMatrix from_rows(int cols, std::vector<std::uint64_t> rows) {
    BitMatrix m(static_cast<int>(rows.size()), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(static_cast<int>(i), rows[i]);
    return m;
}

} // namespace

TEST_CASE("rank, determinant and kernel of the identity") {
    BitMatrix id = BitMatrix::identity(4);
    CHECK(rank2(id) == 4);
    CHECK(det2(id) == 1);
    CHECK(kernel_basis2(id).cols() == 0);
}

TEST_CASE("pentagon map kernel basis is the frozen one") {
    // rows 10110, 01101 as column-indexed bits
    BitMatrix m = from_rows(5, {0b01101, 0b10110});
    BitMatrix k = kernel_basis2(m);
    REQUIRE(k.rows() == 5);
    REQUIRE(k.cols() == 3);
    // expected columns (1,1,1,0,0), (1,0,0,1,0), (0,1,0,0,1)
    BitMatrix expected(5, 3);
    int col0[] = {1, 1, 1, 0, 0}, col1[] = {1, 0, 0, 1, 0}, col2[] = {0, 1, 0, 0, 1};
    for (int i = 0; i < 5; ++i) {
        expected.set(i, 0, col0[i]);
        expected.set(i, 1, col1[i]);
        expected.set(i, 2, col2[i]);
    }
    CHECK(k == expected);
}

TEST_CASE("kernel of a zero matrix is the identity") {
    BitMatrix z(2, 3);
    CHECK(kernel_basis2(z) == BitMatrix::identity(3));
}

TEST_CASE("kernel relations hold on random matrices") {
    std::mt19937_64 rng(20240517);
    for (int trial = 0; trial < 200; ++trial) {
        int r = 1 + static_cast<int>(rng() % 6), c = 1 + static_cast<int>(rng() % 8);
        BitMatrix m(r, c);
        for (int i = 0; i < r; ++i) m.set_row(i, rng());
        BitMatrix k = kernel_basis2(m);
        CHECK(rank2(m) + k.cols() == c);
        BitMatrix prod = m.multiplied(k);
        for (int i = 0; i < prod.rows(); ++i) CHECK(prod.row(i) == 0);
        CHECK(rank2(k) == k.cols());
    }
}

TEST_CASE("row_normal_form pivots the requested block to the identity") {
    BitMatrix m = from_rows(5, {0b01101, 0b10110});
    SUBCASE("already reduced is a fixed point") {
        BitMatrix n = row_normal_form(m, {0, 1});
        CHECK(n == m); // pivot block at columns {1,2} is already the identity
        CHECK(row_normal_form(n, {0, 1}) == n);
    }
    SUBCASE("dependent pivot block is rejected") {
        BitMatrix z(2, 4); // zero columns are dependent
        CHECK_THROWS_AS(row_normal_form(z, {0, 1}), std::invalid_argument);
    }
}

TEST_CASE("rref is idempotent") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        BitMatrix m(3 + static_cast<int>(rng() % 3), 6);
        for (int i = 0; i < m.rows(); ++i) m.set_row(i, rng());
        BitMatrix r = rref2(m);
        CHECK(rref2(r) == r);
    }
}

TEST_CASE("inverse2 really inverts") {
    std::mt19937_64 rng(99);
    int done = 0;
    while (done < 50) {
        BitMatrix m(4, 4);
        for (int i = 0; i < 4; ++i) m.set_row(i, rng() & 0xf);
        if (det2(m) != 1) continue;
        CHECK(m.multiplied(inverse2(m)) == BitMatrix::identity(4));
        ++done;
    }
}

TEST_CASE("GL(4,2) enumeration") {
    const auto& gl = gl4_enumerate();
    CHECK(gl.size() == 20160);
    CHECK(gl.size() / 24 == 840);
    for (std::size_t i = 0; i < gl.size(); i += 997) CHECK(det2(gl[i]) == 1);
    // deterministic order: first element has lexicographically smallest rows
    CHECK(gl.front().row(0) == 1);
    CHECK(gl.front().row(1) == 2);
}

TEST_CASE("mod2 reduction matches integer determinant parity") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + static_cast<int>(rng() % 5);
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = static_cast<long long>(rng() % 7) - 3;
        long long d = int_det(m);
        CHECK(((d % 2 + 2) % 2) == det2(m.mod2()));
    }
}

TEST_CASE("linear Gale duality over GF(2) on random full-rank matrices") {
    std::mt19937_64 rng(13131);
    int instances = 0;
    while (instances < 120) {
        int m = 2 + static_cast<int>(rng() % 9); // 2..10
        int n = 1 + static_cast<int>(rng() % m);
        BitMatrix a(n, m);
        for (int i = 0; i < n; ++i) a.set_row(i, rng() & full_set(m));
        if (rank2(a) != n) continue;
        ++instances;
        BitMatrix ker = kernel_basis2(a);
        for (std::uint64_t sub : k_subsets(m, n)) {
            std::vector<int> cols, complement_rows;
            for (int j = 0; j < m; ++j)
                ((sub >> j) & 1 ? cols : complement_rows).push_back(j);
            int lhs = det2(a.select_columns(cols));
            int rhs = ker.cols() == 0 ? 1 : det2(ker.select_rows(complement_rows));
            CHECK(lhs == rhs);
        }
    }
}
