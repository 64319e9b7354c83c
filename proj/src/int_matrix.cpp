#include "toriclift/int_matrix.hpp"

namespace toriclift {

long long int_det(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("int_det: matrix not square");
    int n = m.rows();
    if (n > 16) throw std::invalid_argument("int_det: size > 16 unsupported");
    if (n == 0) return 1;

    std::vector<__int128> a(std::size_t(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[std::size_t(i) * n + j] = m.at(i, j);

    auto e = [&](int i, int j) -> __int128& { return a[std::size_t(i) * n + j]; };

    int sign = 1;
    __int128 prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (e(k, k) == 0) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (e(i, k) != 0) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(e(k, j), e(swap_row, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                e(i, j) = (e(i, j) * e(k, k) - e(i, k) * e(k, j)) / prev;
            e(i, k) = 0;
        }
        prev = e(k, k);
    }
    __int128 d = e(n - 1, n - 1);
    if (sign < 0) d = -d;
    return static_cast<long long>(d);
}

} // namespace toriclift
