#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace toriclift {

// Vertex sets are bitmasks: bit i-1 holds vertex i (1-based labels, m <= 64).
using VertexSet = std::uint64_t;

inline int set_size(VertexSet s) { return std::popcount(s); }
inline bool contains(VertexSet s, int vertex) { return (s >> (vertex - 1)) & 1u; }
inline VertexSet singleton(int vertex) { return VertexSet{1} << (vertex - 1); }
inline VertexSet full_set(int m) { return m == 64 ? ~VertexSet{0} : (VertexSet{1} << m) - 1; }
inline bool subset_of(VertexSet a, VertexSet b) { return (a & ~b) == 0; }

inline std::vector<int> set_to_vertices(VertexSet s) {
    std::vector<int> out;
    while (s) {
        out.push_back(std::countr_zero(s) + 1);
        s &= s - 1;
    }
    return out;
}

inline VertexSet vertices_to_set(const std::vector<int>& vs) {
    VertexSet s = 0;
    for (int v : vs) s |= singleton(v);
    return s;
}

// Gosper's hack: next bitmask with the same popcount, 0 when exhausted.
inline std::uint64_t next_same_popcount(std::uint64_t x) {
    std::uint64_t u = x & (~x + 1);
    std::uint64_t v = x + u;
    if (v == 0) return 0;
    return v | (((x ^ v) / u) >> 2);
}

// All k-subsets of the lowest n bit positions, ascending as integers.
inline std::vector<std::uint64_t> k_subsets(int n, int k) {
    std::vector<std::uint64_t> out;
    if (k < 0 || k > n) return out;
    if (k == 0) return {0};
    std::uint64_t s = (std::uint64_t{1} << k) - 1;
    std::uint64_t limit = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n);
    while (s < limit) {
        out.push_back(s);
        std::uint64_t nxt = next_same_popcount(s);
        if (nxt == 0 || nxt <= s) break;
        s = nxt;
    }
    return out;
}

// Lexicographic order on vertex sets read as ascending vertex lists,
// e.g. {1,4} < {2,3}. Distinct from numeric mask order.
inline bool lex_less(VertexSet a, VertexSet b) {
    while (a && b) {
        int va = std::countr_zero(a), vb = std::countr_zero(b);
        if (va != vb) return va < vb;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

} // namespace toriclift
