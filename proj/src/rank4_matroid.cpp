#include "toriclift/rank4_matroid.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <stdexcept>

namespace toriclift {

namespace {

// Reverses the low 4 bits; converts between column number (big-endian
// spelling) and row-word encoding (bit i-1 = coordinate i).
std::uint32_t rev4(std::uint32_t x) {
    return ((x & 1) << 3) | ((x & 2) << 1) | ((x & 4) >> 1) | ((x & 8) >> 3);
}

std::vector<int> mask_to_columns(BasisMask mask) {
    std::vector<int> out;
    while (mask) {
        out.push_back(std::countr_zero(mask)); // 0-based column index
        mask &= mask - 1;
    }
    return out;
}

Rank4Matroid build_matroid() {
    Rank4Matroid m;
    m.a = IntMatrix(4, 15);
    for (int k = 1; k <= 15; ++k)
        for (int i = 0; i < 4; ++i) m.a.at(i, k - 1) = (k >> (3 - i)) & 1;

    std::vector<BasisMask> det3;
    for (std::uint64_t sub : k_subsets(15, 4)) {
        auto mask = static_cast<BasisMask>(sub);
        long long d = int_det(m.a.select_columns(mask_to_columns(mask)));
        if (d % 2 == 0) continue;
        m.bases.push_back(mask);
        long long ad = d < 0 ? -d : d;
        m.basis_abs_det.push_back(ad);
        if (ad == 3) det3.push_back(mask);
        if (ad != 1 && ad != 3)
            throw std::logic_error("rank4_matroid: odd determinant outside {1,3}");
    }
    if (m.bases.size() != 840) throw std::logic_error("rank4_matroid: basis count != 840");
    if (det3.size() != 5) throw std::logic_error("rank4_matroid: det-3 count != 5");
    std::sort(det3.begin(), det3.end());
    std::copy(det3.begin(), det3.end(), m.det3_sets.begin());
    return m;
}

// Column permutation induced by g: column k goes to the column holding g
// applied to it.
std::array<int, 15> column_action(const BitMatrix& g) {
    std::array<int, 15> perm{};
    for (int k = 1; k <= 15; ++k) {
        std::uint32_t v = rev4(static_cast<std::uint32_t>(k));
        std::uint32_t image = 0;
        for (int i = 0; i < 4; ++i)
            image |= static_cast<std::uint32_t>(std::popcount(g.row(i) & v) & 1) << i;
        perm[static_cast<std::size_t>(k - 1)] = static_cast<int>(rev4(image)); // 1-based column
    }
    return perm;
}

BasisMask apply_perm_inverse(const std::array<int, 15>& perm, BasisMask mask) {
    // ind_{gA}(s) = { k : g maps column k into s } = perm^{-1}(s).
    BasisMask out = 0;
    for (int k = 1; k <= 15; ++k)
        if ((mask >> (perm[static_cast<std::size_t>(k - 1)] - 1)) & 1) out |= BasisMask{1} << (k - 1);
    return out;
}

Partition168 build_partition(const Rank4Matroid& m) {
    Partition168 p;
    p.block_of_basis.assign(std::size_t{1} << 15, -1);

    using BlockKey = std::array<BasisMask, 5>;
    std::vector<std::pair<BlockKey, int>> seen; // key -> first generator index
    std::vector<int> counts;

    const auto& gl4 = gl4_enumerate();
    const BlockKey base_key = m.det3_sets;
    for (std::size_t gi = 0; gi < gl4.size(); ++gi) {
        auto perm = column_action(gl4[gi]);
        BlockKey key;
        for (int j = 0; j < 5; ++j)
            key[static_cast<std::size_t>(j)] = apply_perm_inverse(perm, m.det3_sets[static_cast<std::size_t>(j)]);
        std::sort(key.begin(), key.end());

        // The proof's dichotomy against the determinant-3 block.
        bool meets = false;
        for (BasisMask b : key)
            for (BasisMask c : base_key)
                if (b == c) meets = true;
        if (meets && key != base_key)
            throw std::logic_error("partition168: GL dichotomy violated");

        bool found = false;
        for (std::size_t s = 0; s < seen.size(); ++s)
            if (seen[s].first == key) {
                ++counts[s];
                found = true;
                break;
            }
        if (!found) {
            seen.emplace_back(key, static_cast<int>(gi));
            counts.push_back(1);
        }
    }
    if (seen.size() != 168) throw std::logic_error("partition168: block count != 168");

    std::vector<std::size_t> order(seen.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return seen[a].first < seen[b].first; });

    int covered = 0;
    for (std::size_t oi = 0; oi < order.size(); ++oi) {
        const auto& [key, first_g] = seen[order[oi]];
        Partition168::Block blk;
        blk.bases = key;
        blk.first_generator = first_g;
        blk.generator_count = counts[order[oi]];
        if (blk.generator_count != 120)
            throw std::logic_error("partition168: block generator multiplicity != 120");
        for (BasisMask b : key) {
            if (p.block_of_basis[b] != -1) throw std::logic_error("partition168: blocks overlap");
            p.block_of_basis[b] = static_cast<int>(oi);
            ++covered;
        }
        if (key == base_key) p.det3_block = static_cast<int>(oi);
        p.blocks.push_back(blk);
    }
    if (covered != 840) throw std::logic_error("partition168: blocks do not cover all bases");
    if (p.det3_block < 0) throw std::logic_error("partition168: determinant-3 block missing");
    return p;
}

} // namespace

const Rank4Matroid& rank4_matroid() {
    static Rank4Matroid m;
    static std::once_flag once;
    std::call_once(once, [] { m = build_matroid(); });
    return m;
}

const Partition168& partition168() {
    static Partition168 p;
    static std::once_flag once;
    std::call_once(once, [] { p = build_partition(rank4_matroid()); });
    return p;
}

int column_index_of_vector(std::uint32_t row_bits) {
    if (row_bits == 0 || row_bits > 15)
        throw std::invalid_argument("column_index_of_vector: not a nonzero 4-bit vector");
    return static_cast<int>(rev4(row_bits));
}

LiftOutcome pigeonhole_lift(const SimplicialComplex& k, const BitMatrix& dual) {
    if (k.m - k.n != 4) throw std::invalid_argument("pigeonhole_lift: Picard number must be 4");
    if (dual.rows() != k.m || dual.cols() != 4)
        throw std::invalid_argument("pigeonhole_lift: dimension mismatch");
    if (!is_injective_rows(dual))
        throw std::invalid_argument("pigeonhole_lift: dual map is not injective");
    for (int i = 0; i < k.m; ++i)
        if (dual.row(i) == 0) throw std::invalid_argument("pigeonhole_lift: zero row");

    const auto& part = partition168();

    std::vector<bool> hit(part.blocks.size(), false);
    for (VertexSet cf : cofacets(k)) {
        BasisMask mask = 0;
        for (int v : set_to_vertices(cf))
            mask |= BasisMask{1}
                    << (column_index_of_vector(static_cast<std::uint32_t>(dual.row(v - 1))) - 1);
        int blk = part.block_of_basis[mask];
        if (blk < 0) throw std::logic_error("pigeonhole_lift: cofacet block is not a basis");
        hit[static_cast<std::size_t>(blk)] = true;
    }

    int chosen = -1;
    for (std::size_t b = 0; b < part.blocks.size(); ++b)
        if (!hit[b]) {
            chosen = static_cast<int>(b);
            break;
        }
    LiftOutcome out;
    if (chosen < 0) {
        out.failure.reason = "every block of the 168-partition meets the embedded cofacets";
        return out;
    }

    const BitMatrix& g = gl4_enumerate()[static_cast<std::size_t>(
        part.blocks[static_cast<std::size_t>(chosen)].first_generator)];
    BitMatrix translated(k.m, 4);
    for (int i = 0; i < k.m; ++i) {
        std::uint64_t v = dual.row(i), image = 0;
        for (int r = 0; r < 4; ++r)
            image |= static_cast<std::uint64_t>(std::popcount(g.row(r) & v) & 1) << r;
        translated.set_row(i, image);
    }
    return verify_dual_lift(k, translated, IntMatrix::from_bits(translated), LiftMethod::Pigeonhole,
                            /*source_is_translate=*/true);
}

} // namespace toriclift
