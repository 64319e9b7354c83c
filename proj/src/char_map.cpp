#include "toriclift/char_map.hpp"

#include <algorithm>
#include <stdexcept>

namespace toriclift {

std::vector<VertexSet> cofacets(const SimplicialComplex& k) {
    std::vector<VertexSet> out;
    out.reserve(k.facets.size());
    for (VertexSet f : k.facets) out.push_back(full_set(k.m) & ~f);
    return out;
}

std::vector<int> set_to_indices(VertexSet s) {
    std::vector<int> out;
    for (int v : set_to_vertices(s)) out.push_back(v - 1);
    return out;
}

bool is_char_map(const SimplicialComplex& k, const BitMatrix& map, VertexSet* first_bad_facet) {
    if (map.rows() != k.n || map.cols() != k.m)
        throw std::invalid_argument("is_char_map: dimension mismatch");
    std::vector<VertexSet> ordered = k.facets;
    std::sort(ordered.begin(), ordered.end(), lex_less);
    for (VertexSet f : ordered) {
        if (det2(map.select_columns(set_to_indices(f))) != 1) {
            if (first_bad_facet) *first_bad_facet = f;
            return false;
        }
    }
    return true;
}

bool is_dual_char_map(const SimplicialComplex& k, const BitMatrix& dual, VertexSet* first_bad_cofacet) {
    if (dual.rows() != k.m || dual.cols() != k.m - k.n)
        throw std::invalid_argument("is_dual_char_map: dimension mismatch");
    std::vector<VertexSet> ordered = cofacets(k);
    std::sort(ordered.begin(), ordered.end(), lex_less);
    for (VertexSet cf : ordered) {
        if (det2(dual.select_rows(set_to_indices(cf))) != 1) {
            if (first_bad_cofacet) *first_bad_cofacet = cf;
            return false;
        }
    }
    return true;
}

BitMatrix dualize(const SimplicialComplex& k, const BitMatrix& map) {
    if (map.rows() != k.n || map.cols() != k.m)
        throw std::invalid_argument("dualize: dimension mismatch");
    return kernel_basis2(map);
}

BitMatrix dualize_back(const SimplicialComplex& k, const BitMatrix& dual) {
    if (dual.rows() != k.m || dual.cols() != k.m - k.n)
        throw std::invalid_argument("dualize_back: dimension mismatch");
    return kernel_basis2(dual.transposed()).transposed();
}

namespace {

VertexSet lex_smallest(std::vector<VertexSet> sets) {
    return *std::min_element(sets.begin(), sets.end(), lex_less);
}

} // namespace

BitMatrix dj_normal_form(const SimplicialComplex& k, const BitMatrix& map) {
    std::vector<VertexSet> ordered = k.facets;
    std::sort(ordered.begin(), ordered.end(), lex_less);
    for (VertexSet f : ordered) {
        auto cols = set_to_indices(f);
        if (det2(map.select_columns(cols)) == 1) return row_normal_form(map, cols);
    }
    throw std::invalid_argument("dj_normal_form: no invertible facet block");
}

bool dj_equivalent(const SimplicialComplex& k, const BitMatrix& a, const BitMatrix& b) {
    return dj_normal_form(k, a) == dj_normal_form(k, b);
}

BitMatrix dual_dj_normal_form(const SimplicialComplex& k, const BitMatrix& dual) {
    std::vector<VertexSet> ordered = cofacets(k);
    std::sort(ordered.begin(), ordered.end(), lex_less);
    for (VertexSet cf : ordered) {
        BitMatrix block = dual.select_rows(set_to_indices(cf));
        if (det2(block) == 1) return dual.multiplied(inverse2(block));
    }
    throw std::invalid_argument("dual_dj_normal_form: no invertible cofacet block");
}

bool dual_dj_equivalent(const SimplicialComplex& k, const BitMatrix& a, const BitMatrix& b) {
    return dual_dj_normal_form(k, a) == dual_dj_normal_form(k, b);
}

BitMatrix projection(const SimplicialComplex& k, const BitMatrix& map, VertexSet sigma) {
    if (sigma != 0 && !is_face(k, sigma)) throw std::invalid_argument("projection: sigma not a face");
    int q = set_size(sigma);
    if (q == 0) return map;

    // Basis: sigma's columns first, completed by standard vectors of lowest
    // index; the quotient coordinates are the completed part.
    BitMatrix basis(k.n, k.n);
    auto sigma_cols = set_to_indices(sigma);
    std::vector<std::uint64_t> echelon; // reduced spanning set for rank checks
    auto reduces_to_zero = [&echelon](std::uint64_t v) {
        for (std::uint64_t e : echelon) {
            std::uint64_t low = e & (~e + 1);
            if (v & low) v ^= e;
        }
        return v == 0;
    };
    auto push = [&echelon](std::uint64_t v) { echelon.push_back(v); };

    BitMatrix cols_as_rows = map.select_columns(sigma_cols).transposed();
    for (int i = 0; i < q; ++i) {
        std::uint64_t v = cols_as_rows.row(i);
        if (reduces_to_zero(v))
            throw std::invalid_argument("projection: sigma columns dependent (map invalid on sigma)");
        push(v);
        basis.set_row(i, v); // basis rows are column vectors of the map
    }
    int filled = q;
    for (int j = 0; j < k.n && filled < k.n; ++j) {
        std::uint64_t e = std::uint64_t{1} << j;
        if (reduces_to_zero(e)) continue;
        push(e);
        basis.set_row(filled++, e);
    }
    // basis rows are the chosen basis vectors; g maps them to e_1..e_n.
    BitMatrix g = inverse2(basis.transposed());
    BitMatrix framed = g.multiplied(map);

    std::vector<int> keep_rows, keep_cols;
    for (int i = q; i < k.n; ++i) keep_rows.push_back(i);
    for (int j = 0; j < k.m; ++j)
        if (!contains(sigma, j + 1)) keep_cols.push_back(j);
    return framed.select_rows(keep_rows).select_columns(keep_cols);
}

BitMatrix canonical_extension_dual(const SimplicialComplex& k, const BitMatrix& dual, int v) {
    if (v < 1 || v > k.m) throw std::invalid_argument("canonical_extension: vertex out of range");
    BitMatrix out(k.m + 1, dual.cols());
    for (int i = 0; i < k.m + 1; ++i) {
        int src = i < v ? i : i - 1; // rows v-1 and v (0-based) both copy old row v-1
        out.set_row(i, dual.row(src));
    }
    return out;
}

namespace {

// Frames `map` so that column v becomes e_1 and the rest of the smallest
// facet containing v becomes e_2..e_n. Returns the framed matrix.
BitMatrix frame_at_vertex(const SimplicialComplex& k, const BitMatrix& map, int v) {
    std::vector<VertexSet> with_v;
    for (VertexSet f : k.facets)
        if (contains(f, v)) with_v.push_back(f);
    if (with_v.empty()) throw std::invalid_argument("frame_at_vertex: v lies in no facet");
    VertexSet f = lex_smallest(with_v);
    std::vector<int> cols;
    cols.push_back(v - 1);
    for (int idx : set_to_indices(f & ~singleton(v))) cols.push_back(idx);
    return row_normal_form(map, cols);
}

} // namespace

BitMatrix canonical_extension(const SimplicialComplex& k, const BitMatrix& map, int v) {
    auto built = wedge_compose(k, map, map, v);
    if (!built) throw std::logic_error("canonical_extension: self-compose failed");
    return *built;
}

std::optional<BitMatrix> wedge_compose(const SimplicialComplex& k, const BitMatrix& map1,
                                       const BitMatrix& map2, int v) {
    if (!is_char_map(k, map1) || !is_char_map(k, map2))
        throw std::invalid_argument("wedge_compose: inputs are not characteristic maps");
    BitMatrix f1 = frame_at_vertex(k, map1, v);
    BitMatrix f2 = frame_at_vertex(k, map2, v);
    for (int i = 1; i < k.n; ++i)
        if (f1.row(i) != f2.row(i)) return std::nullopt;

    // Rows: v1's pivot row carries map2's vertex row, v2's carries map1's.
    BitMatrix out(k.n + 1, k.m + 1);
    for (int j = 0; j < k.m + 1; ++j) {
        int v1 = v - 1, v2 = v; // 0-based new positions of the copies
        if (j == v1) {
            out.set(0, j, 1);
            continue;
        }
        if (j == v2) {
            out.set(1, j, 1);
            continue;
        }
        int old_j = j < v1 ? j : j - 1;
        out.set(0, j, f2.get(0, old_j));
        out.set(1, j, f1.get(0, old_j));
        for (int i = 1; i < k.n; ++i) out.set(i + 1, j, f1.get(i, old_j));
    }
    SimplicialComplex w = wedge(k, v);
    if (!is_char_map(w, out)) return std::nullopt;
    return out;
}

std::vector<std::pair<int, int>> repeated_row_pairs(const BitMatrix& dual) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < dual.rows(); ++i)
        for (int j = i + 1; j < dual.rows(); ++j)
            if (dual.row(i) == dual.row(j)) out.emplace_back(i + 1, j + 1);
    return out;
}

bool is_injective_rows(const BitMatrix& dual) { return repeated_row_pairs(dual).empty(); }

bool is_quasi_injective(const SimplicialComplex& k, const BitMatrix& dual) {
    for (auto [v, w] : repeated_row_pairs(dual)) {
        auto c = classify_pair(k, v, w);
        if (!c || c->kind != PairKind::SuspendedPair) return false;
    }
    return true;
}

FreeActionReport is_free_action_z(const SimplicialComplex& k, const IntMatrix& s) {
    FreeActionReport rep;
    if (s.rows() != k.m) throw std::invalid_argument("is_free_action: S must have m rows");
    int r = s.cols();
    if (r > k.m - k.n) {
        rep.reason = "rank exceeds m-n";
        return rep;
    }
    for (VertexSet f : k.facets) {
        std::vector<int> rows;
        for (int i = 0; i < k.m; ++i)
            if (!contains(f, i + 1)) rows.push_back(i);
        IntMatrix sub = s.select_rows(rows);
        bool found = false;
        for (std::uint64_t rs : k_subsets(static_cast<int>(rows.size()), r)) {
            std::vector<int> idx;
            for (int b = 0; b < static_cast<int>(rows.size()); ++b)
                if ((rs >> b) & 1) idx.push_back(b);
            long long d = int_det(sub.select_rows(idx));
            if (d == 1 || d == -1) {
                found = true;
                break;
            }
        }
        if (!found) {
            rep.reason = "no unimodular minor at a facet";
            rep.bad_facet = f;
            return rep;
        }
    }
    rep.free = true;
    return rep;
}

FreeActionReport is_free_action_gf2(const SimplicialComplex& k, const BitMatrix& s) {
    FreeActionReport rep;
    if (s.rows() != k.m) throw std::invalid_argument("is_free_action: S must have m rows");
    int r = s.cols();
    if (r > k.m - k.n) {
        rep.reason = "rank exceeds m-n";
        return rep;
    }
    for (VertexSet f : k.facets) {
        std::vector<int> rows;
        for (int i = 0; i < k.m; ++i)
            if (!contains(f, i + 1)) rows.push_back(i);
        if (rank2(s.select_rows(rows)) != r) {
            rep.reason = "facet-deleted block drops rank";
            rep.bad_facet = f;
            return rep;
        }
    }
    rep.free = true;
    return rep;
}

} // namespace toriclift
