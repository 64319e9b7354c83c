#include "toriclift/lifting.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>

#include "toriclift/parallel.hpp"

namespace toriclift {

std::string to_string(LiftMethod m) {
    switch (m) {
        case LiftMethod::ZeroOne: return "zero-one";
        case LiftMethod::Pm1Search: return "pm1-search";
        case LiftMethod::Pigeonhole: return "pigeonhole";
        case LiftMethod::JoinComposed: return "join-composed";
        case LiftMethod::Extension: return "extension";
    }
    return "?";
}

namespace {

void require_pm1_entries(const IntMatrix& m, const char* who) {
    if (!m.entries_in(-1, 1)) throw std::invalid_argument(std::string(who) + ": entry outside {-1,0,1}");
}

LiftOutcome verify_blocks(const SimplicialComplex& k, const BitMatrix& source,
                          const IntMatrix& candidate, bool dual_form, LiftMethod method,
                          bool source_is_translate) {
    require_pm1_entries(candidate, "verify_lift");
    LiftOutcome out;
    if (candidate.mod2() != source) {
        out.failure.reason = "candidate does not reduce to the source map mod 2";
        return out;
    }
    std::vector<VertexSet> blocks = dual_form ? cofacets(k) : k.facets;
    std::vector<VertexSet> ordered = blocks;
    std::sort(ordered.begin(), ordered.end(), lex_less);
    for (VertexSet b : ordered) {
        auto idx = set_to_indices(b);
        long long d = dual_form ? int_det(candidate.select_rows(idx))
                                : int_det(candidate.select_columns(idx));
        if (d != 1 && d != -1) {
            out.failure.reason = dual_form ? "cofacet minor is not +-1" : "facet minor is not +-1";
            out.failure.bad_facet = b;
            out.failure.minor = d;
            return out;
        }
    }
    LiftCertificate cert;
    cert.complex = k;
    cert.dual_form = dual_form;
    cert.source = source;
    cert.source_is_translate = source_is_translate;
    cert.lift = candidate;
    cert.method = method;
    cert.minors.reserve(blocks.size());
    for (VertexSet b : blocks) {
        auto idx = set_to_indices(b);
        cert.minors.push_back(dual_form ? int_det(candidate.select_rows(idx))
                                        : int_det(candidate.select_columns(idx)));
    }
    out.certificate = std::move(cert);
    return out;
}

} // namespace

LiftOutcome verify_dual_lift(const SimplicialComplex& k, const BitMatrix& source,
                             const IntMatrix& candidate, LiftMethod method,
                             bool source_is_translate) {
    if (candidate.rows() != k.m || candidate.cols() != k.m - k.n)
        throw std::invalid_argument("verify_dual_lift: dimension mismatch");
    return verify_blocks(k, source, candidate, /*dual_form=*/true, method, source_is_translate);
}

LiftOutcome verify_primal_lift(const SimplicialComplex& k, const BitMatrix& source,
                               const IntMatrix& candidate, LiftMethod method,
                               bool source_is_translate) {
    if (candidate.rows() != k.n || candidate.cols() != k.m)
        throw std::invalid_argument("verify_primal_lift: dimension mismatch");
    return verify_blocks(k, source, candidate, /*dual_form=*/false, method, source_is_translate);
}

bool reverify(const LiftCertificate& cert) {
    LiftOutcome again = cert.dual_form
                            ? verify_dual_lift(cert.complex, cert.source, cert.lift, cert.method,
                                               cert.source_is_translate)
                            : verify_primal_lift(cert.complex, cert.source, cert.lift, cert.method,
                                                 cert.source_is_translate);
    return again.ok() && again.certificate->minors == cert.minors;
}

LiftCertificate zero_one_lift_small_rank(const SimplicialComplex& k, const BitMatrix& dual) {
    if (k.m - k.n > 3)
        throw std::invalid_argument("zero_one_lift_small_rank: width m-n exceeds 3");
    LiftOutcome out = verify_dual_lift(k, dual, IntMatrix::from_bits(dual), LiftMethod::ZeroOne);
    if (!out.ok())
        throw std::logic_error("zero_one_lift_small_rank: {0,1} copy failed verification: " +
                               out.failure.reason);
    return *out.certificate;
}

IntMatrix zero_one_subgroup_lift(const SimplicialComplex& k, const BitMatrix& s) {
    if (s.cols() > 3) throw std::invalid_argument("zero_one_subgroup_lift: rank exceeds 3");
    IntMatrix lift = IntMatrix::from_bits(s);
    auto rep = is_free_action_z(k, lift);
    if (!rep.free)
        throw std::logic_error("zero_one_subgroup_lift: {0,1} copy not free over Z: " + rep.reason);
    return lift;
}

namespace {

// Tests one sign pattern against all cofacets, moving the failing cofacet to
// the front of the scan order (fail-first; the subset scan itself stays
// exhaustive so results are unchanged).
bool passes_cofacets(const IntMatrix& cand, std::vector<std::vector<int>>& scan_order) {
    for (std::size_t pos = 0; pos < scan_order.size(); ++pos) {
        long long d = int_det(cand.select_rows(scan_order[pos]));
        if (d != 1 && d != -1) {
            if (pos > 0) {
                auto failed = scan_order[pos];
                scan_order.erase(scan_order.begin() + static_cast<long>(pos));
                scan_order.insert(scan_order.begin(), failed);
            }
            return false;
        }
    }
    return true;
}

} // namespace

std::optional<IntMatrix> search_pm1_lift(const std::vector<VertexSet>& cofacet_list,
                                         const BitMatrix& dual) {
    const int p = dual.cols();
    std::vector<std::pair<int, int>> nonzero; // (row, col) positions, row-major
    for (int i = 0; i < dual.rows(); ++i)
        for (int j = 0; j < p; ++j)
            if (dual.get(i, j)) nonzero.emplace_back(i, j);
    const int total = static_cast<int>(nonzero.size());

    std::vector<std::vector<int>> base_order;
    for (VertexSet cf : cofacet_list) base_order.push_back(set_to_indices(cf));

    IntMatrix zero_one = IntMatrix::from_bits(dual);

    // i = 0: the plain {0,1} copy.
    {
        auto order = base_order;
        if (passes_cofacets(zero_one, order)) return zero_one;
    }

    for (int i = 1; i <= total; ++i) {
        // Shard i-subsets by their first (smallest) flipped position; each
        // shard scans lexicographically, the merge takes the smallest first
        // position that succeeded, so the overall order is (size, lex).
        std::vector<std::optional<IntMatrix>> found(static_cast<std::size_t>(total));
        std::atomic<int> best_first{total};
        parallel_shards(static_cast<std::size_t>(total - i + 1),
                        [&](std::size_t, std::size_t b, std::size_t e) {
            auto order = base_order;
            for (std::size_t first = b; first < e; ++first) {
                if (static_cast<int>(first) > best_first.load(std::memory_order_relaxed)) break;
                // Lexicographic subsets of {first+1, ..., total-1} of size i-1,
                // prefixed by `first`.
                std::vector<int> subset(static_cast<std::size_t>(i));
                subset[0] = static_cast<int>(first);
                for (int t = 1; t < i; ++t) subset[static_cast<std::size_t>(t)] = static_cast<int>(first) + t;
                if (subset.back() >= total) continue;
                while (true) {
                    IntMatrix cand = zero_one;
                    for (int s : subset) cand.at(nonzero[static_cast<std::size_t>(s)].first,
                                                 nonzero[static_cast<std::size_t>(s)].second) = -1;
                    if (passes_cofacets(cand, order)) {
                        found[first] = cand;
                        int cur = best_first.load(std::memory_order_relaxed);
                        while (static_cast<int>(first) < cur &&
                               !best_first.compare_exchange_weak(cur, static_cast<int>(first))) {
                        }
                        break;
                    }
                    // next lexicographic i-subset with fixed first element
                    int t = i - 1;
                    while (t >= 1 && subset[static_cast<std::size_t>(t)] == total - (i - t)) --t;
                    if (t < 1) break;
                    ++subset[static_cast<std::size_t>(t)];
                    for (int u = t + 1; u < i; ++u)
                        subset[static_cast<std::size_t>(u)] = subset[static_cast<std::size_t>(u - 1)] + 1;
                }
            }
        });
        for (int f = 0; f < total; ++f)
            if (found[static_cast<std::size_t>(f)]) return found[static_cast<std::size_t>(f)];
    }
    return std::nullopt;
}

LiftOutcome search_pm1_lift(const SimplicialComplex& k, const BitMatrix& dual) {
    if (dual.rows() != k.m || dual.cols() != k.m - k.n)
        throw std::invalid_argument("search_pm1_lift: dimension mismatch");
    auto lift = search_pm1_lift(cofacets(k), dual);
    LiftOutcome out;
    if (!lift) {
        out.failure.reason = "no {0,+-1}-lift found (sign patterns exhausted)";
        return out;
    }
    return verify_dual_lift(k, dual, *lift, LiftMethod::Pm1Search);
}

LiftOutcome lift_canonical_extension(const LiftCertificate& cert, int v) {
    if (!cert.dual_form)
        throw std::invalid_argument("lift_canonical_extension: certificate must be dual-form");
    const SimplicialComplex& k = cert.complex;
    if (v < 1 || v > k.m) throw std::invalid_argument("lift_canonical_extension: vertex out of range");
    SimplicialComplex w = wedge(k, v);
    BitMatrix src = canonical_extension_dual(k, cert.source, v);
    IntMatrix lifted(k.m + 1, cert.lift.cols());
    for (int i = 0; i < k.m + 1; ++i) {
        int from = i < v ? i : i - 1;
        for (int j = 0; j < cert.lift.cols(); ++j) lifted.at(i, j) = cert.lift.at(from, j);
    }
    return verify_dual_lift(w, src, lifted, LiftMethod::Extension, cert.source_is_translate);
}

LiftOutcome join_lift(const LiftCertificate& cert1, const LiftCertificate& cert2,
                      const BitMatrix& coupling) {
    if (cert1.dual_form || cert2.dual_form)
        throw std::invalid_argument("join_lift: certificates must be primal-form");
    const SimplicialComplex& k1 = cert1.complex;
    const SimplicialComplex& k2 = cert2.complex;
    if (k2.m == 0) {
        LiftOutcome out;
        out.certificate = cert1;
        return out;
    }
    if (coupling.rows() != k2.n || coupling.cols() != k1.m)
        throw std::invalid_argument("join_lift: coupling block must be n2 x m1");
    SimplicialComplex joined = join(k1, k2);

    const int n = k1.n + k2.n, m = k1.m + k2.m;
    IntMatrix cand(n, m);
    BitMatrix src(n, m);
    for (int i = 0; i < k1.n; ++i)
        for (int j = 0; j < k1.m; ++j) {
            cand.at(i, j) = cert1.lift.at(i, j);
            src.set(i, j, cert1.source.get(i, j));
        }
    for (int i = 0; i < k2.n; ++i) {
        for (int j = 0; j < k1.m; ++j) {
            cand.at(k1.n + i, j) = coupling.get(i, j);
            src.set(k1.n + i, j, coupling.get(i, j));
        }
        for (int j = 0; j < k2.m; ++j) {
            cand.at(k1.n + i, k1.m + j) = cert2.lift.at(i, j);
            src.set(k1.n + i, k1.m + j, cert2.source.get(i, j));
        }
    }
    return verify_primal_lift(joined, src, cand, LiftMethod::JoinComposed,
                              cert1.source_is_translate || cert2.source_is_translate);
}

namespace {

// Exact inverse of a unimodular integer matrix via the adjugate.
IntMatrix unimodular_inverse(const IntMatrix& m) {
    int n = m.rows();
    long long det = int_det(m);
    if (det != 1 && det != -1) throw std::invalid_argument("unimodular_inverse: det not +-1");
    IntMatrix inv(n, n);
    if (n == 0) return inv;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<int> rows, cols;
            for (int r = 0; r < n; ++r)
                if (r != j) rows.push_back(r);
            for (int c = 0; c < n; ++c)
                if (c != i) cols.push_back(c);
            long long cof = int_det(m.select_rows(rows).select_columns(cols));
            if ((i + j) % 2) cof = -cof;
            inv.at(i, j) = cof * det; // det is +-1, so this divides by det
        }
    return inv;
}

// Kernel basis of M (r x c, r < c) using the unimodular block on pivot_cols:
// one basis column per non-pivot column j, with 1 at j and -inv(P)*M_j on the
// pivot rows.
IntMatrix integral_kernel(const IntMatrix& m, const std::vector<int>& pivot_cols) {
    const int r = m.rows(), c = m.cols();
    IntMatrix pivot_inv = unimodular_inverse(m.select_columns(pivot_cols));
    std::vector<int> non_pivot;
    std::vector<bool> is_pivot(static_cast<std::size_t>(c), false);
    for (int pc : pivot_cols) is_pivot[static_cast<std::size_t>(pc)] = true;
    for (int j = 0; j < c; ++j)
        if (!is_pivot[static_cast<std::size_t>(j)]) non_pivot.push_back(j);

    IntMatrix kernel(c, c - r);
    for (std::size_t t = 0; t < non_pivot.size(); ++t) {
        int j = non_pivot[t];
        kernel.at(j, static_cast<int>(t)) = 1;
        for (int i = 0; i < r; ++i) {
            long long acc = 0;
            for (int s = 0; s < r; ++s) acc += pivot_inv.at(i, s) * m.at(s, j);
            kernel.at(pivot_cols[static_cast<std::size_t>(i)], static_cast<int>(t)) = -acc;
        }
    }
    return kernel;
}

} // namespace

LiftOutcome dual_lift_transfer(const LiftCertificate& primal_cert) {
    if (primal_cert.dual_form)
        throw std::invalid_argument("dual_lift_transfer: expected a primal-form certificate");
    const SimplicialComplex& k = primal_cert.complex;
    LiftOutcome out;
    if (k.m == k.n) {
        // Picard 0: empty dual, vacuously certified.
        return verify_dual_lift(k, BitMatrix(k.m, 0), IntMatrix(k.m, 0), LiftMethod::ZeroOne,
                                primal_cert.source_is_translate);
    }
    std::vector<VertexSet> ordered = k.facets;
    std::sort(ordered.begin(), ordered.end(), lex_less);
    IntMatrix kernel = integral_kernel(primal_cert.lift, set_to_indices(ordered.front()));
    if (!kernel.entries_in(-1, 1)) {
        out.failure.reason = "integral kernel leaves the {0,+-1} entry range";
        return out;
    }
    return verify_dual_lift(k, kernel.mod2(), kernel, primal_cert.method, /*source_is_translate=*/true);
}

LiftOutcome primal_lift_transfer(const LiftCertificate& dual_cert) {
    if (!dual_cert.dual_form)
        throw std::invalid_argument("primal_lift_transfer: expected a dual-form certificate");
    const SimplicialComplex& k = dual_cert.complex;
    LiftOutcome out;
    if (k.n == 0) {
        return verify_primal_lift(k, BitMatrix(0, k.m), IntMatrix(0, k.m), LiftMethod::ZeroOne,
                                  dual_cert.source_is_translate);
    }
    std::vector<VertexSet> ordered = cofacets(k);
    std::sort(ordered.begin(), ordered.end(), lex_less);
    IntMatrix transposed(dual_cert.lift.cols(), dual_cert.lift.rows());
    for (int i = 0; i < dual_cert.lift.rows(); ++i)
        for (int j = 0; j < dual_cert.lift.cols(); ++j) transposed.at(j, i) = dual_cert.lift.at(i, j);
    IntMatrix kernel = integral_kernel(transposed, set_to_indices(ordered.front()));
    if (!kernel.entries_in(-1, 1)) {
        out.failure.reason = "integral kernel leaves the {0,+-1} entry range";
        return out;
    }
    IntMatrix primal(k.n, k.m);
    for (int i = 0; i < k.m; ++i)
        for (int j = 0; j < k.n; ++j) primal.at(j, i) = kernel.at(i, j);
    return verify_primal_lift(k, primal.mod2(), primal, dual_cert.method, /*source_is_translate=*/true);
}

} // namespace toriclift
