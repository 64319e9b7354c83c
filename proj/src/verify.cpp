#include "toriclift/verify.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "toriclift/enumeration.hpp"
#include "toriclift/rank4_matroid.hpp"

namespace toriclift {

namespace {

LiftOutcome input_failure(const std::string& reason) {
    LiftOutcome out;
    out.failure.reason = reason;
    return out;
}

// Repeated pair at a wedged edge: the map is the canonical extension of its
// projection at v, whose dual is the row-deleted matrix. Lift the projection
// and duplicate the integral row back in.
LiftOutcome lift_at_wedged_edge(const SimplicialComplex& k, const BitMatrix& dual, int v, int w) {
    SimplicialComplex l = link(k, singleton(v));
    BitMatrix reduced(k.m - 1, dual.cols());
    for (int i = 0; i < k.m - 1; ++i) reduced.set_row(i, dual.row(i < v - 1 ? i : i + 1));
    LiftOutcome rec = find_dual_lift(l, reduced, LiftRoute::Auto);
    if (!rec.ok()) return rec;
    const LiftCertificate& c = *rec.certificate;

    const int w_in_l = w - 2; // 0-based position of w after deleting v < w
    IntMatrix lifted(k.m, c.lift.cols());
    BitMatrix src(k.m, c.source.cols());
    for (int i = 0; i < k.m; ++i) {
        int from = (i == v - 1) ? w_in_l : (i < v - 1 ? i : i - 1);
        src.set_row(i, c.source.row(from));
        for (int j = 0; j < c.lift.cols(); ++j) lifted.at(i, j) = c.lift.at(from, j);
    }
    return verify_dual_lift(k, src, lifted, LiftMethod::Extension, c.source_is_translate);
}

// Repeated pair at a suspended pair: split off the suspension factor. After
// right-multiplying so the repeated row becomes e_1, the complement block of
// the first column is a dual map over the non-suspended part; its lift slots
// under a [1 0...] row pair with the first column lifted entrywise.
LiftOutcome lift_at_suspended_pair(const SimplicialComplex& k, const BitMatrix& dual, int v, int w) {
    const int p = dual.cols();
    std::uint64_t a = dual.row(v - 1);

    // g with a * g = e_1: invert the matrix whose first row is a, completed
    // by standard vectors of lowest index.
    BitMatrix basis(p, p);
    basis.set_row(0, a);
    std::vector<std::uint64_t> echelon{a};
    int filled = 1;
    for (int j = 0; j < p && filled < p; ++j) {
        std::uint64_t cand = std::uint64_t{1} << j, red = cand;
        for (std::uint64_t e : echelon) {
            std::uint64_t low = e & (~e + 1);
            if (red & low) red ^= e;
        }
        if (red == 0) continue;
        echelon.push_back(red);
        basis.set_row(filled++, cand);
    }
    BitMatrix translated = dual.multiplied(inverse2(basis));

    VertexSet keep = full_set(k.m) & ~(singleton(v) | singleton(w));
    SimplicialComplex k2 = induced_subcomplex(k, keep);
    std::vector<int> kept = set_to_vertices(keep);

    BitMatrix inner(k2.m, p - 1);
    std::vector<int> gamma(static_cast<std::size_t>(k2.m));
    for (int t = 0; t < k2.m; ++t) {
        std::uint64_t row = translated.row(kept[static_cast<std::size_t>(t)] - 1);
        gamma[static_cast<std::size_t>(t)] = static_cast<int>(row & 1);
        inner.set_row(t, row >> 1);
    }
    LiftOutcome rec = find_dual_lift(k2, inner, LiftRoute::Auto);
    if (!rec.ok()) return rec;
    const LiftCertificate& c = *rec.certificate;

    IntMatrix lifted(k.m, p);
    BitMatrix src(k.m, p);
    for (int t = 0; t < k2.m; ++t) {
        int i = kept[static_cast<std::size_t>(t)] - 1;
        src.set_row(i, (c.source.row(t) << 1) | static_cast<std::uint64_t>(gamma[static_cast<std::size_t>(t)]));
        lifted.at(i, 0) = gamma[static_cast<std::size_t>(t)];
        for (int j = 0; j < p - 1; ++j) lifted.at(i, j + 1) = c.lift.at(t, j);
    }
    src.set_row(v - 1, 1);
    src.set_row(w - 1, 1);
    lifted.at(v - 1, 0) = 1;
    lifted.at(w - 1, 0) = 1;
    return verify_dual_lift(k, src, lifted, LiftMethod::JoinComposed, /*source_is_translate=*/true);
}

LiftOutcome dispatch_injective(const SimplicialComplex& k, const BitMatrix& dual, LiftRoute route) {
    const int p = k.m - k.n;
    switch (route) {
        case LiftRoute::ZeroOne:
            if (p > 3) return input_failure("zero-one route needs Picard number <= 3");
            return verify_dual_lift(k, dual, IntMatrix::from_bits(dual), LiftMethod::ZeroOne);
        case LiftRoute::Pm1:
            return search_pm1_lift(k, dual);
        case LiftRoute::Pigeonhole:
            return pigeonhole_lift(k, dual);
        case LiftRoute::Auto:
            break;
    }
    if (p <= 3) return verify_dual_lift(k, dual, IntMatrix::from_bits(dual), LiftMethod::ZeroOne);
    if (p == 4) {
        // The pigeonhole route succeeds whenever a partition block misses the
        // embedded cofacets, which is guaranteed below 168 facets; the sign
        // search remains as the fallback for the large complexes.
        LiftOutcome ph = pigeonhole_lift(k, dual);
        if (ph.ok()) return ph;
        return search_pm1_lift(k, dual);
    }
    return input_failure("Picard number exceeds 4: outside the scope of the lifting routes");
}

} // namespace

LiftOutcome find_dual_lift(const SimplicialComplex& k, const BitMatrix& dual, LiftRoute route) {
    if (dual.rows() != k.m || dual.cols() != k.m - k.n)
        throw std::invalid_argument("find_dual_lift: dimension mismatch");
    VertexSet bad = 0;
    if (!is_dual_char_map(k, dual, &bad)) {
        LiftOutcome out = input_failure("input is not a dual characteristic map");
        out.failure.bad_facet = bad;
        return out;
    }
    if (route != LiftRoute::Auto) return dispatch_injective(k, dual, route);

    auto pairs = repeated_row_pairs(dual);
    if (!pairs.empty()) {
        auto [v, w] = pairs.front();
        auto cls = classify_pair(k, v, w);
        if (!cls) return input_failure("repeated rows at a non-covering pair (invalid dual map)");
        return cls->kind == PairKind::WedgedEdge ? lift_at_wedged_edge(k, dual, v, w)
                                                 : lift_at_suspended_pair(k, dual, v, w);
    }
    return dispatch_injective(k, dual, LiftRoute::Auto);
}

MainVerification verify_main(const SimplicialComplex& k, const BitMatrix& subgroup) {
    if (!is_pseudomanifold(k))
        throw std::invalid_argument("verify_main: complex fails the pseudomanifold check");
    if (k.m > k.n + 4) throw std::invalid_argument("verify_main: m > n + 4 is out of scope");
    if (subgroup.rows() != k.m) throw std::invalid_argument("verify_main: subgroup must have m rows");
    auto rep = is_free_action_gf2(k, subgroup);
    if (!rep.free) throw std::invalid_argument("verify_main: subgroup does not act freely (" + rep.reason + ")");

    MainVerification out;
    const int r = subgroup.cols();
    if (r <= 3) {
        out.subgroup = zero_one_subgroup_lift(k, subgroup);
        out.source = subgroup;
        out.certified = true;
        out.route = "zero-one (rank <= 3)";
        return out;
    }
    // r = 4 and the free action forces r <= m - n <= 4, so S is a dual
    // characteristic map.
    LiftOutcome lifted = find_dual_lift(k, subgroup, LiftRoute::Auto);
    if (!lifted.ok()) {
        out.failure = lifted.failure;
        out.route = "dual characteristic map (rank 4)";
        return out;
    }
    out.subgroup = lifted.certificate->lift;
    out.source = lifted.certificate->source;
    out.source_is_translate = lifted.certificate->source_is_translate;
    out.dual_certificate = lifted.certificate;
    out.certified = true;
    out.route = "dual characteristic map (rank 4), " + to_string(lifted.certificate->method);
    return out;
}

namespace {

BasisStepRow process_complex(const std::string& id, const SimplicialComplex& k, bool& all_ok) {
    BasisStepRow row;
    row.id = id;
    row.n = k.n;
    row.m = k.m;
    row.facet_count = k.facet_count();

    EnumerateOptions up_to_dj{true};
    auto quasi = enumerate_quasi_idcm(k, up_to_dj);
    std::vector<BitMatrix> injective;
    for (const auto& d : quasi) {
        if (is_injective_rows(d))
            injective.push_back(d);
        else
            ++row.quasi_only_classes;
        LiftOutcome out = find_dual_lift(k, d, LiftRoute::Auto);
        if (out.ok() && reverify(*out.certificate))
            ++row.certified;
        else {
            ++row.failed;
            all_ok = false;
        }
    }
    row.idcm_classes = static_cast<int>(injective.size());
    row.idcm_up_to_symmetry = static_cast<int>(reduce_idcm_by_symmetry(k, injective).size());
    return row;
}

} // namespace

std::string BasisStepReport::text() const {
    std::ostringstream os;
    os << "basis step: quasi-injective dual maps (up to D-J) and their lifts\n";
    os << "complex\tn\tm\tfacets\tidcm\tidcm~sym\tquasi-only\tcertified\tfailed\n";
    for (const auto& r : rows)
        os << r.id << "\t" << r.n << "\t" << r.m << "\t" << r.facet_count << "\t" << r.idcm_classes
           << "\t" << r.idcm_up_to_symmetry << "\t" << r.quasi_only_classes << "\t" << r.certified
           << "\t" << r.failed << "\n";
    if (database_used) {
        os << "complexes with >= 168 facets supporting an IDCM: " << large_complex_count << "\n";
        for (auto [n, c] : large_complexes_by_n) os << "  n = " << n << ": " << c << "\n";
        os << "IDCM classes over them: " << large_idcm_count << " (" << large_idcm_up_to_symmetry
           << " up to symmetry)\n";
    }
    os << (all_certified ? "all maps certified\n" : "LIFT FAILURES PRESENT\n");
    return os.str();
}

BasisStepReport verify_basis_step(const std::vector<SeedRecord>& db) {
    BasisStepReport report;
    if (db.empty()) {
        for (const auto& name : {"L1", "L2", "L3"}) {
            SimplicialComplex k = *builtin_complex(name);
            report.rows.push_back(process_complex(name, k, report.all_certified));
        }
        return report;
    }

    report.database_used = true;
    std::map<int, int> by_n;
    for (const auto& rec : db) {
        if (rec.picard() != 4) continue;
        WedgeSearchResult found = search_idcm_tuples(rec.complex);
        for (const auto& j : found.hits) {
            SimplicialComplex kj = j_construction(rec.complex, j);
            BasisStepRow row =
                process_complex(rec.id + j.to_string(), kj, report.all_certified);
            ++by_n[row.n];
            ++report.large_complex_count;
            report.large_idcm_count += row.idcm_classes;
            report.large_idcm_up_to_symmetry += row.idcm_up_to_symmetry;
            report.rows.push_back(std::move(row));
        }
    }
    report.large_complexes_by_n.assign(by_n.begin(), by_n.end());
    return report;
}

} // namespace toriclift
