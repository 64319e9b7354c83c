#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "toriclift/enumeration.hpp"
#include "toriclift/io.hpp"
#include "toriclift/rank4_matroid.hpp"
#include "toriclift/seeds.hpp"
#include "toriclift/verify.hpp"
#include "toriclift/wedge_search.hpp"

namespace tl = toriclift;

namespace {

constexpr int kExitCertified = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitInputError = 2;

tl::SimplicialComplex load_complex(const std::string& arg) {
    if (auto k = tl::builtin_complex(arg)) return *k;
    return tl::read_complex_file(arg);
}

std::string facet_string(const tl::SimplicialComplex& k, tl::VertexSet s) {
    std::string out = "{";
    bool first = true;
    for (int v : tl::set_to_vertices(s)) {
        if (!first) out += ",";
        out += k.label(v);
        first = false;
    }
    return out + "}";
}

int cmd_complex_info(const std::string& file) {
    tl::SimplicialComplex k = load_complex(file);
    std::cout << "m = " << k.m << ", n = " << k.n << ", Picard number = " << k.picard_number()
              << "\n";
    std::cout << "facets (" << k.facet_count() << "):";
    for (tl::VertexSet f : k.facets) std::cout << " " << facet_string(k, f);
    std::cout << "\n";
    std::cout << "minimal non-faces:";
    for (tl::VertexSet nf : tl::minimal_non_faces(k)) std::cout << " " << facet_string(k, nf);
    std::cout << "\n";
    std::cout << "pseudomanifold: " << (tl::is_pseudomanifold(k) ? "yes" : "no") << "\n";
    auto pair = tl::find_wedge_or_suspension_pair(k);
    if (!pair) {
        std::cout << "classification: seed (no covering vertex pair)\n";
    } else if (pair->kind == tl::PairKind::WedgedEdge) {
        std::cout << "classification: wedge with wedged edge {" << k.label(pair->v1) << ","
                  << k.label(pair->v2) << "}\n";
    } else {
        std::cout << "classification: suspension (seed if no wedged edge) with suspended pair {"
                  << k.label(pair->v1) << "," << k.label(pair->v2) << "}\n";
    }
    std::cout << "seed: " << (tl::is_seed(k) ? "yes" : "no") << "\n";
    return kExitCertified;
}

int cmd_matrix_det(const std::string& file) {
    tl::MatrixFile mf = tl::read_matrix_file(file);
    if (mf.entries.rows() != mf.entries.cols()) {
        std::cerr << "matrix det: matrix is not square\n";
        return kExitInputError;
    }
    std::cout << tl::int_det(mf.entries) << "\n";
    return kExitCertified;
}

int cmd_matrix_kernel(const std::string& file) {
    tl::MatrixFile mf = tl::read_matrix_file(file);
    tl::BitMatrix kernel = tl::kernel_basis2(mf.entries.mod2());
    std::cout << "kernel basis over GF(2), " << kernel.cols() << " column(s):\n";
    std::cout << tl::matrix_to_text(kernel);
    return kExitCertified;
}

int cmd_charmaps_enumerate(const std::string& complex_file, bool idcm, bool up_to_dj,
                           bool count_only) {
    tl::SimplicialComplex k = load_complex(complex_file);
    tl::EnumerateOptions opts;
    opts.up_to_dj = up_to_dj;
    std::vector<tl::BitMatrix> maps =
        idcm ? tl::enumerate_idcm(k, opts) : tl::enumerate_char_maps(k, opts);
    std::cout << maps.size() << (idcm ? " IDCM" : " characteristic map")
              << (maps.size() == 1 ? "" : "s") << (up_to_dj ? " up to D-J equivalence" : "")
              << "\n";
    if (!count_only)
        for (const auto& m : maps) std::cout << "\n" << tl::matrix_to_text(m);
    return kExitCertified;
}

int cmd_charmaps_check(const std::string& complex_file, const std::string& map_file) {
    tl::SimplicialComplex k = load_complex(complex_file);
    tl::MatrixFile mf = tl::read_matrix_file(map_file);
    tl::BitMatrix m = tl::to_gf2(mf.entries);
    tl::VertexSet bad = 0;
    bool ok;
    if (m.rows() == k.n && m.cols() == k.m) {
        ok = tl::is_char_map(k, m, &bad);
        std::cout << (ok ? "valid characteristic map\n" : "invalid at facet " + facet_string(k, bad) + "\n");
    } else if (m.rows() == k.m && m.cols() == k.m - k.n) {
        ok = tl::is_dual_char_map(k, m, &bad);
        std::cout << (ok ? "valid dual characteristic map\n"
                         : "invalid at cofacet " + facet_string(k, bad) + "\n");
    } else {
        std::cerr << "charmaps check: matrix shape matches neither orientation\n";
        return kExitInputError;
    }
    return ok ? kExitCertified : kExitCounterexample;
}

tl::LiftRoute parse_route(const std::string& name) {
    if (name == "auto") return tl::LiftRoute::Auto;
    if (name == "zero-one") return tl::LiftRoute::ZeroOne;
    if (name == "pm1") return tl::LiftRoute::Pm1;
    if (name == "pigeonhole") return tl::LiftRoute::Pigeonhole;
    throw CLI::ValidationError("--method must be auto|zero-one|pm1|pigeonhole");
}

int cmd_lift_find(const std::string& complex_file, const std::string& map_file,
                  const std::string& method) {
    tl::SimplicialComplex k = load_complex(complex_file);
    tl::MatrixFile mf = tl::read_matrix_file(map_file);
    tl::BitMatrix m = tl::to_gf2(mf.entries);
    if (m.rows() == k.n && m.cols() == k.m) m = tl::dualize(k, m); // primal input
    tl::LiftOutcome out = tl::find_dual_lift(k, m, parse_route(method));
    if (!out.ok()) {
        std::cout << "no {0,+-1}-lift found: " << out.failure.reason << "\n";
        return kExitCounterexample;
    }
    std::cout << tl::certificate_to_json(*out.certificate) << "\n";
    return kExitCertified;
}

int cmd_lift_verify(const std::string& complex_file, const std::string& candidate_file) {
    tl::SimplicialComplex k = load_complex(complex_file);
    tl::MatrixFile mf = tl::read_matrix_file(candidate_file);
    const tl::IntMatrix& cand = mf.entries;
    tl::LiftOutcome out;
    if (cand.rows() == k.m && cand.cols() == k.m - k.n)
        out = tl::verify_dual_lift(k, cand.mod2(), cand);
    else if (cand.rows() == k.n && cand.cols() == k.m)
        out = tl::verify_primal_lift(k, cand.mod2(), cand);
    else {
        std::cerr << "lift verify: matrix shape matches neither orientation\n";
        return kExitInputError;
    }
    if (!out.ok()) {
        std::cout << "not a lift: " << out.failure.reason;
        if (out.failure.bad_facet) std::cout << " at " << facet_string(k, out.failure.bad_facet)
                                             << " (minor " << out.failure.minor << ")";
        std::cout << "\n";
        return kExitCounterexample;
    }
    std::cout << "verified (" << out.certificate->minors_checked() << " minors checked)\n";
    return kExitCertified;
}

int cmd_matroid_analyze() {
    const auto& m = tl::rank4_matroid();
    const auto& p = tl::partition168();
    int det1 = 0, det3 = 0;
    for (long long d : m.basis_abs_det) (d == 1 ? det1 : det3)++;
    std::cout << "bases: " << m.bases.size() << " (|det| = 1: " << det1 << ", |det| = 3: " << det3
              << ")\n";
    std::cout << "determinant-3 bases (column index sets):\n";
    for (tl::BasisMask mask : m.det3_sets) {
        std::cout << "  {";
        bool first = true;
        for (int b = 0; b < 15; ++b)
            if ((mask >> b) & 1) {
                if (!first) std::cout << ",";
                std::cout << (b + 1);
                first = false;
            }
        std::cout << "}\n";
    }
    std::cout << "partition blocks: " << p.blocks.size() << " of size 5, each from "
              << p.blocks.front().generator_count << " group elements\n";
    std::cout << "unique |det| = 3 block index: " << p.det3_block << "\n";
    return kExitCertified;
}

int cmd_matroid_lift(const std::string& complex_file, const std::string& idcm_file) {
    tl::SimplicialComplex k = load_complex(complex_file);
    tl::MatrixFile mf = tl::read_matrix_file(idcm_file);
    tl::LiftOutcome out = tl::pigeonhole_lift(k, tl::to_gf2(mf.entries));
    if (!out.ok()) {
        std::cout << "no disjoint partition block: " << out.failure.reason << "\n";
        return kExitCounterexample;
    }
    std::cout << tl::certificate_to_json(*out.certificate) << "\n";
    return kExitCertified;
}

int cmd_verify_main(const std::string& complex_file, const std::string& subgroup_file) {
    tl::SimplicialComplex k = load_complex(complex_file);
    tl::MatrixFile mf = tl::read_matrix_file(subgroup_file);
    tl::MainVerification v = tl::verify_main(k, mf.entries.mod2());
    if (!v.certified) {
        std::cout << "NOT CERTIFIED: " << v.failure.reason << "\n";
        return kExitCounterexample;
    }
    std::cout << "certified via " << v.route << "\n";
    if (v.source_is_translate)
        std::cout << "(integral subgroup matrix below induces the same GF(2) subgroup)\n";
    std::cout << tl::matrix_to_text(v.subgroup);
    return kExitCertified;
}

int cmd_verify_basis(const std::string& db_dir) {
    std::vector<tl::SeedRecord> db;
    if (!db_dir.empty()) {
        tl::IngestResult ingest = tl::ingest_seed_db(db_dir);
        for (const auto& e : ingest.errors) std::cerr << "skipped " << e << "\n";
        db = std::move(ingest.records);
    }
    tl::BasisStepReport report = tl::verify_basis_step(db);
    std::cout << report.text();
    return report.all_certified ? kExitCertified : kExitCounterexample;
}

int cmd_search_alg168(const std::string& seed_arg, bool general_bound) {
    tl::SimplicialComplex seed = load_complex(seed_arg);
    tl::WedgeSearchOptions opts;
    opts.general_bound = general_bound;
    tl::WedgeSearchResult res = tl::search_idcm_tuples(seed, opts);
    std::cout << "examined " << res.tuples_examined << " tuples over " << res.levels_processed
              << " levels\n";
    std::cout << res.hits.size() << " tuple(s) with an IDCM and >= " << opts.facet_threshold
              << " facets\n";
    for (const auto& j : res.hits) std::cout << "  " << j.to_string() << "\n";
    return kExitCertified;
}

int cmd_report_tables(const std::string& db_dir) {
    std::vector<tl::SeedRecord> db;
    if (!db_dir.empty()) {
        tl::IngestResult ingest = tl::ingest_seed_db(db_dir);
        for (const auto& e : ingest.errors) std::cerr << "skipped " << e << "\n";
        db = std::move(ingest.records);
    }
    std::cout << tl::report_tables(db);
    return kExitCertified;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"toric-lift: combinatorial lifting toolkit for PL spheres of small Picard number"};
    app.footer("Set TORIC_LIFT_THREADS to cap the worker pool. Complex arguments accept built-in "
               "names (dI, square, dP5, octahedron, dC47, L1, L2, L3) or file paths.");
    app.require_subcommand(1);

    std::string file_a, file_b, method = "auto", db_dir;
    bool flag_idcm = false, flag_dj = false, flag_count = false, flag_general = false;
    int rc = kExitCertified;

    auto* complex_cmd = app.add_subcommand("complex", "complex operations")->require_subcommand(1);
    auto* info = complex_cmd->add_subcommand("info", "print complex summary");
    info->add_option("file", file_a, "complex file or built-in name")->required();
    info->callback([&] { rc = cmd_complex_info(file_a); });

    auto* matrix_cmd = app.add_subcommand("matrix", "exact matrix operations")->require_subcommand(1);
    auto* det = matrix_cmd->add_subcommand("det", "exact integer determinant");
    det->add_option("file", file_a)->required();
    det->callback([&] { rc = cmd_matrix_det(file_a); });
    auto* kern = matrix_cmd->add_subcommand("kernel", "GF(2) kernel basis");
    kern->add_option("file", file_a)->required();
    kern->callback([&] { rc = cmd_matrix_kernel(file_a); });

    auto* charmaps = app.add_subcommand("charmaps", "mod-2 characteristic maps")->require_subcommand(1);
    auto* enumerate = charmaps->add_subcommand("enumerate", "enumerate maps over a complex");
    enumerate->add_option("complex", file_a)->required();
    enumerate->add_flag("--idcm", flag_idcm, "enumerate injective dual maps instead");
    enumerate->add_flag("--up-to-dj", flag_dj, "one representative per D-J class");
    enumerate->add_flag("--count-only", flag_count, "print only the count");
    enumerate->callback([&] { rc = cmd_charmaps_enumerate(file_a, flag_idcm, flag_dj, flag_count); });
    auto* check = charmaps->add_subcommand("check", "validate a map over a complex");
    check->add_option("complex", file_a)->required();
    check->add_option("map", file_b)->required();
    check->callback([&] { rc = cmd_charmaps_check(file_a, file_b); });

    auto* lift = app.add_subcommand("lift", "integral lifts")->require_subcommand(1);
    auto* find = lift->add_subcommand("find", "search for a {0,+-1} lift");
    find->add_option("complex", file_a)->required();
    find->add_option("map", file_b)->required();
    find->add_option("--method", method, "auto|zero-one|pm1|pigeonhole")->capture_default_str();
    find->callback([&] { rc = cmd_lift_find(file_a, file_b, method); });
    auto* lverify = lift->add_subcommand("verify", "verify a lift candidate");
    lverify->add_option("complex", file_a)->required();
    lverify->add_option("candidate", file_b)->required();
    lverify->callback([&] { rc = cmd_lift_verify(file_a, file_b); });

    auto* matroid = app.add_subcommand("matroid", "rank-4 binary matroid")->require_subcommand(1);
    matroid->add_subcommand("analyze", "basis census and 168-block partition")->callback([&] {
        rc = cmd_matroid_analyze();
    });
    auto* mlift = matroid->add_subcommand("lift", "pigeonhole lift of an IDCM");
    mlift->add_option("complex", file_a)->required();
    mlift->add_option("idcm", file_b)->required();
    mlift->callback([&] { rc = cmd_matroid_lift(file_a, file_b); });

    auto* verify = app.add_subcommand("verify", "theorem-level verification")->require_subcommand(1);
    auto* vmain = verify->add_subcommand("main", "certify a freely acting subgroup");
    vmain->add_option("complex", file_a)->required();
    vmain->add_option("subgroup", file_b, "m x r matrix over GF(2)")->required();
    vmain->callback([&] { rc = cmd_verify_main(file_a, file_b); });
    auto* vbasis = verify->add_subcommand("basis", "basis-step verification over seeds");
    vbasis->add_option("--db", db_dir, "directory of complex files");
    vbasis->callback([&] { rc = cmd_verify_basis(db_dir); });

    auto* search = app.add_subcommand("search", "frontier searches")->require_subcommand(1);
    auto* alg = search->add_subcommand("alg168", "J-tuples with an IDCM and >= 168 facets");
    alg->add_option("seed", file_a)->required();
    alg->add_flag("--general-bound", flag_general, "stop at the 2^p - 1 vertex bound instead of dim 10");
    alg->callback([&] { rc = cmd_search_alg168(file_a, flag_general); });

    auto* report = app.add_subcommand("report", "summary reports")->require_subcommand(1);
    auto* tables = report->add_subcommand("tables", "seed counts by (n, Picard)");
    tables->add_option("--db", db_dir, "directory of complex files");
    tables->callback([&] { rc = cmd_report_tables(db_dir); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitCertified : kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return rc;
}
