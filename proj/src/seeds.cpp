#include "toriclift/seeds.hpp"

#include <algorithm>
#include <filesystem>
#include <map>
#include <sstream>

#include "toriclift/io.hpp"

namespace toriclift {

SimplicialComplex boundary_of_edge() { return from_facets(2, {{1}, {2}}); }

SimplicialComplex boundary_of_square() { return join(boundary_of_edge(), boundary_of_edge()); }

SimplicialComplex pentagon() { return from_facets(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}}); }

SimplicialComplex octahedron() { return cross_polytope(3); }

SimplicialComplex boundary_of_simplex(int n) {
    if (n < 1) throw std::invalid_argument("boundary_of_simplex: n >= 1 required");
    std::vector<VertexSet> facets;
    VertexSet all = full_set(n + 1);
    for (int v = 1; v <= n + 1; ++v) facets.push_back(all & ~singleton(v));
    return from_facet_masks(n + 1, std::move(facets));
}

SimplicialComplex cross_polytope(int k) {
    if (k < 1) throw std::invalid_argument("cross_polytope: k >= 1 required");
    SimplicialComplex out = boundary_of_edge();
    for (int i = 1; i < k; ++i) out = join(out, boundary_of_edge());
    return out;
}

SimplicialComplex cyclic_c4_7() {
    // Gale evenness: a 4-subset S of [7] is a facet iff every two vertices
    // outside S have an even number of elements of S strictly between them.
    std::vector<VertexSet> facets;
    for (std::uint64_t sub : k_subsets(7, 4)) {
        auto s = static_cast<VertexSet>(sub);
        bool even = true;
        for (int i = 1; i <= 7 && even; ++i) {
            if (contains(s, i)) continue;
            for (int j = i + 1; j <= 7 && even; ++j) {
                if (contains(s, j)) continue;
                int between = 0;
                for (int t = i + 1; t < j; ++t)
                    if (contains(s, t)) ++between;
                if (between % 2) even = false;
            }
        }
        if (even) facets.push_back(s);
    }
    return from_facet_masks(7, std::move(facets));
}

SimplicialComplex seed_l1() { return join(boundary_of_edge(), pentagon()); }
SimplicialComplex seed_l2() { return cross_polytope(4); }
SimplicialComplex seed_l3() { return join(boundary_of_edge(), cyclic_c4_7()); }

std::optional<SimplicialComplex> builtin_complex(const std::string& name) {
    if (name == "dI") return boundary_of_edge();
    if (name == "square") return boundary_of_square();
    if (name == "dP5" || name == "pentagon") return pentagon();
    if (name == "octahedron") return octahedron();
    if (name == "dC47") return cyclic_c4_7();
    if (name == "L1") return seed_l1();
    if (name == "L2") return seed_l2();
    if (name == "L3") return seed_l3();
    return std::nullopt;
}

std::vector<std::string> builtin_names() {
    return {"dI", "square", "dP5", "octahedron", "dC47", "L1", "L2", "L3"};
}

std::vector<SeedRecord> builtin_seed_records() {
    std::vector<SeedRecord> out;
    for (const auto& name : builtin_names()) {
        SeedRecord rec;
        rec.id = name;
        rec.complex = *builtin_complex(name);
        rec.provenance = "built-in";
        out.push_back(std::move(rec));
    }
    return out;
}

IngestResult ingest_seed_db(const std::string& directory) {
    IngestResult result;
    namespace fs = std::filesystem;
    if (!fs::is_directory(directory)) {
        result.errors.push_back(directory + ": not a directory");
        return result;
    }
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(directory))
        if (entry.is_regular_file()) files.push_back(entry.path());
    std::sort(files.begin(), files.end());

    for (const auto& path : files) {
        try {
            SimplicialComplex k = read_complex_file(path.string());
            if (!is_pseudomanifold(k)) {
                result.errors.push_back(path.filename().string() + ": pseudomanifold check failed");
                continue;
            }
            if (!is_seed(k)) {
                result.errors.push_back(path.filename().string() + ": has a wedged edge (not a seed)");
                continue;
            }
            SeedRecord rec;
            rec.id = path.stem().string();
            rec.complex = std::move(k);
            rec.provenance = path.string();
            result.records.push_back(std::move(rec));
        } catch (const std::exception& e) {
            result.errors.push_back(path.filename().string() + ": " + e.what());
        }
    }
    return result;
}

std::string report_tables(const std::vector<SeedRecord>& ingested) {
    std::map<std::pair<int, int>, int> count; // (picard, n) -> seeds
    for (const auto& rec : builtin_seed_records())
        if (rec.picard() <= 3) ++count[{rec.picard(), rec.n()}];
    for (const auto& rec : ingested)
        if (rec.picard() == 4) ++count[{4, rec.n()}];

    int max_n = 1;
    for (const auto& [key, c] : count) max_n = std::max(max_n, key.second);

    std::ostringstream os;
    os << "colorable seeds by (Picard number p, dimension parameter n)\n";
    os << "p\\n";
    for (int n = 1; n <= max_n; ++n) os << "\t" << n;
    os << "\ttotal\n";
    for (int p = 1; p <= 4; ++p) {
        os << p;
        int total = 0;
        for (int n = 1; n <= max_n; ++n) {
            os << "\t";
            auto it = count.find({p, n});
            if (it != count.end()) {
                os << it->second;
                total += it->second;
            }
        }
        os << "\t" << total;
        if (p == 4 && ingested.empty()) os << "\t(no database ingested)";
        os << "\n";
    }
    return os.str();
}

} // namespace toriclift
