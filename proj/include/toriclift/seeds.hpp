#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toriclift/simplicial_complex.hpp"

namespace toriclift {

// Built-in PL spheres used as fixtures and induction bases. Picard <= 3:
// boundary of an edge, of a square, the pentagon, the octahedron, the cyclic
// polytope boundary dC4(7); Picard 4: the three seeds that admit a
// quasi-injective non-injective dual map, L1 = dI * dP5, L2 = dI^{*4},
// L3 = dI * dC4(7).
SimplicialComplex boundary_of_edge();       // dI, S^0
SimplicialComplex boundary_of_square();     // dI * dI
SimplicialComplex pentagon();               // dP5
SimplicialComplex octahedron();             // dI * dI * dI
SimplicialComplex boundary_of_simplex(int n); // dDelta^n on n+1 vertices
SimplicialComplex cross_polytope(int k);    // dI^{*k}

// Boundary of the cyclic polytope C^4(7): facets generated by Gale's
// evenness condition on 7 vertices (14 facets).
SimplicialComplex cyclic_c4_7();

SimplicialComplex seed_l1();
SimplicialComplex seed_l2();
SimplicialComplex seed_l3();

// Lookup by the names accepted on the command line; nullopt when unknown.
std::optional<SimplicialComplex> builtin_complex(const std::string& name);
std::vector<std::string> builtin_names();

struct SeedRecord {
    std::string id;
    SimplicialComplex complex;
    std::string provenance; // "built-in" or the source file path
    int n() const { return complex.n; }
    int m() const { return complex.m; }
    int picard() const { return complex.picard_number(); }
    int facet_count() const { return complex.facet_count(); }
};

// Built-in seed records of Picard number <= 3 (the five small seeds) and the
// Picard-4 trio L1, L2, L3.
std::vector<SeedRecord> builtin_seed_records();

struct IngestResult {
    std::vector<SeedRecord> records;
    std::vector<std::string> errors; // one line per rejected file; run continues
};

// Reads every regular file in the directory (sorted by name) in the complex
// text format and validates it as a seed: pseudomanifold plus no wedged edge.
// External databases must be converted to that format first; see README.
IngestResult ingest_seed_db(const std::string& directory);

// Seed counts by (n, Picard) in the layout of the published classification
// table; Picard <= 3 rows come from the built-ins, the Picard-4 row from the
// ingested records only.
std::string report_tables(const std::vector<SeedRecord>& ingested);

} // namespace toriclift
