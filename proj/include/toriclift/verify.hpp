#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toriclift/lifting.hpp"
#include "toriclift/seeds.hpp"
#include "toriclift/wedge_search.hpp"

namespace toriclift {

enum class LiftRoute { Auto, ZeroOne, Pm1, Pigeonhole };

// Lifts a mod-2 dual characteristic map to a {0,+-1} integral one.
//
// Auto routing peels repeated rows first: a repeated pair at a wedged edge is
// the canonical extension of the map over the link (delete the row, lift,
// re-insert); a repeated pair at a suspended pair splits off the suspension
// factor (the map is column-normalized so that both rows become e_1, the
// remaining block with the first column removed is a dual map over the
// non-suspended part of one Picard number less). Once the rows are distinct:
// width <= 3 takes the {0,1} copy, width 4 takes the 168-partition pigeonhole
// for complexes with fewer than 168 facets, and the sign-pattern search
// otherwise (also as fallback when every partition block is hit).
LiftOutcome find_dual_lift(const SimplicialComplex& k, const BitMatrix& dual,
                           LiftRoute route = LiftRoute::Auto);

// End-to-end decision procedure for a freely acting subgroup: S is the m x r
// GF(2) matrix of the subgroup. Ranks r <= 3 are lifted entrywise; r = 4
// (forcing m = n + 4) is the dual-characteristic-map case handled by
// find_dual_lift. Input errors (not a pseudomanifold, m > n + 4, not freely
// acting) throw; a lift failure is reported, not thrown, since it would be a
// counterexample to the theorem under test.
struct MainVerification {
    bool certified = false;
    IntMatrix subgroup;        // integral S, same GF(2) subgroup as the input
    BitMatrix source;          // GF(2) matrix the subgroup reduces to
    bool source_is_translate = false;
    std::optional<LiftCertificate> dual_certificate; // r = 4 route
    LiftFailure failure;
    std::string route;
};

MainVerification verify_main(const SimplicialComplex& k, const BitMatrix& subgroup);

// Basis-step verification over a seed database (built-ins L1, L2, L3 when the
// database is empty): enumerates quasi-injective dual maps up to D-J
// equivalence over each complex and certifies a lift for every one of them.
// With a database, each Picard-4 seed is first expanded by the J-tuple search
// and the >= 168-facet hits are processed as well.
struct BasisStepRow {
    std::string id;
    int n = 0;
    int m = 0;
    int facet_count = 0;
    int idcm_classes = 0;       // injective maps, up to D-J
    int idcm_up_to_symmetry = 0;
    int quasi_only_classes = 0; // quasi-injective with a repeated row
    int certified = 0;
    int failed = 0;
};

struct BasisStepReport {
    std::vector<BasisStepRow> rows;
    bool all_certified = true;
    bool database_used = false;
    // Complexes with >= 168 facets supporting an IDCM, by n; filled only on
    // the database path.
    std::vector<std::pair<int, int>> large_complexes_by_n;
    int large_complex_count = 0;
    int large_idcm_count = 0;
    int large_idcm_up_to_symmetry = 0;
    std::string text() const;
};

BasisStepReport verify_basis_step(const std::vector<SeedRecord>& db);

} // namespace toriclift
