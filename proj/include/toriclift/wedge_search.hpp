#pragma once

#include <vector>

#include "toriclift/seeds.hpp"
#include "toriclift/simplicial_complex.hpp"

namespace toriclift {

// Breadth-first search over J-tuples of a Picard-4 seed, level = sum of the
// tuple. Each level splits into the no-IDCM set (whose successors are pruned:
// dropping a duplicated vertex row keeps an IDCM injective, so no-IDCM is
// inherited upward) and the has-IDCM set, whose >= 168-facet members are
// collected. The walk stops after the level where dim K(J) reaches 10; with
// general_bound it instead runs until the vertex count hits 2^p - 1 = 15, the
// ceiling for any complex supporting an IDCM (both stops coincide at p = 4).
struct WedgeSearchOptions {
    bool general_bound = false;
    int facet_threshold = 168;
};

struct WedgeSearchResult {
    std::vector<JTuple> hits;      // J with an IDCM and >= threshold facets, sorted
    int tuples_examined = 0;
    int levels_processed = 0;
};

WedgeSearchResult search_idcm_tuples(const SimplicialComplex& seed,
                                     const WedgeSearchOptions& opts = {});

} // namespace toriclift
