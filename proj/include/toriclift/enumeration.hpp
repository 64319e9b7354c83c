#pragma once

#include <utility>
#include <vector>

#include "toriclift/char_map.hpp"
#include "toriclift/simplicial_complex.hpp"

namespace toriclift {

struct EnumerateOptions {
    bool up_to_dj = false; // emit one normal-form representative per D-J class
};

// All mod-2 characteristic maps over K, by backtracking over vertex
// assignments in descending facet-degree order (ties by index), pruning as
// soon as a partially assigned facet block loses independence. Ghost vertex
// columns are fixed to zero. Output in ascending matrix order; empty when K
// is not colorable. The search tree is sharded across workers by the first
// vertex's assignment.
std::vector<BitMatrix> enumerate_char_maps(const SimplicialComplex& k,
                                           const EnumerateOptions& opts = {});

// All injective mod-2 dual characteristic maps (rows distinct, nonzero,
// cofacet blocks invertible). `allowed_repeats` lists vertex pairs whose rows
// may coincide; passing the suspended pairs of K yields the quasi-injective
// enumeration. Sorted output.
std::vector<BitMatrix> enumerate_idcm(const SimplicialComplex& k,
                                      const EnumerateOptions& opts = {},
                                      const std::vector<std::pair<int, int>>& allowed_repeats = {});

// Existence-only variant with early exit; used by the J-tuple search.
bool has_idcm(const SimplicialComplex& k);

// Quasi-IDCM enumeration: repeats allowed exactly at the suspended pairs.
std::vector<BitMatrix> enumerate_quasi_idcm(const SimplicialComplex& k,
                                            const EnumerateOptions& opts = {});

// Reporting reduction: orbits of the IDCM list under swapping the two dual
// rows at each wedged edge of K (identity on seeds).
std::vector<BitMatrix> reduce_idcm_by_symmetry(const SimplicialComplex& k,
                                               const std::vector<BitMatrix>& idcms);

} // namespace toriclift
