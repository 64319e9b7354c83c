#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toriclift/gf2_matrix.hpp"
#include "toriclift/int_matrix.hpp"
#include "toriclift/simplicial_complex.hpp"

namespace toriclift {

// Mod-2 characteristic maps over K are n x m GF(2) matrices whose facet
// column blocks are invertible; dual characteristic maps are m x (m-n)
// matrices whose cofacet row blocks are invertible (equivalently,
// characteristic maps over the dual complex, transposed).

std::vector<VertexSet> cofacets(const SimplicialComplex& k);

// 0-based column/row index lists for a vertex set, ascending.
std::vector<int> set_to_indices(VertexSet s);

bool is_char_map(const SimplicialComplex& k, const BitMatrix& map,
                 VertexSet* first_bad_facet = nullptr);
bool is_dual_char_map(const SimplicialComplex& k, const BitMatrix& dual,
                      VertexSet* first_bad_cofacet = nullptr);

// Gale dualization: columns of the result form the deterministic kernel
// basis of `map`; row i is the dual value at vertex i.
BitMatrix dualize(const SimplicialComplex& k, const BitMatrix& map);
// Inverse direction, a characteristic map whose kernel is spanned by the
// dual's columns. D-J equivalent to any map the dual came from.
BitMatrix dualize_back(const SimplicialComplex& k, const BitMatrix& dual);

// Canonical D-J class representative: rows reduced so the block at the
// lexicographically smallest facet becomes the identity. Dual version uses
// column operations pivoted at the lexicographically smallest cofacet.
BitMatrix dj_normal_form(const SimplicialComplex& k, const BitMatrix& map);
bool dj_equivalent(const SimplicialComplex& k, const BitMatrix& a, const BitMatrix& b);
BitMatrix dual_dj_normal_form(const SimplicialComplex& k, const BitMatrix& dual);
bool dual_dj_equivalent(const SimplicialComplex& k, const BitMatrix& a, const BitMatrix& b);

// Quotient of the map by the span of sigma's columns, over link(K, sigma).
// The quotient basis is completed by standard vectors of lowest index, so the
// output is deterministic; compare projections up to D-J equivalence.
BitMatrix projection(const SimplicialComplex& k, const BitMatrix& map, VertexSet sigma);

// Characteristic map over wedge(K, v) obtained by duplicating v's dual row.
// The dual form is exact row duplication; the primal form is the assembled
// two-pivot frame at the smallest facet containing v.
BitMatrix canonical_extension_dual(const SimplicialComplex& k, const BitMatrix& dual, int v);
BitMatrix canonical_extension(const SimplicialComplex& k, const BitMatrix& map, int v);

// Wedge of an ordered pair of maps at v, when their projections at v agree
// (checked in a fixed frame); nullopt otherwise. wedge_compose(map, map, v)
// always exists and equals the canonical extension up to D-J equivalence.
std::optional<BitMatrix> wedge_compose(const SimplicialComplex& k, const BitMatrix& map1,
                                       const BitMatrix& map2, int v);

std::vector<std::pair<int, int>> repeated_row_pairs(const BitMatrix& dual);

// True when every repeated-row pair of the dual map is a suspended pair of K.
// Injective maps (IDCMs) are trivially quasi-injective.
bool is_quasi_injective(const SimplicialComplex& k, const BitMatrix& dual);
bool is_injective_rows(const BitMatrix& dual);

// Subgroup matrix criterion: S is m x r; the action is free iff for every
// facet the submatrix of S with the facet rows deleted has an r x r minor
// equal to +-1 (over Z) resp. of full rank (over GF(2)).
struct FreeActionReport {
    bool free = false;
    std::string reason;       // set when not free
    VertexSet bad_facet = 0;  // facet witnessing failure, when applicable
};

FreeActionReport is_free_action_z(const SimplicialComplex& k, const IntMatrix& s);
FreeActionReport is_free_action_gf2(const SimplicialComplex& k, const BitMatrix& s);

} // namespace toriclift
