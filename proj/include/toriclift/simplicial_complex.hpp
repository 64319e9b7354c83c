#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toriclift/bitset_util.hpp"

namespace toriclift {

// Pure simplicial complex on vertices 1..m, facets stored as bitmasks of
// equal popcount n. Ghost vertices (in [m] but in no facet) are allowed and
// each one is a minimal non-face. Facets are kept sorted (ascending mask) and
// deduplicated.
struct SimplicialComplex {
    int m = 0;
    int n = 0;
    std::vector<VertexSet> facets;
    // Display names for vertices, e.g. "3_2" for the 2nd copy of 3 under a
    // wedge; empty when vertices are plain 1..m.
    std::vector<std::string> labels;

    int picard_number() const { return m - n; }
    int facet_count() const { return static_cast<int>(facets.size()); }
    std::string label(int v) const {
        return labels.empty() ? std::to_string(v) : labels[static_cast<std::size_t>(v - 1)];
    }
    bool operator==(const SimplicialComplex& o) const {
        return m == o.m && n == o.n && facets == o.facets;
    }
};

// Transient face-set result of a deletion; possibly non-pure.
struct FaceSet {
    int m = 0;
    std::vector<VertexSet> faces; // all nonempty faces, ascending mask order
    std::vector<VertexSet> maximal_faces() const;
};

// Rejects ill-formed input: empty facet list, mixed facet cardinalities,
// vertices outside 1..m, m outside 1..64.
SimplicialComplex from_facets(int m, const std::vector<std::vector<int>>& facets);
SimplicialComplex from_facet_masks(int m, std::vector<VertexSet> facets);

bool is_face(const SimplicialComplex& k, VertexSet sigma);
VertexSet ghost_vertices(const SimplicialComplex& k);

// Every (n-1)-subset of a facet lies in exactly 2 facets. Required whenever a
// complex is asserted to be a PL sphere.
bool is_pseudomanifold(const SimplicialComplex& k);

// All inclusion-minimal non-faces; ghost vertices appear as singletons.
// Ascending mask order.
std::vector<VertexSet> minimal_non_faces(const SimplicialComplex& k);

// Reconstructs the complex on [m] whose faces are exactly the subsets
// containing none of the given non-faces. Inverse of minimal_non_faces for
// pure complexes; throws if the result is not pure. m <= 24.
SimplicialComplex from_minimal_non_faces(int m, const std::vector<VertexSet>& non_faces);

// Link of a face, on the remaining m-1 or m-|sigma| vertices relabeled
// contiguously (original index recorded via labels). Vertices of K outside
// sigma stay present as ghosts unless drop_ghosts.
SimplicialComplex link(const SimplicialComplex& k, VertexSet sigma, bool drop_ghosts = false);

// Faces of K not containing sigma; non-pure in general, so returned as a
// plain face set (with sigma = empty set every face contains it: empty result).
FaceSet deletion(const SimplicialComplex& k, VertexSet sigma);

// Join on disjoint relabeled vertex sets: K2's vertex i becomes m1 + i.
SimplicialComplex join(const SimplicialComplex& k1, const SimplicialComplex& k2);

// K * boundary-of-edge; the suspended pair is the new pair {m+1, m+2}.
SimplicialComplex suspension(const SimplicialComplex& k);

// Wedge at v: (I * lk(v)) cup (dI * (K minus v)). The two copies of v land at
// positions v and v+1; vertices above v shift up by one. Wedging at a ghost
// vertex yields the suspension with the pair placed at {v, v+1}.
SimplicialComplex wedge(const SimplicialComplex& k, int v);

// Same complex computed by duplicating v in every minimal non-face; the two
// constructions must agree (tested as a cross-check, m <= 24 applies).
SimplicialComplex wedge_via_minimal_non_faces(const SimplicialComplex& k, int v);

struct JTuple {
    std::vector<int> entries; // one per base vertex, all >= 1
    int total() const {
        int t = 0;
        for (int e : entries) t += e;
        return t;
    }
    bool operator==(const JTuple& o) const { return entries == o.entries; }
    bool operator<(const JTuple& o) const { return entries < o.entries; }
    std::string to_string() const;
};

// Iterated wedge: vertex i copied J[i] times. Copies of i are contiguous,
// ordered 1_1..1_{j_1}, 2_1, ..., m_{j_m}, and labeled "i_k"; the identity
// tuple returns K with copy labels attached.
SimplicialComplex j_construction(const SimplicialComplex& k, const JTuple& j);

// First copy position of each base vertex in j_construction's labeling.
std::vector<int> j_construction_base_positions(const JTuple& j);

// Facets are the complements of K's facets in [m].
SimplicialComplex dual_complex(const SimplicialComplex& k);

// Full subcomplex on the kept vertices (faces of K contained in `keep`),
// relabeled contiguously in ascending old-vertex order. Throws when the
// maximal kept faces are of mixed size.
SimplicialComplex induced_subcomplex(const SimplicialComplex& k, VertexSet keep);

enum class PairKind { WedgedEdge, SuspendedPair };

struct CoveringPair {
    int v1 = 0;
    int v2 = 0;
    PairKind kind = PairKind::WedgedEdge;
};

// Classifies a specific pair: nullopt unless every facet contains v1 or v2;
// otherwise wedged edge when {v1,v2} is a face, suspended pair when it is a
// (then automatically minimal) non-face.
std::optional<CoveringPair> classify_pair(const SimplicialComplex& k, int v1, int v2);

// Scans all vertex pairs in lexicographic order; wedged edges reported in
// preference to suspended pairs (a wedge decomposition is what callers peel).
std::optional<CoveringPair> find_wedge_or_suspension_pair(const SimplicialComplex& k);

// A PL sphere that is not a wedge. Suspensions are still seeds.
bool is_seed(const SimplicialComplex& k);

// Canonical form under vertex permutation (facets relabeled and sorted,
// minimized lexicographically). Backtracks over permutations refined by
// vertex degree; intended for m <= 16.
std::vector<VertexSet> canonical_form(const SimplicialComplex& k);
bool isomorphic(const SimplicialComplex& a, const SimplicialComplex& b);

} // namespace toriclift
