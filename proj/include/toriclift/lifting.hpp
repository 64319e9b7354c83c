#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toriclift/char_map.hpp"

namespace toriclift {

enum class LiftMethod { ZeroOne, Pm1Search, Pigeonhole, JoinComposed, Extension };

std::string to_string(LiftMethod m);

// A verified integral lift of a mod-2 (dual) characteristic map. Dual form
// is the default storage: the matrix is m x (m-n) and the checked minors are
// the cofacet row blocks; primal form is n x m with facet column minors.
//
// `source` is the exact GF(2) matrix the lift reduces to. Construction
// routes that operate up to D-J equivalence (pigeonhole, join assembly)
// certify a recorded D-J translate of the caller's input and set
// `source_is_translate`; lift existence is a D-J class property, so the
// translate certifies the input's class.
struct LiftCertificate {
    SimplicialComplex complex;
    bool dual_form = true;
    BitMatrix source;
    bool source_is_translate = false;
    IntMatrix lift;                 // entries in {-1,0,1}
    std::vector<long long> minors;  // one per facet/cofacet, in facet order
    LiftMethod method = LiftMethod::ZeroOne;

    int minors_checked() const { return static_cast<int>(minors.size()); }
};

struct LiftFailure {
    std::string reason;
    VertexSet bad_facet = 0;   // facet (primal) or cofacet (dual) at fault
    long long minor = 0;       // its determinant, when that is the fault
};

struct LiftOutcome {
    std::optional<LiftCertificate> certificate;
    LiftFailure failure; // meaningful when !certificate
    bool ok() const { return certificate.has_value(); }
};

// Checks entries, mod-2 agreement with `source`, and that every cofacet row
// minor (dual form) resp. facet column minor (primal form) is +-1. Entries
// outside {-1,0,1} are a caller error and throw; a bad minor or mod-2
// mismatch is reported as a failure naming the first offending facet.
LiftOutcome verify_dual_lift(const SimplicialComplex& k, const BitMatrix& source,
                             const IntMatrix& candidate, LiftMethod method = LiftMethod::ZeroOne,
                             bool source_is_translate = false);
LiftOutcome verify_primal_lift(const SimplicialComplex& k, const BitMatrix& source,
                               const IntMatrix& candidate, LiftMethod method = LiftMethod::ZeroOne,
                               bool source_is_translate = false);

// Re-runs the full verification of a certificate from scratch.
bool reverify(const LiftCertificate& cert);

// Entrywise {0,1} integer copy of a dual map of width m-n <= 3; such a copy
// is always a lift because odd determinants of {0,1} matrices of size <= 3
// are +-1. Throws when the width precondition fails.
LiftCertificate zero_one_lift_small_rank(const SimplicialComplex& k, const BitMatrix& dual);

// Same principle for a subgroup matrix S (m x r, r <= 3): the {0,1} copy
// represents an integrally free action whenever S was free over GF(2).
IntMatrix zero_one_subgroup_lift(const SimplicialComplex& k, const BitMatrix& s);

// Sign-pattern search for a {0,+-1} lift of a dual map: for growing flip
// counts i and each i-subset of the nonzero positions (row-major, in
// lexicographic order), negate the chosen 1's and test every cofacet minor.
// Returns the first success in (size, lex) order, nullopt when exhausted.
// The subset space at each size is sharded by first flipped position; the
// merge keeps the order-minimal success, so results are run-independent.
std::optional<IntMatrix> search_pm1_lift(const std::vector<VertexSet>& cofacet_list,
                                         const BitMatrix& dual);
LiftOutcome search_pm1_lift(const SimplicialComplex& k, const BitMatrix& dual);

// Lift of the canonical extension at v: duplicates v's row of a dual-form
// certificate (source and integer matrix alike) and re-verifies over
// wedge(K, v).
LiftOutcome lift_canonical_extension(const LiftCertificate& cert, int v);

// Block assembly over K1 * K2 from primal-form certificates of the factors:
//
//     [ lift1     0    ]
//     [ coupling  lift2]
//
// with the GF(2) coupling block lifted entrywise to {0,1}. Facet minors
// factor as products of the block minors, so the assembly verifies whenever
// the inputs do. An empty second factor returns cert1 unchanged.
LiftOutcome join_lift(const LiftCertificate& cert1, const LiftCertificate& cert2,
                      const BitMatrix& coupling);

// Integral Gale transfer: kernel basis of the lift computed by exact
// elimination pivoted at the unimodular block of the lexicographically
// smallest facet (resp. cofacet). Fails, rather than throws, when the kernel
// leaves the {0,+-1} entry range.
LiftOutcome dual_lift_transfer(const LiftCertificate& primal_cert);
LiftOutcome primal_lift_transfer(const LiftCertificate& dual_cert);

} // namespace toriclift
