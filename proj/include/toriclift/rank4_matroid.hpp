#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "toriclift/lifting.hpp"

namespace toriclift {

// The binary matroid of the 4 x 15 matrix whose columns are all nonzero
// {0,1} vectors of length 4, in the fixed order: column k (1-based) is the
// vector whose big-endian bits spell k (first coordinate most significant).
// Its 840 bases split into 835 with integer determinant +-1 and the 5 sets
// with determinant +-3; the GL(4,Z2) translates of those 5 sets partition all
// 840 bases into 168 blocks of 5.

// Bases and blocks use 15-bit masks: bit k-1 set when column k is in the set.
using BasisMask = std::uint32_t;

struct Rank4Matroid {
    IntMatrix a;                         // 4 x 15, the fixed column order
    std::vector<BasisMask> bases;        // ascending; |bases| == 840
    std::vector<long long> basis_abs_det; // parallel: 1 or 3
    std::array<BasisMask, 5> det3_sets;  // the five |det| = 3 bases, ascending
};

struct Partition168 {
    struct Block {
        std::array<BasisMask, 5> bases; // ascending masks
        int first_generator = 0;        // smallest gl4_enumerate index producing it
        int generator_count = 0;        // always 20160/168 = 120
    };
    std::vector<Block> blocks;          // lexicographic by basis tuple
    std::vector<int> block_of_basis;    // dense table over 15-bit masks, -1 off-basis
    int det3_block = -1;                // index of the unique |det| = 3 block
};

// Built once and cached; construction cross-checks the census (840/835/5,
// the five determinant-3 sets, the GL dichotomy, and the 120-fold generator
// multiplicity) and throws if any of it fails.
const Rank4Matroid& rank4_matroid();
const Partition168& partition168();

// Column index (1..15) of a length-4 GF(2) vector given in row-word encoding
// (bit i-1 = coordinate i); the inverse direction is the same involution.
int column_index_of_vector(std::uint32_t row_bits);

// Pigeonhole lift of an injective dual map with Picard number 4: embeds the
// cofacets as bases, finds a partition block disjoint from them (smallest
// block, smallest generator), and certifies the {0,1} copy of the translated
// dual map g . row(i). Failure (no disjoint block) is possible only when K
// has at least 168 facets. Throws on non-injective input or Picard != 4.
LiftOutcome pigeonhole_lift(const SimplicialComplex& k, const BitMatrix& dual);

} // namespace toriclift
