#pragma once

#include <vector>

#include "bigint.hpp"
#include "binmat.hpp"
#include "combinatorics.hpp"
#include "exactgram.hpp"

namespace acutecube {

// The 0/1 Hessenberg matrix H built from a composition of n-1 with first and
// last parts >= 2: identity blocks of the part sizes cover the subdiagonal,
// and the blocks above them alternate between all-ones (adjacent to an
// identity block) and all-zeros.
struct HessenbergMatrix {
    int n = 0;
    Composition lambda;
    std::vector<std::uint32_t> columns;  // column c as a row-bit label

    int bit(int row, int col) const { return (columns[col] >> row) & 1; }
};

// Node of the fraction tree: composition plus its coprime fraction p/q in
// (0,1); the absolute determinant of the matrix is p+q.
struct CompositionNode {
    Composition lambda;
    BigInt p;
    BigInt q;
    int level = 0;
};

struct LevelEntry {
    HessenbergMatrix matrix;
    BigInt abs_det;
    bool is_minimal_candidate = false;
};

// Valid compositions have both end parts >= 2 (the single-part roots <2> and
// <3> included).
HessenbergMatrix build_H(const Composition& lambda);

// Coprime numerator/denominator of the continued fraction
// [l_1; l_2, ..., l_k] via f_j = l_j f_{j-1} + f_{j-2}.
struct ContinuedFraction {
    BigInt numerator;
    BigInt denominator;
};
ContinuedFraction cf_numerator(const Composition& lambda);

// Tree root <3> with fraction 1/2.
CompositionNode kepler_root();

// Children: last part incremented with fraction p/(p+q), and last part
// decremented with a fresh part 2 appended, with fraction q/(p+q).
std::pair<CompositionNode, CompositionNode> split(const CompositionNode& node);

// All 2^(n-4) matrices of size n (one for n = 3, 4), with exact determinants
// verified against the continued-fraction numerator. A matrix cannot be
// minimal when some later part exceeds the first part plus one.
std::vector<LevelEntry> enumerate_level(int n);

bool is_unreduced_upper_hessenberg(const BinaryMatrixRep& square_rep);

}  // namespace acutecube
