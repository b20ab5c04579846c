#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "combinatorics.hpp"

namespace acutecube {

inline constexpr int kDefaultDimensionCap = 16;

// Element of the hyperoctahedral group B_n as a signed permutation:
// a coordinate permutation plus per-coordinate complement flags.
// Acting on a vertex x of the n-cube (as a label under the binary numbering),
// bit i of the image is bit image[i] of x xor flags.
struct SignedPermutation {
    int n = 0;
    std::vector<int> image;  // 0-based permutation of {0..n-1}
    std::uint32_t flags = 0; // bit j set = coordinate j complemented

    static SignedPermutation identity(int n);
    bool operator==(const SignedPermutation&) const = default;
};

// Pair of partitions splitting the cycles of the coordinate permutation by
// the parity of their complement-flag sum; classifies conjugacy in B_n.
struct SignedCycleType {
    Partition plus;
    Partition minus;
    bool operator==(const SignedCycleType&) const = default;
};

// Sparse cycle type of a permutation of the 2^n vertex labels:
// (length, multiplicity) pairs sorted by length.
using InducedType = std::vector<std::pair<int, long long>>;

// Tabulated cycle index Z_n: per induced cycle type, the number of group
// elements inducing it. Rows with identical induced type are merged.
struct CycleIndexTable {
    int n = 0;
    struct Row {
        BigInt count;
        InducedType type;
        bool operator==(const Row&) const = default;
    };
    std::vector<Row> rows;
    bool operator==(const CycleIndexTable&) const = default;
};

// Image of vertex label x under h.
std::uint32_t apply(const SignedPermutation& h, std::uint32_t x);

SignedPermutation compose(const SignedPermutation& g, const SignedPermutation& h);
SignedPermutation inverse(const SignedPermutation& h);

SignedCycleType signed_cycle_type(const SignedPermutation& h);

// Number of elements of B_n with the given signed cycle type.
BigInt class_size(const SignedCycleType& t, int n);

// One element of B_n whose signed cycle type is t (round-trip property).
SignedPermutation representative(const SignedCycleType& t);

// Cycle type of the permutation x -> apply(h, x) on {0..2^n-1}.
InducedType induced_cycle_type(const SignedPermutation& h, int cap = kDefaultDimensionCap);

long long total_cycles(const InducedType& type);

// Z_n in tabulated form via one pass over the Delta(n) double partitions.
// Rows are ordered by (total cycle count descending, dense type vector
// lexicographically ascending).
CycleIndexTable cycle_index(int n, int cap = kDefaultDimensionCap);

// Orders rows of a table the same way cycle_index does (for fixtures).
void sort_rows_canonically(CycleIndexTable& table);

}  // namespace acutecube
