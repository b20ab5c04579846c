#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "binmat.hpp"
#include "exactgram.hpp"

namespace acutecube {

inline constexpr int kDefaultCensusCap = 9;

// One vertex-set in the search tree: a canonical, acute matrix representation
// (zero column implicit) with its extension bookkeeping for the target cube.
struct SimplexNode {
    std::vector<std::uint32_t> columns;   // nonzero columns, strictly increasing
    int n = 0;                            // target cube dimension
    int ambient = 0;                      // least k with all columns < 2^k
    std::vector<std::uint32_t> acute_ext; // acute extensions within the target cube, sorted
    std::map<std::uint32_t, int> pending; // base candidates awaiting extra one-entries

    int vertex_count() const { return static_cast<int>(columns.size()) + 1; }
};

struct CensusEntry {
    BinaryMatrixRep rep;  // n x (n+1), zero column included, nu increasing
    BigInt abs_det;
};

struct CensusResult {
    int n = 0;
    std::vector<CensusEntry> entries;  // sorted by nu
    long long one_neighbor_checks = 0;
    long long one_neighbor_violations = 0;
};

// One node per acute triangle shape, extension sets computed over the
// triangle's ambient cube and lifted into the target cube.
std::vector<SimplexNode> seed_triangles(int n);

// Children of a node: one per acute extension that keeps the column numbers
// increasing, the row numbers non-increasing, and the representation minimal.
std::vector<SimplexNode> extend(const SimplexNode& node, CensusResult* stats = nullptr);

// All minimal matrix representations of acute simplices with n+1 vertices in
// I^n, with exact absolute determinants, sorted by nu. Deterministic for any
// job count.
CensusResult enumerate_acute(int n, int jobs = 1, int cap = kDefaultCensusCap);

BigInt max_abs_det(int n, int jobs = 1, int cap = kDefaultCensusCap);

// Square integer matrix of the nonzero columns (for determinants).
IntMatrix columns_to_matrix(const std::vector<std::uint32_t>& columns, int n);

}  // namespace acutecube
