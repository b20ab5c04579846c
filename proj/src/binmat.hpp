#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "hyperoct.hpp"

namespace acutecube {

inline constexpr int kFactorialCap = 10;

// n x k 0/1 matrix with pairwise distinct columns, stored as the k vertex
// labels of its columns under the binary numbering (bit i of a label is the
// entry in row i). Column labels are the primary storage; rows are read by
// bit extraction.
struct BinaryMatrixRep {
    int n = 0;
    std::vector<std::uint32_t> columns;

    BinaryMatrixRep() = default;
    BinaryMatrixRep(int n, std::vector<std::uint32_t> columns);

    int k() const { return static_cast<int>(columns.size()); }
    int bit(int row, int col) const { return (columns[col] >> row) & 1; }
    std::uint32_t row_number(int row) const;

    bool operator==(const BinaryMatrixRep&) const = default;
};

// Column labels sorted ascending (nu).
std::vector<std::uint32_t> column_numbers(const BinaryMatrixRep& P);

// Row numbers sorted non-increasing (mu).
std::vector<std::uint32_t> row_numbers(const BinaryMatrixRep& P);

// True iff P2 results from P1 by a row permutation plus row complementations,
// i.e. the 2n-multiset {r1, (2^k-1)e - r1} is a permutation of the one for r2.
bool signed_row_equivalent(const BinaryMatrixRep& P1, const BinaryMatrixRep& P2);

// Full 0/1-equivalence: some column permutation of P2 is signed-row-equivalent
// to P1. Loops over all k! column permutations.
bool equivalent(const BinaryMatrixRep& P1, const BinaryMatrixRep& P2);

// The minimal matrix representation of the orbit of P under cube symmetries
// and column permutations: zero first column, strictly increasing column
// numbers, non-increasing row numbers.
BinaryMatrixRep canonical(const BinaryMatrixRep& P);

// True iff P equals its own minimal matrix representation. Aborts the sweep
// as soon as any orbit element with smaller nu is found.
bool is_canonical(const BinaryMatrixRep& P);

// N(c) = sum over vertex labels of 2^label.
BigInt polytope_number(const std::vector<std::uint32_t>& vertex_labels, int n);

// Text format (bit-exact): first line "n k", then n lines of k characters
// from {0,1}; row i on line i, columns in stored order.
std::string to_matrix_text(const BinaryMatrixRep& P);
BinaryMatrixRep from_matrix_text(const std::string& text);

}  // namespace acutecube
