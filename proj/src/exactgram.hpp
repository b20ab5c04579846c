#pragma once

#include <cstdint>
#include <vector>

#include "bigint.hpp"
#include "binmat.hpp"

namespace acutecube {

struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<BigInt> a;

    IntMatrix() = default;
    IntMatrix(int rows_, int cols_) : rows(rows_), cols(cols_), a(static_cast<std::size_t>(rows_) * cols_) {}

    BigInt& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    const BigInt& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

    static IntMatrix identity(int k);
    bool operator==(const IntMatrix&) const = default;
};

IntMatrix multiply(const IntMatrix& A, const IntMatrix& B);

// Exact determinant by fraction-free (Bareiss) elimination.
BigInt bareiss_det(IntMatrix M);

// Exact determinant and adjugate; satisfies G * adj = det * I (verified in
// debug builds). A zero determinant is a valid output.
struct DetAdj {
    BigInt det;
    IntMatrix adj;
};
DetAdj det_adj(const IntMatrix& G);

// Integer Gramian G = P^T P of the nonzero columns of a matrix
// representation, with exact determinant and adjugate.
struct ExactGramian {
    int k = 0;
    IntMatrix entries;
    BigInt det;
    IntMatrix adj;

    static ExactGramian from_columns(const std::vector<std::uint32_t>& columns);
};

// Acuteness test on an n x k representation with the zero column removed
// (k <= n): det(G) > 0, every off-diagonal adjugate entry < 0, every adjugate
// row sum > 0. Angle invariance under the cube symmetries makes any
// representation with one vertex at the origin equivalent for this test.
bool is_acute(const BinaryMatrixRep& P);
bool is_acute(const ExactGramian& gram);

// Strict ultrametricity: in every principal 3x3 submatrix the minimum of the
// three off-diagonal entries is attained at least twice, and every diagonal
// entry strictly exceeds every off-diagonal entry in its row.
bool is_strictly_ultrametric(const IntMatrix& G);

struct ExtensionVerdict {
    enum class Kind { Acute, Candidate, Rejected };
    Kind kind = Kind::Rejected;
    int extra_ones = 0;           // least m with the lifted simplex acute (Candidate)
    std::vector<BigInt> witness;  // y = adj(G) P^T v
    BigInt det;                   // det(G)

    bool acute() const { return kind == Kind::Acute; }
    bool rejected() const { return kind == Kind::Rejected; }
};

// Classifies vertex v against the simplex spanned by the origin and the
// columns of P. Candidate test: y = adj(G) P^T v > 0 and e^T y < det(G).
// Candidates are scanned for the least number m' <= extra_dims of appended
// one-entries that makes the lifted simplex acute (m' = 0 means acute now);
// candidates needing more than extra_dims degrade to Rejected.
ExtensionVerdict classify_extension(const BinaryMatrixRep& P, std::uint32_t v, int extra_dims);
ExtensionVerdict classify_extension(const ExactGramian& gram,
                                    const std::vector<std::uint32_t>& columns, std::uint32_t v,
                                    int extra_dims);

}  // namespace acutecube
