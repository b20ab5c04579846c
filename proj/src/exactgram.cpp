#include "exactgram.hpp"

#include <bit>
#include <cassert>
#include <stdexcept>

namespace acutecube {

namespace {

IntMatrix minor_of(const IntMatrix& M, int drop_row, int drop_col) {
    IntMatrix m(M.rows - 1, M.cols - 1);
    int mr = 0;
    for (int r = 0; r < M.rows; ++r) {
        if (r == drop_row) continue;
        int mc = 0;
        for (int c = 0; c < M.cols; ++c) {
            if (c == drop_col) continue;
            m.at(mr, mc) = M.at(r, c);
            ++mc;
        }
        ++mr;
    }
    return m;
}

#ifndef NDEBUG
bool adjugate_identity_holds(const IntMatrix& G, const DetAdj& da) {
    IntMatrix product = multiply(G, da.adj);
    for (int r = 0; r < G.rows; ++r)
        for (int c = 0; c < G.cols; ++c)
            if (product.at(r, c) != (r == c ? da.det : BigInt(0))) return false;
    return true;
}
#endif

}  // namespace

IntMatrix IntMatrix::identity(int k) {
    IntMatrix m(k, k);
    for (int i = 0; i < k; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix multiply(const IntMatrix& A, const IntMatrix& B) {
    if (A.cols != B.rows) throw std::invalid_argument("multiply: shape mismatch");
    IntMatrix C(A.rows, B.cols);
    for (int r = 0; r < A.rows; ++r)
        for (int k = 0; k < A.cols; ++k) {
            const BigInt& v = A.at(r, k);
            if (v == 0) continue;
            for (int c = 0; c < B.cols; ++c) C.at(r, c) += v * B.at(k, c);
        }
    return C;
}

BigInt bareiss_det(IntMatrix M) {
    if (M.rows != M.cols) throw std::invalid_argument("bareiss_det: matrix not square");
    const int n = M.rows;
    if (n == 0) return 1;
    int sign = 1;
    BigInt prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (M.at(k, k) == 0) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (M.at(i, k) != 0) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return 0;
            for (int c = k; c < n; ++c) std::swap(M.at(k, c), M.at(swap_row, c));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                M.at(i, j) = exact_div(M.at(k, k) * M.at(i, j) - M.at(i, k) * M.at(k, j), prev);
            M.at(i, k) = 0;
        }
        prev = M.at(k, k);
    }
    return sign * M.at(n - 1, n - 1);
}

DetAdj det_adj(const IntMatrix& G) {
    if (G.rows != G.cols) throw std::invalid_argument("det_adj: matrix not square");
    const int k = G.rows;
    DetAdj result;
    result.adj = IntMatrix(k, k);
    if (k == 0) {
        result.det = 1;
        return result;
    }
    if (k == 1) {
        result.det = G.at(0, 0);
        result.adj.at(0, 0) = 1;
        return result;
    }
    result.det = bareiss_det(G);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            BigInt m = bareiss_det(minor_of(G, j, i));
            result.adj.at(i, j) = ((i + j) % 2 == 0) ? m : -m;
        }
    assert(adjugate_identity_holds(G, result));
    return result;
}

ExactGramian ExactGramian::from_columns(const std::vector<std::uint32_t>& columns) {
    ExactGramian g;
    g.k = static_cast<int>(columns.size());
    g.entries = IntMatrix(g.k, g.k);
    for (int i = 0; i < g.k; ++i)
        for (int j = i; j < g.k; ++j) {
            int dot = std::popcount(columns[i] & columns[j]);
            g.entries.at(i, j) = dot;
            g.entries.at(j, i) = dot;
        }
    DetAdj da = det_adj(g.entries);
    g.det = std::move(da.det);
    g.adj = std::move(da.adj);
    return g;
}

bool is_acute(const BinaryMatrixRep& P) {
    if (P.k() > P.n) throw std::invalid_argument("is_acute: more columns than rows");
    for (std::uint32_t c : P.columns)
        if (c == 0) throw std::invalid_argument("is_acute: zero column must be removed");
    return is_acute(ExactGramian::from_columns(P.columns));
}

bool is_acute(const ExactGramian& gram) {
    if (gram.det <= 0) return false;
    for (int i = 0; i < gram.k; ++i) {
        BigInt row_sum = 0;
        for (int j = 0; j < gram.k; ++j) {
            const BigInt& e = gram.adj.at(i, j);
            if (i != j && e >= 0) return false;
            row_sum += e;
        }
        if (row_sum <= 0) return false;
    }
    return true;
}

bool is_strictly_ultrametric(const IntMatrix& G) {
    if (G.rows != G.cols) throw std::invalid_argument("is_strictly_ultrametric: matrix not square");
    const int k = G.rows;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (G.at(i, j) != G.at(j, i))
                throw std::invalid_argument("is_strictly_ultrametric: matrix not symmetric");
    for (int i = 0; i < k; ++i) {
        if (G.at(i, i) <= 0) return false;
        for (int j = 0; j < k; ++j) {
            if (j == i) continue;
            if (G.at(i, j) < 0 || G.at(i, j) >= G.at(i, i)) return false;
        }
    }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            for (int l = j + 1; l < k; ++l) {
                const BigInt& x = G.at(i, j);
                const BigInt& y = G.at(j, l);
                const BigInt& z = G.at(i, l);
                const BigInt& m = std::min({x, y, z});
                int hits = (x == m) + (y == m) + (z == m);
                if (hits < 2) return false;
            }
    return true;
}

ExtensionVerdict classify_extension(const BinaryMatrixRep& P, std::uint32_t v, int extra_dims) {
    return classify_extension(ExactGramian::from_columns(P.columns), P.columns, v, extra_dims);
}

ExtensionVerdict classify_extension(const ExactGramian& gram,
                                    const std::vector<std::uint32_t>& columns, std::uint32_t v,
                                    int extra_dims) {
    if (v == 0) throw std::invalid_argument("classify_extension: v must be nonzero");
    for (std::uint32_t c : columns)
        if (c == v) throw std::invalid_argument("classify_extension: v is already a column");

    const int k = gram.k;
    ExtensionVerdict verdict;
    verdict.det = gram.det;
    if (gram.det <= 0) return verdict;  // degenerate input never extends

    // g = P^T v and y = adj(G) g, all in integers.
    std::vector<BigInt> g(k);
    for (int i = 0; i < k; ++i) g[i] = std::popcount(columns[i] & v);
    std::vector<BigInt> y(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) y[i] += gram.adj.at(i, j) * g[j];
    verdict.witness = y;

    BigInt y_sum = 0;
    for (const BigInt& yi : y) {
        if (yi <= 0) return verdict;
        y_sum += yi;
    }
    if (y_sum >= gram.det) return verdict;

    // Sign conditions of the updated inverse, cleared of denominators:
    // sigma = det(G)*(v^T v + m') - g^T y is det of the lifted Gramian.
    BigInt gty = 0;
    for (int i = 0; i < k; ++i) gty += g[i] * y[i];
    std::vector<BigInt> adj_row_sums(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) adj_row_sums[i] += gram.adj.at(i, j);

    BigInt gamma = std::popcount(v);
    for (int m = 0; m <= extra_dims; ++m) {
        BigInt sigma = gram.det * (gamma + m) - gty;
        bool ok = sigma > 0;
        for (int i = 0; ok && i < k; ++i) {
            for (int j = i + 1; ok && j < k; ++j)
                if (sigma * gram.adj.at(i, j) + y[i] * y[j] >= 0) ok = false;
            if (ok && sigma * adj_row_sums[i] + y[i] * (y_sum - gram.det) <= 0) ok = false;
        }
        if (ok) {
            verdict.kind = (m == 0) ? ExtensionVerdict::Kind::Acute : ExtensionVerdict::Kind::Candidate;
            verdict.extra_ones = m;
            return verdict;
        }
    }
    return verdict;  // candidate, but out of reach at this depth
}

}  // namespace acutecube
