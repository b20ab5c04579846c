#include "hessenberg.hpp"

#include <numeric>
#include <utility>
#include <stdexcept>

#include "acute_enum.hpp"

namespace acutecube {

namespace {

void require_valid_lambda(const Composition& lambda) {
    if (lambda.parts.empty()) throw std::invalid_argument("composition is empty");
    for (int p : lambda.parts)
        if (p < 1) throw std::invalid_argument("composition parts must be >= 1");
    if (lambda.parts.front() < 2 || lambda.parts.back() < 2)
        throw std::invalid_argument("first and last composition parts must be >= 2");
}

}  // namespace

HessenbergMatrix build_H(const Composition& lambda) {
    require_valid_lambda(lambda);
    const int k = static_cast<int>(lambda.parts.size());
    const int n = lambda.weight() + 1;
    if (n > 31) throw std::invalid_argument("build_H: matrix too large");

    // Row blocks: the top row, then one block per part. Column blocks: one per
    // part, then the last column.
    std::vector<int> row_start(k + 2), col_start(k + 2);
    row_start[0] = 0;
    row_start[1] = 1;
    col_start[0] = 0;
    for (int j = 1; j <= k; ++j) {
        row_start[j + 1] = row_start[j] + lambda.parts[j - 1];
        col_start[j] = col_start[j - 1] + lambda.parts[j - 1];
    }
    col_start[k + 1] = n;

    HessenbergMatrix H;
    H.n = n;
    H.lambda = lambda;
    H.columns.assign(n, 0);
    for (int cb = 1; cb <= k + 1; ++cb) {
        for (int rb = 0; rb <= k; ++rb) {
            if (rb > cb) continue;
            for (int c = col_start[cb - 1]; c < (cb <= k ? col_start[cb] : n); ++c)
                for (int r = row_start[rb]; r < (rb <= k ? row_start[rb + 1] : n); ++r) {
                    int value;
                    if (rb == cb)
                        value = (r - row_start[rb]) == (c - col_start[cb - 1]);  // identity block
                    else
                        value = (cb - rb) & 1;  // checkerboard, ones adjacent to identities
                    if (value) H.columns[c] |= 1u << r;
                }
        }
    }
    return H;
}

ContinuedFraction cf_numerator(const Composition& lambda) {
    if (lambda.parts.empty()) throw std::invalid_argument("cf_numerator: empty composition");
    BigInt f_prev = 0, f = 1;  // f_{-1}, f_0
    BigInt g_prev = 1, g = 0;  // companion recursion for the denominator
    for (int part : lambda.parts) {
        BigInt f_next = part * f + f_prev;
        BigInt g_next = part * g + g_prev;
        f_prev = std::exchange(f, f_next);
        g_prev = std::exchange(g, g_next);
    }
    return ContinuedFraction{f, g};
}

CompositionNode kepler_root() { return CompositionNode{Composition{{3}}, 1, 2, 0}; }

std::pair<CompositionNode, CompositionNode> split(const CompositionNode& node) {
    CompositionNode left, right;
    left.lambda = node.lambda;
    left.lambda.parts.back() += 1;
    left.p = node.p;
    left.q = node.p + node.q;
    left.level = node.level + 1;

    right.lambda = node.lambda;
    right.lambda.parts.back() -= 1;
    right.lambda.parts.push_back(2);
    right.p = node.q;
    right.q = node.p + node.q;
    right.level = node.level + 1;
    return {left, right};
}

std::vector<LevelEntry> enumerate_level(int n) {
    if (n < 3) throw std::invalid_argument("enumerate_level: n must be >= 3");
    std::vector<LevelEntry> out;
    for (const auto& lambda : compositions_end_capped(n - 1, 2)) {
        LevelEntry entry;
        entry.matrix = build_H(lambda);
        entry.abs_det = abs(bareiss_det(columns_to_matrix(entry.matrix.columns, n)));
        if (entry.abs_det != cf_numerator(lambda).numerator)
            throw std::logic_error("enumerate_level: determinant disagrees with continued fraction");
        entry.is_minimal_candidate = true;
        for (std::size_t j = 1; j < lambda.parts.size(); ++j)
            if (lambda.parts[j] > lambda.parts[0] + 1) entry.is_minimal_candidate = false;
        out.push_back(std::move(entry));
    }
    return out;
}

bool is_unreduced_upper_hessenberg(const BinaryMatrixRep& square_rep) {
    if (square_rep.n != square_rep.k()) return false;
    for (int c = 0; c < square_rep.k(); ++c) {
        if (c + 1 < square_rep.n && square_rep.bit(c + 1, c) != 1) return false;
        for (int r = c + 2; r < square_rep.n; ++r)
            if (square_rep.bit(r, c) != 0) return false;
    }
    return true;
}

}  // namespace acutecube
