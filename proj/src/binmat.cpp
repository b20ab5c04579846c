#include "binmat.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace acutecube {

namespace {

void require_same_shape(const BinaryMatrixRep& P1, const BinaryMatrixRep& P2) {
    if (P1.n != P2.n || P1.k() != P2.k())
        throw std::invalid_argument("matrix representations have different shapes");
}

void require_within_factorial_cap(int k) {
    if (k > kFactorialCap) throw std::out_of_range("column count exceeds the factorial cap");
}

// One Algorithm-3 candidate: complement rows by xor with a pivot column,
// order the remaining columns, sort rows by row number (non-increasing), and
// read off the sorted column labels. Equal row numbers mean identical rows,
// so the tie-break cannot change the result.
struct CandidateSweep {
    int n;
    int k;
    std::vector<std::uint32_t> shifted;   // columns ^ pivot, pivot removed
    std::vector<std::uint32_t> labels;    // scratch: candidate nu (k entries, labels[0] == 0)
    std::vector<int> row_order;           // scratch
    std::vector<std::uint32_t> row_keys;  // scratch

    explicit CandidateSweep(const BinaryMatrixRep& P)
        : n(P.n), k(P.k()), labels(P.k()), row_order(P.n), row_keys(P.n) {}

    void set_pivot(const BinaryMatrixRep& P, std::uint32_t pivot) {
        shifted.clear();
        for (std::uint32_t c : P.columns)
            if (c != pivot) shifted.push_back(c ^ pivot);
        std::sort(shifted.begin(), shifted.end());
    }

    // Evaluates the candidate for the current ordering of `shifted`.
    const std::vector<std::uint32_t>& evaluate() {
        const int m = k - 1;
        for (int r = 0; r < n; ++r) {
            std::uint32_t key = 0;
            for (int c = 0; c < m; ++c) key |= ((shifted[c] >> r) & 1u) << (m - 1 - c);
            row_keys[r] = key;
        }
        for (int r = 0; r < n; ++r) row_order[r] = r;
        std::sort(row_order.begin(), row_order.end(), [&](int a, int b) {
            if (row_keys[a] != row_keys[b]) return row_keys[a] > row_keys[b];
            return a < b;
        });
        labels[0] = 0;
        for (int c = 0; c < m; ++c) {
            std::uint32_t lab = 0;
            for (int p = 0; p < n; ++p) lab |= ((shifted[c] >> row_order[p]) & 1u) << p;
            labels[c + 1] = lab;
        }
        std::sort(labels.begin() + 1, labels.end());
        return labels;
    }
};

}  // namespace

BinaryMatrixRep::BinaryMatrixRep(int n_, std::vector<std::uint32_t> columns_)
    : n(n_), columns(std::move(columns_)) {
    if (n < 1 || n > 31) throw std::invalid_argument("BinaryMatrixRep: row count out of range");
    if (columns.empty()) throw std::invalid_argument("BinaryMatrixRep: no columns");
    for (std::uint32_t c : columns)
        if (c >> n) throw std::invalid_argument("BinaryMatrixRep: column label out of range");
    auto sorted = columns;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("BinaryMatrixRep: duplicate columns");
}

std::uint32_t BinaryMatrixRep::row_number(int row) const {
    std::uint32_t num = 0;
    for (int c = 0; c < k(); ++c) num |= static_cast<std::uint32_t>(bit(row, c)) << (k() - 1 - c);
    return num;
}

std::vector<std::uint32_t> column_numbers(const BinaryMatrixRep& P) {
    auto nu = P.columns;
    std::sort(nu.begin(), nu.end());
    return nu;
}

std::vector<std::uint32_t> row_numbers(const BinaryMatrixRep& P) {
    std::vector<std::uint32_t> mu(P.n);
    for (int r = 0; r < P.n; ++r) mu[r] = P.row_number(r);
    std::sort(mu.begin(), mu.end(), std::greater<>());
    return mu;
}

bool signed_row_equivalent(const BinaryMatrixRep& P1, const BinaryMatrixRep& P2) {
    require_same_shape(P1, P2);
    const std::uint32_t full = (P1.k() >= 32) ? ~0u : ((1u << P1.k()) - 1);
    std::vector<std::uint32_t> a, b;
    a.reserve(2 * P1.n);
    b.reserve(2 * P1.n);
    for (int r = 0; r < P1.n; ++r) {
        std::uint32_t r1 = P1.row_number(r), r2 = P2.row_number(r);
        a.push_back(r1);
        a.push_back(full - r1);
        b.push_back(r2);
        b.push_back(full - r2);
    }
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

bool equivalent(const BinaryMatrixRep& P1, const BinaryMatrixRep& P2) {
    require_same_shape(P1, P2);
    require_within_factorial_cap(P1.k());
    auto cols = P2.columns;
    std::sort(cols.begin(), cols.end());
    do {
        if (signed_row_equivalent(P1, BinaryMatrixRep(P2.n, cols))) return true;
    } while (std::next_permutation(cols.begin(), cols.end()));
    return false;
}

BinaryMatrixRep canonical(const BinaryMatrixRep& P) {
    require_within_factorial_cap(P.k());
    CandidateSweep sweep(P);
    std::optional<std::vector<std::uint32_t>> best;
    for (std::uint32_t pivot : P.columns) {
        sweep.set_pivot(P, pivot);
        do {
            const auto& candidate = sweep.evaluate();
            if (!best || candidate < *best) best = candidate;
        } while (std::next_permutation(sweep.shifted.begin(), sweep.shifted.end()));
    }
    return BinaryMatrixRep(P.n, *best);
}

bool is_canonical(const BinaryMatrixRep& P) {
    require_within_factorial_cap(P.k());
    const auto& ref = P.columns;
    if (ref[0] != 0 || !std::is_sorted(ref.begin(), ref.end())) return false;
    CandidateSweep sweep(P);
    for (std::uint32_t pivot : P.columns) {
        sweep.set_pivot(P, pivot);
        do {
            if (sweep.evaluate() < ref) return false;
        } while (std::next_permutation(sweep.shifted.begin(), sweep.shifted.end()));
    }
    return true;
}

BigInt polytope_number(const std::vector<std::uint32_t>& vertex_labels, int n) {
    BigInt num = 0;
    for (std::uint32_t v : vertex_labels) {
        if (n < 0 || n > 31 || (v >> n)) throw std::invalid_argument("polytope_number: label out of range");
        num += pow2(v);
    }
    return num;
}

std::string to_matrix_text(const BinaryMatrixRep& P) {
    std::ostringstream out;
    out << P.n << ' ' << P.k() << '\n';
    for (int r = 0; r < P.n; ++r) {
        for (int c = 0; c < P.k(); ++c) out << char('0' + P.bit(r, c));
        out << '\n';
    }
    return out.str();
}

BinaryMatrixRep from_matrix_text(const std::string& text) {
    std::istringstream in(text);
    int n = 0, k = 0;
    if (!(in >> n >> k) || n < 1 || n > 31 || k < 1)
        throw std::invalid_argument("matrix text: bad header");
    std::vector<std::uint32_t> columns(k, 0);
    for (int r = 0; r < n; ++r) {
        std::string line;
        if (!(in >> line) || static_cast<int>(line.size()) != k)
            throw std::invalid_argument("matrix text: bad row");
        for (int c = 0; c < k; ++c) {
            if (line[c] == '1')
                columns[c] |= 1u << r;
            else if (line[c] != '0')
                throw std::invalid_argument("matrix text: entries must be 0 or 1");
        }
    }
    return BinaryMatrixRep(n, columns);
}

}  // namespace acutecube
