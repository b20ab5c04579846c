#include "hyperoct.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace acutecube {

namespace {

void require_valid(const SignedPermutation& h) {
    if (h.n < 0 || h.n > 31) throw std::invalid_argument("SignedPermutation: n out of range");
    if (static_cast<int>(h.image.size()) != h.n)
        throw std::invalid_argument("SignedPermutation: image size mismatch");
    std::uint32_t seen = 0;
    for (int v : h.image) {
        if (v < 0 || v >= h.n || (seen & (1u << v)))
            throw std::invalid_argument("SignedPermutation: image is not a permutation");
        seen |= 1u << v;
    }
}

// Cycles of the coordinate permutation i -> image[i].
std::vector<std::vector<int>> coordinate_cycles(const SignedPermutation& h) {
    std::vector<std::vector<int>> cycles;
    std::vector<bool> visited(h.n, false);
    for (int start = 0; start < h.n; ++start) {
        if (visited[start]) continue;
        std::vector<int> cycle;
        int i = start;
        while (!visited[i]) {
            visited[i] = true;
            cycle.push_back(i);
            i = h.image[i];
        }
        cycles.push_back(std::move(cycle));
    }
    return cycles;
}

Partition to_partition(std::vector<int> lengths) {
    std::sort(lengths.begin(), lengths.end(), std::greater<>());
    return Partition{std::move(lengths)};
}

// Dense-lexicographic comparison of sparse induced types (mult of length 1,
// then length 2, ...).
bool dense_less(const InducedType& a, const InducedType& b) {
    std::size_t ia = 0, ib = 0;
    while (ia < a.size() || ib < b.size()) {
        int la = ia < a.size() ? a[ia].first : INT32_MAX;
        int lb = ib < b.size() ? b[ib].first : INT32_MAX;
        if (la < lb) return false;  // a has a non-zero where b has zero
        if (lb < la) return true;
        if (a[ia].second != b[ib].second) return a[ia].second < b[ib].second;
        ++ia;
        ++ib;
    }
    return false;
}

}  // namespace

SignedPermutation SignedPermutation::identity(int n) {
    SignedPermutation h;
    h.n = n;
    h.image.resize(n);
    std::iota(h.image.begin(), h.image.end(), 0);
    return h;
}

std::uint32_t apply(const SignedPermutation& h, std::uint32_t x) {
    if (x >> h.n) throw std::out_of_range("apply: vertex label out of range");
    std::uint32_t y = x ^ h.flags;
    std::uint32_t out = 0;
    for (int i = 0; i < h.n; ++i) out |= ((y >> h.image[i]) & 1u) << i;
    return out;
}

SignedPermutation compose(const SignedPermutation& g, const SignedPermutation& h) {
    if (g.n != h.n) throw std::invalid_argument("compose: dimension mismatch");
    SignedPermutation r;
    r.n = g.n;
    r.image.resize(r.n);
    for (int i = 0; i < r.n; ++i) {
        int w = h.image[g.image[i]];
        r.image[i] = w;
        std::uint32_t bit = ((h.flags >> w) & 1u) ^ ((g.flags >> g.image[i]) & 1u);
        r.flags |= bit << w;
    }
    return r;
}

SignedPermutation inverse(const SignedPermutation& h) {
    SignedPermutation r;
    r.n = h.n;
    r.image.resize(h.n);
    for (int i = 0; i < h.n; ++i) {
        r.image[h.image[i]] = i;
        r.flags |= ((h.flags >> h.image[i]) & 1u) << i;
    }
    return r;
}

SignedCycleType signed_cycle_type(const SignedPermutation& h) {
    require_valid(h);
    std::vector<int> plus, minus;
    for (const auto& cycle : coordinate_cycles(h)) {
        int chi = 0;
        for (int j : cycle) chi += (h.flags >> j) & 1u;
        (chi % 2 == 0 ? plus : minus).push_back(static_cast<int>(cycle.size()));
    }
    return SignedCycleType{to_partition(std::move(plus)), to_partition(std::move(minus))};
}

BigInt class_size(const SignedCycleType& t, int n) {
    int k = t.plus.weight();
    int l = t.minus.weight();
    if (k + l != n) throw std::invalid_argument("class_size: weights do not sum to n");
    int cycles = static_cast<int>(t.plus.parts.size() + t.minus.parts.size());
    return binomial(BigInt(n), static_cast<unsigned>(k)) * sym_class_size(t.plus, k) *
           sym_class_size(t.minus, l) * pow2(static_cast<unsigned>(n - cycles));
}

SignedPermutation representative(const SignedCycleType& t) {
    int n = t.plus.weight() + t.minus.weight();
    SignedPermutation h;
    h.n = n;
    h.image.resize(n);
    int next = 0;
    auto place_cycle = [&](int len, bool flagged) {
        int first = next;
        for (int i = 0; i < len; ++i) h.image[first + i] = first + (i + 1) % len;
        if (flagged) h.flags |= 1u << first;
        next += len;
    };
    for (int len : t.plus.parts) place_cycle(len, false);
    for (int len : t.minus.parts) place_cycle(len, true);
    return h;
}

InducedType induced_cycle_type(const SignedPermutation& h, int cap) {
    require_valid(h);
    if (h.n > cap) throw std::out_of_range("induced_cycle_type: dimension cap exceeded");
    const std::uint32_t size = 1u << h.n;
    std::vector<bool> visited(size, false);
    std::map<int, long long> counts;
    for (std::uint32_t start = 0; start < size; ++start) {
        if (visited[start]) continue;
        int len = 0;
        std::uint32_t x = start;
        while (!visited[x]) {
            visited[x] = true;
            x = apply(h, x);
            ++len;
        }
        ++counts[len];
    }
    return InducedType(counts.begin(), counts.end());
}

long long total_cycles(const InducedType& type) {
    long long total = 0;
    for (const auto& [len, mult] : type) total += mult;
    return total;
}

CycleIndexTable cycle_index(int n, int cap) {
    if (n < 1) throw std::invalid_argument("cycle_index: n must be positive");
    if (n > cap) throw std::out_of_range("cycle_index: dimension cap exceeded");
    // Accumulation keyed by the canonical sparse encoding is commutative, so
    // the result does not depend on the double-partition order.
    std::map<InducedType, BigInt> merged;
    for (const auto& dp : double_partitions(n)) {
        SignedCycleType t{dp.plus, dp.minus};
        merged[induced_cycle_type(representative(t), cap)] += class_size(t, n);
    }
    CycleIndexTable table;
    table.n = n;
    for (auto& [type, count] : merged) table.rows.push_back({count, type});
    sort_rows_canonically(table);
    return table;
}

void sort_rows_canonically(CycleIndexTable& table) {
    std::sort(table.rows.begin(), table.rows.end(),
              [](const CycleIndexTable::Row& a, const CycleIndexTable::Row& b) {
                  long long ca = total_cycles(a.type), cb = total_cycles(b.type);
                  if (ca != cb) return ca > cb;
                  return dense_less(a.type, b.type);
              });
}

}  // namespace acutecube
