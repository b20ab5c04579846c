#include "combinatorics.hpp"

#include <algorithm>
#include <map>

#include <stdexcept>

namespace acutecube {

namespace {

void emit_partitions(int remaining, int max_part, std::vector<int>& prefix,
                     std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition{prefix});
        return;
    }
    // Largest first part first gives reverse-lexicographic order.
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        prefix.push_back(p);
        emit_partitions(remaining - p, p, prefix, out);
        prefix.pop_back();
    }
}

void emit_compositions(int remaining, int min_end, std::vector<int>& prefix,
                       std::vector<Composition>& out) {
    if (remaining == 0) {
        if (!prefix.empty() && prefix.back() >= min_end) out.push_back(Composition{prefix});
        return;
    }
    for (int p = 1; p <= remaining; ++p) {
        prefix.push_back(p);
        emit_compositions(remaining - p, min_end, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions(int m) {
    if (m < 0) throw std::invalid_argument("partitions: negative argument");
    std::vector<Partition> out;
    std::vector<int> prefix;
    emit_partitions(m, m == 0 ? 1 : m, prefix, out);
    return out;
}

std::vector<DoublePartition> double_partitions(int n) {
    if (n < 0) throw std::invalid_argument("double_partitions: negative argument");
    std::vector<DoublePartition> out;
    for (int k = 0; k <= n; ++k) {
        auto plus = partitions(k);
        auto minus = partitions(n - k);
        for (const auto& p : plus)
            for (const auto& q : minus) out.push_back(DoublePartition{p, q});
    }
    return out;
}

std::vector<Composition> compositions_end_capped(int m, int min_end) {
    if (m < 0) throw std::invalid_argument("compositions_end_capped: negative argument");
    if (min_end < 1) throw std::invalid_argument("compositions_end_capped: min_end must be >= 1");
    std::vector<Composition> out;
    if (m == 0) return out;
    std::vector<int> prefix;
    // First part is constrained up front; the last part is checked at emission.
    for (int p = min_end; p <= m; ++p) {
        prefix.push_back(p);
        emit_compositions(m - p, min_end, prefix, out);
        prefix.pop_back();
    }
    return out;
}

BigInt sym_class_size(const Partition& t, int ell) {
    if (t.weight() != ell)
        throw std::invalid_argument("sym_class_size: cycle type weight does not match ell");
    std::map<int, int> mults;
    for (int part : t.parts) {
        if (part < 1) throw std::invalid_argument("sym_class_size: parts must be positive");
        ++mults[part];
    }
    BigInt denom = 1;
    for (auto [part, mult] : mults) {
        for (int j = 0; j < mult; ++j) denom *= part;
        denom *= factorial(mult);
    }
    return exact_div(factorial(ell), denom);
}

}  // namespace acutecube
