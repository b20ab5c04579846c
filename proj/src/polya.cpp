#include "polya.hpp"

#include <stdexcept>

#include "combinatorics.hpp"

namespace acutecube {

namespace {

BigInt group_order(int n) { return pow2(static_cast<unsigned>(n)) * factorial(static_cast<unsigned>(n)); }

// A partition of k condensed to (part, multiplicity) pairs.
using PartMults = std::vector<std::pair<int, int>>;

std::vector<PartMults> condensed_partitions(int k) {
    std::vector<PartMults> out;
    for (const auto& kappa : partitions(k)) {
        PartMults pm;
        for (int part : kappa.parts) {
            if (!pm.empty() && pm.back().first == part)
                ++pm.back().second;
            else
                pm.emplace_back(part, 1);
        }
        out.push_back(std::move(pm));
    }
    return out;
}

BigInt fixed_by_partition(const InducedType& tau, const PartMults& kappa) {
    BigInt product = 1;
    for (auto [part, mult] : kappa) {
        long long available = 0;
        for (const auto& [len, count] : tau) {
            if (len == part) {
                available = count;
                break;
            }
        }
        if (available < mult) return 0;
        product *= binomial(BigInt(available), static_cast<unsigned>(mult));
    }
    return product;
}

BigInt fixed_k_count(const InducedType& tau, const std::vector<PartMults>& kappas) {
    BigInt total = 0;
    for (const auto& kappa : kappas) total += fixed_by_partition(tau, kappa);
    return total;
}

}  // namespace

BigInt fixed_count(const InducedType& tau) {
    long long cycles = total_cycles(tau);
    return pow2(static_cast<unsigned>(cycles));
}

BigInt fixed_k_count(const InducedType& tau, long long k) {
    if (k < 0) throw std::invalid_argument("fixed_k_count: negative k");
    if (k == 0) return 1;
    if (k > static_cast<long long>(INT32_MAX)) return 0;
    return fixed_k_count(tau, condensed_partitions(static_cast<int>(k)));
}

BigInt count_classes(const CycleIndexTable& table, long long k) {
    if (k < 0 || BigInt(k) > pow2(static_cast<unsigned>(table.n)))
        throw std::invalid_argument("count_classes: k out of range");
    if (k == 0) return 1;
    // The partitions of k are generated once and shared by all rows.
    auto kappas = condensed_partitions(static_cast<int>(k));
    BigInt sum = 0;
    for (const auto& row : table.rows) sum += row.count * fixed_k_count(row.type, kappas);
    return exact_div(sum, group_order(table.n));
}

BigInt count_classes(int n, long long k, int cap) { return count_classes(cycle_index(n, cap), k); }

BigInt count_all(const CycleIndexTable& table) {
    BigInt sum = 0;
    for (const auto& row : table.rows) sum += row.count * fixed_count(row.type);
    return exact_div(sum, group_order(table.n));
}

BigInt count_all(int n, int cap) { return count_all(cycle_index(n, cap)); }

}  // namespace acutecube
