#pragma once

#include <cstdint>
#include <vector>

#include "bigint.hpp"

namespace acutecube {

// Integer partition: parts in non-increasing order. The empty partition is
// the unique partition of 0.
struct Partition {
    std::vector<int> parts;

    int weight() const {
        int w = 0;
        for (int p : parts) w += p;
        return w;
    }
    int count(int part) const {
        int c = 0;
        for (int p : parts) c += (p == part);
        return c;
    }
    bool operator==(const Partition&) const = default;
};

// Integer composition: ordered parts, all >= 1.
struct Composition {
    std::vector<int> parts;

    int weight() const {
        int w = 0;
        for (int p : parts) w += p;
        return w;
    }
    bool operator==(const Composition&) const = default;
};

struct DoublePartition {
    Partition plus;
    Partition minus;

    int total() const { return plus.weight() + minus.weight(); }
    bool operator==(const DoublePartition&) const = default;
};

// All partitions of m, each once, in reverse-lexicographic order
// ((m) first, (1,...,1) last). The order is part of the contract.
std::vector<Partition> partitions(int m);

// All ordered pairs (plus of k, minus of n-k) for k = 0..n; the count is
// Delta(n) = sum p(k) p(n-k).
std::vector<DoublePartition> double_partitions(int n);

// All compositions of m whose first and last part are >= min_end, in
// lexicographic order of the part sequences. Empty when none exist.
std::vector<Composition> compositions_end_capped(int m, int min_end);

// Size of the conjugacy class of S_ell with cycle type t:
// ell! / (prod i^{t_i} * t_i!). Rejects t if its weight is not ell.
BigInt sym_class_size(const Partition& t, int ell);

}  // namespace acutecube
