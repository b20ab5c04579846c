#pragma once

#include "bigint.hpp"
#include "hyperoct.hpp"

namespace acutecube {

// Number of vertex subsets fixed by any element with induced type tau:
// 2^(total number of cycles).
BigInt fixed_count(const InducedType& tau);

// Number of k-element vertex subsets fixed by such an element: sum over
// partitions kappa of k of prod_j binom(t_j, kappa_j).
BigInt fixed_k_count(const InducedType& tau, long long k);

// Number of 0/1-equivalence classes of k-vertex 0/1-polytopes in I^n,
// computed from a precomputed cycle index table.
BigInt count_classes(const CycleIndexTable& table, long long k);
BigInt count_classes(int n, long long k, int cap = kDefaultDimensionCap);

// Total number of 0/1-equivalence classes of 0/1-polytopes in I^n.
BigInt count_all(const CycleIndexTable& table);
BigInt count_all(int n, int cap = kDefaultDimensionCap);

}  // namespace acutecube
