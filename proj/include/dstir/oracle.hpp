#pragma once

#include <cstdint>
#include <vector>

namespace dstir::oracle {

// Enumeration budgets; calls beyond these are rejected.
inline constexpr unsigned kMaxPartitionGroundSet = 14;
inline constexpr unsigned kMaxCompositionSum = 40;
inline constexpr unsigned kMaxCompositionParts = 10;

struct PartitionSpec {
    unsigned n = 0;  // ground-set size
    unsigned k = 0;  // block count
    unsigned r = 1;  // minimum block size
};

// Number of partitions of {1,...,n} into exactly k unordered non-empty
// blocks, each of size >= r, by restricted-growth-string enumeration.
// Throws std::invalid_argument when n exceeds the budget.
std::uint64_t count_partitions(const PartitionSpec& spec);

// Independent re-count: ordered assignments of elements to k labeled blocks,
// filtered on block sizes, divided by k!.
std::uint64_t count_partitions_ordered(const PartitionSpec& spec);

// Sum of count_partitions over all block counts k.
std::uint64_t count_bell(unsigned n, unsigned r);

// All ordered k-tuples (l_1,...,l_k) with l_i >= r and sum l_i = n, in
// lexicographic order.
std::vector<std::vector<unsigned>> compositions_at_least(unsigned n, unsigned k,
                                                         unsigned r);

}  // namespace dstir::oracle
