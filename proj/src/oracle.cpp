#include "dstir/oracle.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace dstir::oracle {

namespace {

void check_partition_budget(unsigned n) {
    if (n > kMaxPartitionGroundSet)
        throw std::invalid_argument("oracle: ground-set size " + std::to_string(n) +
                                    " exceeds enumeration budget " +
                                    std::to_string(kMaxPartitionGroundSet));
}

// Walks restricted growth strings element by element; block_sizes[b] tracks
// the size of block b so far. Prunes branches that cannot end with exactly k
// blocks all of size >= r.
std::uint64_t rgs_count(unsigned pos, unsigned n, unsigned k, unsigned r,
                        std::vector<unsigned>& block_sizes) {
    if (pos == n) {
        if (block_sizes.size() != k) return 0;
        for (unsigned s : block_sizes)
            if (s < r) return 0;
        return 1;
    }
    const unsigned remaining = n - pos;
    unsigned deficit = 0;
    for (unsigned s : block_sizes)
        if (s < r) deficit += r - s;
    deficit += (k - static_cast<unsigned>(block_sizes.size())) * r;
    if (block_sizes.size() > k || deficit > remaining) return 0;

    std::uint64_t total = 0;
    for (std::size_t b = 0; b < block_sizes.size(); ++b) {
        ++block_sizes[b];
        total += rgs_count(pos + 1, n, k, r, block_sizes);
        --block_sizes[b];
    }
    if (block_sizes.size() < k) {
        block_sizes.push_back(1);
        total += rgs_count(pos + 1, n, k, r, block_sizes);
        block_sizes.pop_back();
    }
    return total;
}

}  // namespace

std::uint64_t count_partitions(const PartitionSpec& spec) {
    check_partition_budget(spec.n);
    if (spec.n == 0) return spec.k == 0 ? 1 : 0;
    if (spec.k == 0 || spec.n < spec.k * spec.r) return 0;

    static std::map<std::tuple<unsigned, unsigned, unsigned>, std::uint64_t> cache;
    static std::mutex cache_mutex;
    const auto key = std::make_tuple(spec.n, spec.k, spec.r);
    {
        std::lock_guard lock(cache_mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }

    std::vector<unsigned> block_sizes;
    const std::uint64_t result = rgs_count(0, spec.n, spec.k, spec.r, block_sizes);

    std::lock_guard lock(cache_mutex);
    cache.emplace(key, result);
    return result;
}

std::uint64_t count_partitions_ordered(const PartitionSpec& spec) {
    check_partition_budget(spec.n);
    if (spec.n == 0) return spec.k == 0 ? 1 : 0;
    if (spec.k == 0 || spec.n < spec.k * spec.r) return 0;

    std::vector<unsigned> assignment(spec.n, 0);
    std::uint64_t ordered = 0;
    // Odometer over all k^n labeled assignments.
    while (true) {
        bool ok = true;
        std::vector<unsigned> count(spec.k, 0);
        for (unsigned a : assignment) ++count[a];
        for (unsigned c : count)
            if (c < spec.r) { ok = false; break; }
        if (ok) ++ordered;

        unsigned i = 0;
        while (i < spec.n && assignment[i] + 1 == spec.k) assignment[i++] = 0;
        if (i == spec.n) break;
        ++assignment[i];
    }
    std::uint64_t kfact = 1;
    for (unsigned i = 2; i <= spec.k; ++i) kfact *= i;
    return ordered / kfact;
}

std::uint64_t count_bell(unsigned n, unsigned r) {
    check_partition_budget(n);
    std::uint64_t total = 0;
    for (unsigned k = 0; k <= n; ++k) total += count_partitions({n, k, r});
    return total;
}

std::vector<std::vector<unsigned>> compositions_at_least(unsigned n, unsigned k,
                                                         unsigned r) {
    if (n > kMaxCompositionSum || k > kMaxCompositionParts)
        throw std::invalid_argument("oracle: composition enumeration budget exceeded");
    std::vector<std::vector<unsigned>> out;
    if (k == 0) {
        if (n == 0) out.push_back({});
        return out;
    }
    std::vector<unsigned> parts;
    // Depth-first in lexicographic order.
    auto recurse = [&](auto&& self, unsigned remaining, unsigned slots) -> void {
        if (slots == 1) {
            if (remaining >= r) {
                parts.push_back(remaining);
                out.push_back(parts);
                parts.pop_back();
            }
            return;
        }
        for (unsigned l = r; l + r * (slots - 1) <= remaining; ++l) {
            parts.push_back(l);
            self(self, remaining - l, slots - 1);
            parts.pop_back();
        }
    };
    recurse(recurse, n, k);
    return out;
}

}  // namespace dstir::oracle
