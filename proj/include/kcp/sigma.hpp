#pragma once

#include <cstdint>
#include <vector>

namespace kcp {

// Divisor sums sigma(1..n_max), sieved in O(n log n).
class SigmaTable {
public:
    explicit SigmaTable(std::size_t n_max);

    std::size_t n_max() const { return values_.size() - 1; }

    // sigma(l) = sum of divisors of l, 1 <= l <= n_max
    std::uint64_t operator()(std::size_t l) const { return values_[l]; }

private:
    std::vector<std::uint64_t> values_; // index 0 unused
};

SigmaTable sigma_table(std::size_t n_max);

} // namespace kcp
