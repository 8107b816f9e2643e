#pragma once

#include <cstdint>
#include <vector>

#include "kcp/bigint.hpp"

namespace kcp {

// Exact values p_k(0..n_max) for one colour count k. Immutable after
// construction; extension produces a new table, so completed tables can be
// read from any number of threads.
class CountTable {
public:
    CountTable(unsigned k, std::vector<Int> values);

    unsigned k() const { return k_; }
    std::size_t n_max() const { return values_.size() - 1; }

    const Int& operator[](std::size_t n) const { return values_[n]; }
    const std::vector<Int>& values() const { return values_; }

    // covers index n (so p_k(n) is available)
    bool covers(std::size_t n) const { return n < values_.size(); }

private:
    unsigned k_;
    std::vector<Int> values_;
};

// p_k(n) = (k/n) * sum_{l=1..n} sigma(l) p_k(n-l); the division is exact
// for every n, and inexactness is reported as std::logic_error.
CountTable partition_count_table(unsigned k, std::size_t n_max);

// New table for the same k covering new_n_max, reusing the prefix.
CountTable extended(const CountTable& t, std::size_t new_n_max);

// Cauchy product prefix: e_n = sum_{j=0..n} a_j b_{n-j}, emitted for
// n < min(len(a), len(b)) so every term is available.
std::vector<Int> convolve(const std::vector<Int>& a, const std::vector<Int>& b);

} // namespace kcp
