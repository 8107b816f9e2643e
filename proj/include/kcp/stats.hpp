#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "kcp/count_table.hpp"
#include "kcp/partition_vec.hpp"

namespace kcp {

// Pair universe and orientation for S-set statistics.
//
// AllPairsAscLex: every unordered pair of distinct partitions, oriented by
// ascending-lexicographic order. This reproduces the reference totals
// P(P-1)/2 (pairs with equal first parts included).
// FirstPartStrict: only pairs with a_1 < b_1, oriented by first part; kept
// selectable for comparison runs.
enum class PairRule { AllPairsAscLex, FirstPartStrict };

struct StatRecord {
    unsigned long n = 0;
    std::size_t r = 0;
    unsigned k = 0;
    std::size_t total = 0; // classified pairs
    std::size_t lt = 0;    // p_k(a) < p_k(b)
    std::size_t eq = 0;
    std::size_t gt = 0;
};

// Classifies every oriented pair (a, b) of partitions of n into r parts by
// comparing p_k products exactly. Table must cover n - r + 1 (the largest
// possible part).
StatRecord s_sets(const CountTable& t, unsigned long n, std::size_t r,
                  PairRule rule = PairRule::AllPairsAscLex, unsigned threads = 0);

// All ordered pairs (a, b) with prefix sums of a <= prefix sums of b for
// 1 <= l <= R, strict somewhere in that window. 1 <= R <= r-1.
std::vector<std::pair<PartitionVec, PartitionVec>>
partial_majorization_pairs(unsigned long n, std::size_t r, std::size_t R);

struct RSearchRow {
    unsigned long n = 0;
    std::size_t minimal_R = 0; // smallest R with all S_{n,r,R} pairs lt
};

struct RSearchReport {
    std::size_t r = 0;
    unsigned k = 0;
    std::vector<RSearchRow> rows;
    std::size_t aggregate_R = 0; // max of minimal_R over the n set
};

// Minimal R per n such that every partial-majorization pair multiplies up
// strictly (p_k(a) < p_k(b)); R = r-1 always works for k >= 3 by the
// majorization theorem, so the search is over 1 <= R <= r-1. Table must
// cover max(n) - r + 1.
RSearchReport find_R(const CountTable& t, std::size_t r,
                     const std::vector<unsigned long>& n_set);

struct EqEntry {
    unsigned k = 0;
    unsigned long n = 0;
    std::size_t r = 0;
    std::size_t eq = 0; // nonzero by construction
};

// Scans k in [k_lo, k_hi], n <= n_max, 2 <= r <= min(n, r_max) and lists
// every triple whose S-set classification contains equal products.
std::vector<EqEntry> scan_s_equal(unsigned k_lo, unsigned k_hi,
                                  unsigned long n_max, std::size_t r_max);

// "95.6" style: value*100 rounded half-up to two decimals, trailing zeros
// (and a bare point) stripped.
std::string percent_2dp(std::size_t part, std::size_t total);

std::string stat_csv_row(const StatRecord& s);                 // n,r,k,total,lt,eq,gt
std::string stat_markdown_table(const std::vector<StatRecord>& rows);

} // namespace kcp
