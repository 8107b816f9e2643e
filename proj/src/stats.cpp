#include "kcp/stats.hpp"

#include <algorithm>
#include <stdexcept>

#include "kcp/majorization.hpp"
#include "kcp/parallel.hpp"

namespace kcp {

StatRecord s_sets(const CountTable& t, unsigned long n, std::size_t r,
                  PairRule rule, unsigned threads)
{
    if (r == 0 || r > n)
        throw std::invalid_argument("s_sets: need 1 <= r <= n");
    std::vector<PartitionVec> parts = enumerate_partitions(n, r);
    std::size_t P = parts.size();
    std::vector<Int> prod;
    prod.reserve(P);
    for (const PartitionVec& p : parts)
        prod.push_back(pk_product(t, p));

    StatRecord rec;
    rec.n = n;
    rec.r = r;
    rec.k = t.k();
    if (P < 2)
        return rec;

    unsigned w = worker_count(P - 1, threads);
    std::vector<StatRecord> local(w);
    // pairs (i, j), i < j: partition on the outer index; lex order makes the
    // orientation a = parts[i], b = parts[j]
    parallel_ranges(0, P - 2, w, [&](unsigned idx, std::size_t lo, std::size_t hi) {
        StatRecord& acc = local[idx];
        for (std::size_t i = lo; i <= hi; ++i) {
            for (std::size_t j = i + 1; j < P; ++j) {
                if (rule == PairRule::FirstPartStrict
                    && parts[i].parts()[0] == parts[j].parts()[0])
                    continue;
                ++acc.total;
                int c = cmp(prod[i], prod[j]);
                if (c < 0)
                    ++acc.lt;
                else if (c == 0)
                    ++acc.eq;
                else
                    ++acc.gt;
            }
        }
    });
    for (const StatRecord& acc : local) {
        rec.total += acc.total;
        rec.lt += acc.lt;
        rec.eq += acc.eq;
        rec.gt += acc.gt;
    }
    return rec;
}

namespace {

// prefix sums of a <= prefix sums of b on 1..R, strict somewhere
bool partial_major(const PartitionVec& a, const PartitionVec& b, std::size_t R)
{
    unsigned long pa = 0, pb = 0;
    bool strict = false;
    for (std::size_t i = 0; i < R; ++i) {
        pa += a.parts()[i];
        pb += b.parts()[i];
        if (pa > pb)
            return false;
        if (pa < pb)
            strict = true;
    }
    return strict;
}

} // namespace

std::vector<std::pair<PartitionVec, PartitionVec>>
partial_majorization_pairs(unsigned long n, std::size_t r, std::size_t R)
{
    if (R < 1 || R > r - 1)
        throw std::invalid_argument("partial_majorization_pairs: need 1 <= R <= r-1");
    std::vector<PartitionVec> parts = enumerate_partitions(n, r);
    std::vector<std::pair<PartitionVec, PartitionVec>> out;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = 0; j < parts.size(); ++j) {
            if (i == j)
                continue;
            if (partial_major(parts[i], parts[j], R))
                out.emplace_back(parts[i], parts[j]);
        }
    return out;
}

RSearchReport find_R(const CountTable& t, std::size_t r,
                     const std::vector<unsigned long>& n_set)
{
    if (t.k() < 3)
        throw std::invalid_argument("find_R: k must be >= 3");
    if (r < 2)
        throw std::invalid_argument("find_R: need r >= 2");
    RSearchReport rep;
    rep.r = r;
    rep.k = t.k();
    for (unsigned long n : n_set) {
        std::vector<PartitionVec> parts = enumerate_partitions(n, r);
        std::vector<Int> prod;
        prod.reserve(parts.size());
        for (const PartitionVec& p : parts)
            prod.push_back(pk_product(t, p));
        std::size_t minimal = 0;
        for (std::size_t R = 1; R <= r - 1; ++R) {
            bool all_lt = true;
            for (std::size_t i = 0; i < parts.size() && all_lt; ++i)
                for (std::size_t j = 0; j < parts.size(); ++j) {
                    if (i == j)
                        continue;
                    if (partial_major(parts[i], parts[j], R)
                        && prod[i] >= prod[j]) {
                        all_lt = false;
                        break;
                    }
                }
            if (all_lt) {
                minimal = R;
                break;
            }
        }
        rep.rows.push_back({n, minimal});
        rep.aggregate_R = std::max(rep.aggregate_R, minimal);
    }
    return rep;
}

std::vector<EqEntry> scan_s_equal(unsigned k_lo, unsigned k_hi,
                                  unsigned long n_max, std::size_t r_max)
{
    if (k_lo < 1 || k_lo > k_hi)
        throw std::invalid_argument("scan_s_equal: bad k range");
    std::vector<EqEntry> out;
    for (unsigned k = k_lo; k <= k_hi; ++k) {
        CountTable t = partition_count_table(k, n_max);
        for (unsigned long n = 2; n <= n_max; ++n)
            for (std::size_t r = 2; r <= std::min<std::size_t>(r_max, n); ++r) {
                StatRecord rec = s_sets(t, n, r);
                if (rec.eq != 0)
                    out.push_back({k, n, r, rec.eq});
            }
    }
    return out;
}

std::string percent_2dp(std::size_t part, std::size_t total)
{
    if (total == 0)
        throw std::invalid_argument("percent_2dp: zero total");
    // round-half-up of part/total*10000, exactly in integers
    unsigned long long scaled = static_cast<unsigned long long>(part) * 10000ull;
    unsigned long long q = (2 * scaled + total) / (2 * total);
    std::string digits = std::to_string(q / 100);
    unsigned rem = static_cast<unsigned>(q % 100);
    if (rem == 0)
        return digits;
    if (rem % 10 == 0)
        return digits + "." + std::to_string(rem / 10);
    std::string frac = std::to_string(rem);
    if (rem < 10)
        frac = "0" + frac;
    return digits + "." + frac;
}

std::string stat_csv_row(const StatRecord& s)
{
    return std::to_string(s.n) + ',' + std::to_string(s.r) + ','
         + std::to_string(s.k) + ',' + std::to_string(s.total) + ','
         + std::to_string(s.lt) + ',' + std::to_string(s.eq) + ','
         + std::to_string(s.gt);
}

std::string stat_markdown_table(const std::vector<StatRecord>& rows)
{
    std::string out = "| n | r | k | pairs | lt | lt% | gt | gt% |\n"
                      "|---|---|---|-------|----|-----|----|-----|\n";
    for (const StatRecord& s : rows) {
        out += "| " + std::to_string(s.n) + " | " + std::to_string(s.r) + " | "
             + std::to_string(s.k) + " | " + std::to_string(s.total) + " | "
             + std::to_string(s.lt) + " | " + percent_2dp(s.lt, s.total) + "% | "
             + std::to_string(s.gt) + " | " + percent_2dp(s.gt, s.total) + "% |\n";
    }
    return out;
}

} // namespace kcp
