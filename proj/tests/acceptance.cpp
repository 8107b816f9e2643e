// Acceptance gate: ten fixed criteria, one PASS/FAIL line each, exit 0 only
// when every criterion holds. Frozen expectations are exact; no tolerances
// beyond the stated ratio interval in criterion 7.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <exception>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "kcp/asymptotics.hpp"
#include "kcp/bound_tables.hpp"
#include "kcp/count_table.hpp"
#include "kcp/logconcavity.hpp"
#include "kcp/majorization.hpp"
#include "kcp/partition_vec.hpp"
#include "kcp/schedule.hpp"
#include "kcp/stats.hpp"

namespace {

using kcp::CountTable;
using kcp::Int;

struct Outcome {
    bool pass = false;
    std::string detail;
};

// 1. Frozen S-set statistics rows, zero tolerance on (total, lt, gt).
Outcome frozen_stat_rows()
{
    struct Row {
        unsigned long n;
        std::size_t r;
        unsigned k;
        std::size_t total, lt, gt;
    };
    const Row rows[] = {
        {13, 3, 4, 91, 87, 4},
        {30, 3, 6, 2775, 2565, 210},
        {17, 3, 5, 276, 262, 12},
        {45, 4, 10, 225456, 194425, 31031},
    };
    std::ostringstream out;
    bool ok = true;
    for (const Row& row : rows) {
        auto t = kcp::partition_count_table(row.k, row.n - row.r + 1);
        auto s = kcp::s_sets(t, row.n, row.r);
        if (s.total != row.total || s.lt != row.lt || s.gt != row.gt) {
            ok = false;
            out << " (" << row.n << "," << row.r << "," << row.k
                << "): expected total/lt/gt " << row.total << "/" << row.lt
                << "/" << row.gt << ", got " << s.total << "/" << s.lt << "/"
                << s.gt << " (eq=" << s.eq << ");";
        }
    }
    if (ok)
        return {true, "4/4 rows matched exactly"};
    return {false, "mismatch:" + out.str()};
}

// 2. The two known non-strict cases, with exact products.
Outcome exception_pair()
{
    auto t2 = kcp::partition_count_table(2, 6);
    Int c_lhs = t2[5] * t2[5], c_rhs = t2[4] * t2[6];
    bool cross_ok = kcp::verify_cross_inequality(t2, 4, 6) == kcp::Verdict::Reversed
        && c_lhs == 1296 && c_rhs == 1300;

    auto t3 = kcp::partition_count_table(3, 2);
    Int a_lhs = t3[1] * t3[1], a_rhs = t3[0] * t3[2];
    bool adj_ok = kcp::is_strictly_logconcave_at(t3, 1) == kcp::Verdict::Equal
        && a_lhs == 9 && a_rhs == 9;

    std::ostringstream out;
    out << "k=2 (ell,n)=(4,6): " << c_lhs << " vs " << c_rhs << " "
        << kcp::to_string(kcp::verify_cross_inequality(t2, 4, 6)) << "; k=3 n=1: "
        << a_lhs << " vs " << a_rhs << " "
        << kcp::to_string(kcp::is_strictly_logconcave_at(t3, 1));
    return {cross_ok && adj_ok, out.str()};
}

// 3. Exact strict log-concavity scan, k in {3,4,5}, 2 <= n <= 10^4.
Outcome logconcavity_scan()
{
    std::ostringstream out;
    bool ok = true;
    for (unsigned k : {3u, 4u, 5u}) {
        auto rep = kcp::verify_range(k, 2, 10000, kcp::RangeMethod::Exact);
        ok = ok && rep.ok() && rep.checked == 9999 && rep.exact_checked == 9999;
        out << "k=" << k << ": " << rep.exceptions.size() << " exceptions  ";
    }
    return {ok, out.str()};
}

// 4. Colour additivity through the Cauchy product, n <= 300.
Outcome colour_additivity()
{
    const std::pair<unsigned, unsigned> cases[] = {{1, 1}, {2, 3}, {4, 5}};
    bool ok = true;
    for (auto [k1, k2] : cases) {
        auto a = kcp::partition_count_table(k1, 300);
        auto b = kcp::partition_count_table(k2, 300);
        auto c = kcp::partition_count_table(k1 + k2, 300);
        ok = ok && kcp::convolve(a.values(), b.values()) == c.values();
    }
    return {ok, "(1,1), (2,3), (4,5) up to n = 300"};
}

// 5. Closed forms p_k(1) = k and p_k(2) = k(k+3)/2 for k <= 200.
Outcome closed_forms()
{
    for (unsigned k = 1; k <= 200; ++k) {
        auto t = kcp::partition_count_table(k, 2);
        if (!(t[1] == k && t[2] == Int(k) * (k + 3) / 2))
            return {false, "first failure at k = " + std::to_string(k)};
    }
    return {true, "k = 1..200"};
}

// 6. Sandwich property under the desk schedule to 5000 plus exact-schedule
//    collapse to 500, k in {4,5}.
Outcome sandwich_bounds()
{
    std::ostringstream out;
    bool ok = true;
    for (unsigned k : {4u, 5u}) {
        auto rep = kcp::check_sandwich(k, kcp::DSchedule::desk(2000), 5000);
        bool good = rep.ok() && rep.first_truncated == 2001;
        ok = ok && good;
        out << "k=" << k << " desk(2000): " << rep.order_violations.size() << "+"
            << rep.strictness_violations.size() << "+"
            << rep.eventual_violations.size() << " violations  ";
    }
    for (unsigned k : {4u, 5u}) {
        auto bt = kcp::bound_tables(k, kcp::DSchedule::exact(), 500);
        auto ex = kcp::partition_count_table(k, 500);
        bool collapse = true;
        for (std::size_t n = 0; n <= 500; ++n)
            collapse = collapse && bt.lower(n) == ex[n] && bt.upper(n) == ex[n];
        ok = ok && collapse;
        out << "k=" << k << " exact collapse: " << (collapse ? "yes" : "NO") << "  ";
    }
    return {ok, out.str()};
}

// 7. Exact-difference / main-term ratio inside [1/15, 29/15] for k = 2,
//    ell = 4100, n in {4102, 4110, 4150, 4200}.
Outcome asymptotic_ratio()
{
    auto t2 = kcp::partition_count_table(2, 4200);
    std::ostringstream out;
    bool ok = true;
    for (long long n : {4102LL, 4110LL, 4150LL, 4200LL}) {
        double r = kcp::ratio_check(t2, n, 4100);
        ok = ok && r >= 1.0 / 15.0 && r <= 29.0 / 15.0;
        char buf[48];
        std::snprintf(buf, sizeof buf, "n=%lld: %.4f  ", n, r);
        out << buf;
    }
    return {ok, out.str()};
}

// 8. Exhaustive majorization slice: k in {3,4,6}, every pair of partitions
//    of every n <= 40 into r <= 5 parts. Strict majorization must give a
//    strict product inequality, and the greedy transfer chain must reach b
//    with per-step products never decreasing and increasing at least once.
//    Products are memoized per cell; the chain itself is colour-independent.
Outcome majorization_slice()
{
    const std::array<unsigned, 3> ks{3, 4, 6};
    std::vector<CountTable> tables;
    tables.reserve(ks.size());
    for (unsigned k : ks)
        tables.push_back(kcp::partition_count_table(k, 40));

    std::size_t strict_pairs = 0, steps = 0;
    for (unsigned long n = 1; n <= 40; ++n) {
        for (std::size_t r = 1; r <= std::min<unsigned long>(n, 5); ++r) {
            auto parts = kcp::enumerate_partitions(n, r);
            const std::size_t count = parts.size();

            std::map<kcp::PartitionVec, std::size_t> index;
            for (std::size_t i = 0; i < count; ++i)
                index.emplace(parts[i], i);
            std::vector<std::array<Int, 3>> prod(count);
            for (std::size_t i = 0; i < count; ++i)
                for (std::size_t m = 0; m < ks.size(); ++m)
                    prod[i][m] = kcp::pk_product(tables[m], parts[i]);

            auto fail = [&](std::size_t ai, std::size_t bi, const char* what) {
                std::ostringstream out;
                out << what << " for a=" << parts[ai].str() << " b=" << parts[bi].str()
                    << " (n=" << n << ", r=" << r << ")";
                return Outcome{false, out.str()};
            };

            for (std::size_t i = 0; i < count; ++i) {
                for (std::size_t j = i + 1; j < count; ++j) {
                    auto rel = kcp::majorizes(parts[j], parts[i]);
                    std::size_t ai, bi;
                    if (rel == kcp::MajRelation::StrictlyMajorizes) {
                        ai = i;
                        bi = j;
                    } else if (rel == kcp::MajRelation::StrictlyMajorizedBy) {
                        ai = j;
                        bi = i;
                    } else {
                        continue;
                    }
                    ++strict_pairs;

                    for (std::size_t m = 0; m < ks.size(); ++m)
                        if (!(prod[ai][m] < prod[bi][m]))
                            return fail(ai, bi, "product not strict");

                    auto chain = kcp::rh_chain(parts[ai], parts[bi]);
                    if (chain.empty())
                        return fail(ai, bi, "empty chain");
                    steps += chain.size();

                    kcp::PartitionVec cur = parts[ai];
                    std::size_t prev = ai;
                    std::array<bool, 3> strict_seen{};
                    for (const auto& st : chain) {
                        cur = kcp::robin_hood(cur, st);
                        auto it = index.find(cur);
                        if (it == index.end())
                            return fail(ai, bi, "chain left the cell");
                        for (std::size_t m = 0; m < ks.size(); ++m) {
                            if (prod[it->second][m] < prod[prev][m])
                                return fail(ai, bi, "product decreased along chain");
                            if (prod[prev][m] < prod[it->second][m])
                                strict_seen[m] = true;
                        }
                        prev = it->second;
                    }
                    if (prev != bi)
                        return fail(ai, bi, "chain missed b");
                    for (bool s : strict_seen)
                        if (!s)
                            return fail(ai, bi, "no strict step in chain");
                }
            }
        }
    }
    std::ostringstream out;
    out << strict_pairs << " strictly-majorizing pairs, " << steps
        << " chain steps, no counterexample";
    return {true, out.str()};
}

// 9. Equal-product classes are empty on every reference statistics row.
Outcome equal_set_empty()
{
    struct Row {
        unsigned long n;
        std::size_t r;
        unsigned k;
    };
    const Row rows[] = {
        {13, 3, 4}, {17, 3, 5}, {20, 3, 5}, {20, 4, 4}, {30, 3, 3}, {30, 3, 4},
        {30, 3, 5}, {30, 3, 6}, {35, 3, 4}, {35, 3, 5}, {45, 3, 8}, {45, 4, 5},
        {45, 4, 6}, {45, 4, 7}, {45, 4, 8}, {45, 4, 9}, {45, 4, 10},
    };

    std::map<unsigned, std::size_t> need;
    for (const Row& row : rows) {
        std::size_t top = row.n - row.r + 1;
        need[row.k] = std::max(need[row.k], top);
    }
    std::map<unsigned, CountTable> tables;
    for (auto [k, top] : need)
        tables.emplace(k, kcp::partition_count_table(k, top));

    std::ostringstream out;
    bool ok = true;
    std::size_t nonzero = 0;
    for (const Row& row : rows) {
        auto s = kcp::s_sets(tables.at(row.k), row.n, row.r);
        if (s.eq != 0 || s.lt + s.gt != s.total) {
            ok = false;
            ++nonzero;
            out << " (" << row.n << "," << row.r << "," << row.k
                << "): eq=" << s.eq << ";";
        }
    }
    if (ok)
        return {true, "17 rows, eq = 0 on every row"};
    return {false, std::to_string(nonzero) + " rows with equal products:" + out.str()};
}

// 10. Equivalence of the cross and adjacent forms for k = 4: both universal
//     statements evaluated independently over n <= 200, then compared.
Outcome equivalence_k4()
{
    auto t4 = kcp::partition_count_table(4, 200);
    bool all_adjacent = true;
    for (std::size_t n = 1; n <= 199; ++n)
        all_adjacent = all_adjacent
            && kcp::is_strictly_logconcave_at(t4, n) == kcp::Verdict::Strict;

    bool all_cross = true;
    std::size_t cross_checked = 0;
    for (std::size_t n = 2; n <= 200; ++n) {
        for (std::size_t ell = 0; ell + 2 <= n; ++ell) {
            all_cross = all_cross
                && kcp::verify_cross_inequality(t4, ell, n) == kcp::Verdict::Strict;
            ++cross_checked;
        }
    }

    std::ostringstream out;
    out << "adjacent strict on [1,199]: " << (all_adjacent ? "yes" : "NO") << "; "
        << cross_checked << " cross pairs strict: " << (all_cross ? "yes" : "NO");
    return {all_adjacent == all_cross && all_adjacent, out.str()};
}

} // namespace

int main()
{
    struct Criterion {
        const char* name;
        Outcome (*run)();
    };
    const Criterion list[] = {
        {"frozen S-set statistics rows", frozen_stat_rows},
        {"known non-strict cases, exact products", exception_pair},
        {"strict log-concavity, k in {3,4,5}, n in [2,10000]", logconcavity_scan},
        {"colour additivity via convolution", colour_additivity},
        {"closed forms p_k(1), p_k(2), k <= 200", closed_forms},
        {"sandwich bounds: desk(2000) to 5000, exact collapse to 500", sandwich_bounds},
        {"main-term ratio in [1/15, 29/15], ell = 4100", asymptotic_ratio},
        {"majorization products, exhaustive n <= 40, r <= 5", majorization_slice},
        {"equal-product classes empty on reference rows", equal_set_empty},
        {"cross/adjacent equivalence, k = 4, n <= 200", equivalence_k4},
    };

    int failures = 0;
    int idx = 0;
    for (const Criterion& c : list) {
        ++idx;
        auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out = {false, std::string("unexpected exception: ") + e.what()};
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        std::printf("[%s] %2d. %s (%.1fs)%s%s\n", out.pass ? "PASS" : "FAIL", idx,
                    c.name, secs, out.detail.empty() ? "" : " -- ",
                    out.detail.c_str());
        std::fflush(stdout);
        if (!out.pass)
            ++failures;
    }
    std::printf("%d/10 criteria passed\n", 10 - failures);
    return failures == 0 ? 0 : 1;
}
