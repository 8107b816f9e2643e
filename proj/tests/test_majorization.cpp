#include <doctest.h>

#include <map>
#include <stdexcept>
#include <vector>

#include "kcp/count_table.hpp"
#include "kcp/majorization.hpp"
#include "kcp/partition_vec.hpp"

using kcp::Int;
using kcp::MajRelation;
using kcp::PartitionVec;
using kcp::RHStep;
using kcp::Verdict;

namespace {

PartitionVec pv(std::vector<unsigned long> parts)
{
    return PartitionVec(std::move(parts));
}

// partitions of n into exactly r parts, classic two-way recurrence
unsigned long count_exact(unsigned long n, std::size_t r)
{
    static std::map<std::pair<unsigned long, std::size_t>, unsigned long> memo;
    if (r == 0)
        return n == 0 ? 1 : 0;
    if (n < r)
        return 0;
    auto key = std::make_pair(n, r);
    auto it = memo.find(key);
    if (it != memo.end())
        return it->second;
    unsigned long v = count_exact(n - 1, r - 1) + count_exact(n - r, r);
    memo[key] = v;
    return v;
}

} // namespace

TEST_CASE("partitions: construction and parsing")
{
    auto p = PartitionVec::parse("1,2,3");
    CHECK(p.parts() == std::vector<unsigned long>{1, 2, 3});
    CHECK(p.total() == 6);
    CHECK(p.size() == 3);
    CHECK(p.max_part() == 3);
    CHECK(p.part(0) == 1);
    CHECK(p.str() == "(1,2,3)");
    CHECK(PartitionVec::parse("7").str() == "(7)");

    CHECK_THROWS_AS(PartitionVec::parse("2,1"), std::invalid_argument);
    CHECK_THROWS_AS(PartitionVec::parse("0,3"), std::invalid_argument);
    CHECK_THROWS_AS(PartitionVec::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(PartitionVec::parse("1,,2"), std::invalid_argument);
    CHECK_THROWS_AS(PartitionVec::parse("a,b"), std::invalid_argument);
    CHECK_THROWS_AS(PartitionVec::parse("3,"), std::invalid_argument);
    CHECK_THROWS_AS(pv({3, 2}), std::invalid_argument);
    CHECK_THROWS_AS(pv({}), std::invalid_argument);
    CHECK_THROWS_AS(pv({0, 1}), std::invalid_argument);
}

TEST_CASE("partitions: enumeration is ascending-lex and complete")
{
    auto p52 = kcp::enumerate_partitions(5, 2);
    REQUIRE(p52.size() == 2);
    CHECK(p52[0] == pv({1, 4}));
    CHECK(p52[1] == pv({2, 3}));

    auto p133 = kcp::enumerate_partitions(13, 3);
    CHECK(p133.size() == 14);

    auto p33 = kcp::enumerate_partitions(3, 3);
    REQUIRE(p33.size() == 1);
    CHECK(p33[0] == pv({1, 1, 1}));

    CHECK_THROWS_AS(kcp::enumerate_partitions(5, 0), std::invalid_argument);
    CHECK_THROWS_AS(kcp::enumerate_partitions(5, 6), std::invalid_argument);

    for (unsigned long n = 1; n <= 40; ++n)
        for (std::size_t r = 1; r <= std::min<unsigned long>(n, 5); ++r) {
            auto list = kcp::enumerate_partitions(n, r);
            CHECK(list.size() == count_exact(n, r));
            for (std::size_t i = 0; i < list.size(); ++i) {
                CHECK(list[i].total() == n);
                CHECK(list[i].size() == r);
                if (i > 0)
                    CHECK(list[i - 1] < list[i]);
            }
        }
}

TEST_CASE("majorization: relation on the textbook pairs")
{
    CHECK(kcp::majorizes(pv({2, 2}), pv({1, 3})) == MajRelation::StrictlyMajorizes);
    CHECK(kcp::majorizes(pv({1, 3}), pv({2, 2})) == MajRelation::StrictlyMajorizedBy);
    CHECK(kcp::majorizes(pv({1, 3}), pv({1, 3})) == MajRelation::Equal);
    CHECK(kcp::majorizes(pv({1, 4, 8}), pv({2, 2, 9})) == MajRelation::Incomparable);
    CHECK(kcp::majorizes(pv({4, 4, 5}), pv({1, 1, 11})) == MajRelation::StrictlyMajorizes);

    CHECK_THROWS_AS(kcp::majorizes(pv({1, 3}), pv({1, 4})), std::invalid_argument);
    CHECK_THROWS_AS(kcp::majorizes(pv({4}), pv({1, 3})), std::invalid_argument);
}

TEST_CASE("majorization: relation is a strict partial order on (12,3)")
{
    auto list = kcp::enumerate_partitions(12, 3);
    for (const auto& a : list)
        for (const auto& b : list) {
            auto ab = kcp::majorizes(b, a);
            auto ba = kcp::majorizes(a, b);
            if (ab == MajRelation::StrictlyMajorizes)
                CHECK(ba == MajRelation::StrictlyMajorizedBy);
            if (ab == MajRelation::Equal) {
                CHECK(a == b);
                CHECK(ba == MajRelation::Equal);
            }
            if (ab == MajRelation::Incomparable)
                CHECK(ba == MajRelation::Incomparable);
            for (const auto& c : list)
                if (ab == MajRelation::StrictlyMajorizes
                    && kcp::majorizes(c, b) == MajRelation::StrictlyMajorizes)
                    CHECK(kcp::majorizes(c, a) == MajRelation::StrictlyMajorizes);
        }
}

TEST_CASE("majorization: robin hood steps")
{
    CHECK(kcp::robin_hood(pv({1, 3}), {1, 2}) == pv({2, 2}));
    CHECK(kcp::robin_hood(pv({1, 1, 11}), {1, 3}) == pv({1, 2, 10}));
    // transfer that forces a re-sort
    CHECK(kcp::robin_hood(pv({2, 3, 3}), {1, 3}) == pv({2, 3, 3}));

    CHECK_THROWS_AS(kcp::robin_hood(pv({2, 2}), RHStep{1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(kcp::robin_hood(pv({1, 3}), RHStep{2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(kcp::robin_hood(pv({1, 3}), RHStep{0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(kcp::robin_hood(pv({1, 3}), RHStep{1, 3}), std::invalid_argument);
}

TEST_CASE("majorization: greedy chains replay to the target")
{
    auto one = kcp::rh_chain(pv({1, 3}), pv({2, 2}));
    REQUIRE(one.size() == 1);
    CHECK(one[0].ell == 1);
    CHECK(one[0].j == 2);

    CHECK(kcp::rh_chain(pv({2, 3}), pv({2, 3})).empty());
    CHECK(kcp::rh_chain(pv({5}), pv({5})).empty());

    auto chain = kcp::rh_chain(pv({1, 1, 11}), pv({4, 4, 5}));
    REQUIRE(chain.size() == 6);
    PartitionVec cur = pv({1, 1, 11});
    const std::vector<std::vector<unsigned long>> expect = {
        {1, 2, 10}, {2, 2, 9}, {2, 3, 8}, {3, 3, 7}, {3, 4, 6}, {4, 4, 5}};
    for (std::size_t i = 0; i < chain.size(); ++i) {
        CHECK(chain[i].ell == 1);
        CHECK(chain[i].j == 3);
        cur = kcp::robin_hood(cur, chain[i]);
        CHECK(cur == pv(expect[i]));
    }

    CHECK_THROWS_AS(kcp::rh_chain(pv({2, 2}), pv({1, 3})), std::invalid_argument);
    CHECK_THROWS_AS(kcp::rh_chain(pv({2, 2, 9}), pv({1, 4, 8})), std::invalid_argument);
}

TEST_CASE("majorization: products against the count table")
{
    auto t4 = kcp::partition_count_table(4, 12);
    CHECK(kcp::pk_product(t4, pv({1, 6, 6})) == 1317904);
    CHECK(kcp::pk_product(t4, pv({2, 2, 9})) == 1015280);
    CHECK(kcp::pk_product(t4, pv({1, 1, 11})) == 307328);
    CHECK(kcp::pk_product(t4, pv({4, 4, 5})) == 2778300);
    CHECK(kcp::pk_product(t4, std::vector<unsigned long>{1, 6, 6}) == 1317904);
    CHECK(kcp::pk_product(t4, pv({12})) == t4[12]);

    auto t5 = kcp::partition_count_table(4, 5);
    CHECK_THROWS_AS(kcp::pk_product(t5, pv({1, 6, 6})), std::out_of_range);
}

TEST_CASE("majorization: inequality evidence on the known examples")
{
    auto t3 = kcp::partition_count_table(3, 4);
    auto e = kcp::verify_majorization_inequality(t3, pv({1, 3}), pv({2, 2}));
    CHECK(e.relation == MajRelation::StrictlyMajorizes);
    CHECK(e.product_a == 66);
    CHECK(e.product_b == 81);
    CHECK(e.verdict == Verdict::Strict);
    REQUIRE(e.chain.size() == 1);
    CHECK(e.chain[0].case_id == 2);
    CHECK(e.chain[0].after == pv({2, 2}));
    CHECK(e.chain[0].product == 81);
    CHECK(e.chain_reaches_b);
    CHECK(e.product_monotone);
    CHECK(e.has_strict_step);

    auto t4 = kcp::partition_count_table(4, 12);
    auto e2 = kcp::verify_majorization_inequality(t4, pv({1, 1, 11}), pv({1, 2, 10}));
    CHECK(e2.product_a == 307328);
    CHECK(e2.product_b == 566048);
    CHECK(e2.verdict == Verdict::Strict);

    auto e3 = kcp::verify_majorization_inequality(t4, pv({1, 1, 11}), pv({4, 4, 5}));
    CHECK(e3.product_b == 2778300);
    REQUIRE(e3.chain.size() == 6);
    CHECK(e3.chain.back().after == pv({4, 4, 5}));
    CHECK(e3.product_monotone);
    CHECK(e3.has_strict_step);

    CHECK_THROWS_AS(kcp::verify_majorization_inequality(t4, pv({1, 3}), pv({1, 3})),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        kcp::verify_majorization_inequality(t4, pv({2, 2, 9}), pv({1, 4, 8})),
        std::invalid_argument);
}

TEST_CASE("majorization: k = 2 evidence reports the reversal honestly")
{
    // (4,6) -> (5,5) is the cross reversal 1296 < 1300 in majorization form
    auto t2 = kcp::partition_count_table(2, 6);
    auto e = kcp::verify_majorization_inequality(t2, pv({4, 6}), pv({5, 5}));
    CHECK(e.relation == MajRelation::StrictlyMajorizes);
    CHECK(e.product_a == 1300);
    CHECK(e.product_b == 1296);
    CHECK(e.verdict == Verdict::Reversed);
    CHECK(e.chain_reaches_b);
    CHECK_FALSE(e.product_monotone);
    CHECK_FALSE(e.has_strict_step);
}

TEST_CASE("majorization: exhaustive slice replays every strict pair")
{
    auto t3 = kcp::partition_count_table(3, 22);
    std::size_t strict_pairs = 0;
    for (unsigned long n = 2; n <= 22; ++n)
        for (std::size_t r = 2; r <= std::min<unsigned long>(n, 4); ++r) {
            auto list = kcp::enumerate_partitions(n, r);
            for (const auto& a : list)
                for (const auto& b : list) {
                    if (kcp::majorizes(b, a) != MajRelation::StrictlyMajorizes)
                        continue;
                    ++strict_pairs;
                    auto e = kcp::verify_majorization_inequality(t3, a, b);
                    CHECK(e.verdict == Verdict::Strict);
                    CHECK(e.product_b > e.product_a);
                    CHECK(e.chain_reaches_b);
                    CHECK(e.product_monotone);
                    CHECK(e.has_strict_step);
                    REQUIRE(!e.chain.empty());
                    // intermediates stay between a and b in the order
                    PartitionVec cur = a;
                    for (const auto& st : e.chain) {
                        cur = kcp::robin_hood(cur, st.step);
                        CHECK(cur == st.after);
                        auto rel = kcp::majorizes(b, cur);
                        CHECK((rel == MajRelation::StrictlyMajorizes
                               || rel == MajRelation::Equal));
                        // greedy transfers always move at least 2 units of
                        // imbalance, so every step is a case-2 strict one
                        CHECK(st.case_id == 2);
                    }
                }
        }
    CHECK(strict_pairs > 1000);
}

TEST_CASE("majorization: case 1 transfers permute the parts")
{
    // adjacent parts: the transfer swaps the two values, so the multiset and
    // the product are untouched
    auto t4 = kcp::partition_count_table(4, 4);
    auto a = pv({2, 3, 4});
    auto after = kcp::robin_hood(a, {1, 2});
    CHECK(after == a);
    CHECK(kcp::pk_product(t4, after) == kcp::pk_product(t4, a));
}
