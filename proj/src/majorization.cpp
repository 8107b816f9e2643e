#include "kcp/majorization.hpp"

#include <algorithm>
#include <stdexcept>

namespace kcp {

const char* to_string(MajRelation r)
{
    switch (r) {
    case MajRelation::StrictlyMajorizes:   return "StrictlyMajorizes";
    case MajRelation::Equal:               return "Equal";
    case MajRelation::StrictlyMajorizedBy: return "StrictlyMajorizedBy";
    case MajRelation::Incomparable:        return "Incomparable";
    }
    return "?";
}

MajRelation majorizes(const PartitionVec& b, const PartitionVec& a)
{
    if (a.total() != b.total() || a.size() != b.size())
        throw std::invalid_argument("majorizes: partitions must share n and r");
    if (a == b)
        return MajRelation::Equal;
    bool b_dominates = true, a_dominates = true;
    unsigned long pa = 0, pb = 0;
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
        pa += a.parts()[i];
        pb += b.parts()[i];
        if (pa > pb)
            b_dominates = false;
        if (pb > pa)
            a_dominates = false;
    }
    if (b_dominates)
        return MajRelation::StrictlyMajorizes;
    if (a_dominates)
        return MajRelation::StrictlyMajorizedBy;
    return MajRelation::Incomparable;
}

PartitionVec robin_hood(const PartitionVec& a, RHStep step)
{
    std::size_t r = a.size();
    if (step.ell < 1 || step.ell > r || step.j < 1 || step.j > r
        || step.ell == step.j)
        throw std::invalid_argument("robin_hood: step indices out of range");
    std::vector<unsigned long> parts = a.parts();
    if (parts[step.j - 1] <= parts[step.ell - 1])
        throw std::invalid_argument("robin_hood: need parts[j] > parts[ell]");
    parts[step.ell - 1] += 1;
    parts[step.j - 1] -= 1;
    std::sort(parts.begin(), parts.end());
    return PartitionVec(std::move(parts));
}

std::vector<RHStep> rh_chain(const PartitionVec& a, const PartitionVec& b)
{
    MajRelation rel = majorizes(b, a);
    if (rel == MajRelation::StrictlyMajorizedBy || rel == MajRelation::Incomparable)
        throw std::invalid_argument("rh_chain: b must majorize a");
    std::vector<RHStep> steps;
    PartitionVec cur = a;
    while (cur != b) {
        // First differing index has cur[ell] < b[ell] (prefixes of cur stay
        // below b's); the first later index with cur[j] > b[j] exists since
        // totals agree, and cur[j] >= b[j]+1 >= b[ell]+1 >= cur[ell]+2 keeps
        // the transfer valid.
        std::size_t r = cur.size();
        std::size_t ell = 0;
        while (ell < r && cur.parts()[ell] == b.parts()[ell])
            ++ell;
        std::size_t j = ell + 1;
        while (j < r && cur.parts()[j] <= b.parts()[j])
            ++j;
        RHStep step{ell + 1, j + 1};
        steps.push_back(step);
        cur = robin_hood(cur, step);
    }
    return steps;
}

Int pk_product(const CountTable& t, const std::vector<unsigned long>& parts)
{
    Int prod = 1;
    for (unsigned long p : parts) {
        if (!t.covers(p))
            throw std::out_of_range("pk_product: table too short for part "
                                    + std::to_string(p));
        prod *= t[p];
    }
    return prod;
}

Int pk_product(const CountTable& t, const PartitionVec& v)
{
    return pk_product(t, v.parts());
}

MajorizationEvidence verify_majorization_inequality(const CountTable& t,
                                                    const PartitionVec& a,
                                                    const PartitionVec& b)
{
    MajRelation rel = majorizes(b, a);
    if (rel != MajRelation::StrictlyMajorizes)
        throw std::invalid_argument("verify_majorization_inequality: relation is "
                                    + std::string(to_string(rel))
                                    + ", need StrictlyMajorizes");
    MajorizationEvidence ev;
    ev.relation = rel;
    ev.product_a = pk_product(t, a);
    ev.product_b = pk_product(t, b);
    int c = cmp(ev.product_b, ev.product_a);
    ev.verdict = c > 0 ? Verdict::Strict : (c == 0 ? Verdict::Equal : Verdict::Reversed);

    ev.product_monotone = true;
    PartitionVec cur = a;
    Int prev = ev.product_a;
    for (RHStep step : rh_chain(a, b)) {
        // Case 1 swaps the two touched values, so the multiset and hence the
        // product are unchanged; Case 2 has parts[j] > parts[ell]+1.
        int case_id = cur.parts()[step.j - 1] == cur.parts()[step.ell - 1] + 1 ? 1 : 2;
        cur = robin_hood(cur, step);
        Int prod = pk_product(t, cur);
        if (prod < prev)
            ev.product_monotone = false;
        if (prod > prev)
            ev.has_strict_step = true;
        ev.chain.push_back({step, cur, case_id, prod});
        prev = std::move(prod);
    }
    ev.chain_reaches_b = cur == b;
    return ev;
}

} // namespace kcp
