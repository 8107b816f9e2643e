#pragma once

#include <cstddef>
#include <vector>

#include "kcp/count_table.hpp"
#include "kcp/logconcavity.hpp"
#include "kcp/partition_vec.hpp"

namespace kcp {

enum class MajRelation { StrictlyMajorizes, Equal, StrictlyMajorizedBy, Incomparable };

const char* to_string(MajRelation r);

// Relation of b against a under the ascending convention: b majorizes a iff
// every prefix sum of a is <= the matching prefix sum of b (nu = 1..r-1;
// full sums agree by the precondition). Requires equal n and equal r.
MajRelation majorizes(const PartitionVec& b, const PartitionVec& a);

// Robin Hood transfer: parts[ell] += 1, parts[j] -= 1. Indices are 1-based
// positions in the pre-step vector and need parts[j] > parts[ell]; the
// result is re-sorted into canonical ascending form.
struct RHStep {
    std::size_t ell = 0, j = 0;
};

PartitionVec robin_hood(const PartitionVec& a, RHStep step);

// Deterministic greedy chain from a to b, valid when b majorizes a:
// repeatedly transfer from the first surplus position into the first deficit
// position. Equal inputs give the empty chain; applying the steps in order
// reproduces b exactly.
std::vector<RHStep> rh_chain(const PartitionVec& a, const PartitionVec& b);

// Product p_k(v_1) p_k(v_2) ... p_k(v_r); table must cover max part.
Int pk_product(const CountTable& t, const PartitionVec& v);
Int pk_product(const CountTable& t, const std::vector<unsigned long>& parts);

struct ChainStepEvidence {
    RHStep step;
    PartitionVec after;
    int case_id = 0; // 1: a_j = a_ell + 1, product preserved; 2: a_j > a_ell + 1
    Int product;     // p_k of `after`
};

struct MajorizationEvidence {
    MajRelation relation = MajRelation::Incomparable;
    Int product_a, product_b;
    Verdict verdict = Verdict::Equal; // strict iff product_b > product_a
    std::vector<ChainStepEvidence> chain;
    bool chain_reaches_b = false;
    bool product_monotone = false; // never decreases along the chain
    bool has_strict_step = false;  // at least one strict increase
};

// Exact product comparison plus a replayed Robin Hood chain with per-step
// case classification. Requires strict majorization; the table must cover
// the largest part of a. For k < 3 the evidence is a report only (the
// inequality is asserted nowhere), which callers handle via `verdict`.
MajorizationEvidence verify_majorization_inequality(const CountTable& t,
                                                    const PartitionVec& a,
                                                    const PartitionVec& b);

} // namespace kcp
