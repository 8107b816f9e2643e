#pragma once

#include <cstddef>
#include <vector>

#include "kcp/bigint.hpp"
#include "kcp/count_table.hpp"
#include "kcp/schedule.hpp"

namespace kcp {

// Recursive sandwich sequences for p_k under a truncation schedule d:
//
//   lower(0) = upper(0) = 1,
//   lower(n) = (k/n) sum_{l=1}^{d_n} sigma(l) lower(n-l),
//   upper(n) = (k/n) sum_{l=1}^{d_n} sigma(l) upper(n-l) + k n upper(n-d_n-1),
//
// with value 0 at negative indices. Then lower(n) <= p_k(n) <= upper(n), and
// with the exact schedule both collapse to p_k. Values are exact rationals.
class BoundTables {
public:
    BoundTables(unsigned k, DSchedule schedule,
                std::vector<Rat> lower, std::vector<Rat> upper);

    unsigned k() const { return k_; }
    std::size_t n_max() const { return lower_.size() - 1; }
    const DSchedule& schedule() const { return schedule_; }
    const Rat& lower(std::size_t n) const { return lower_.at(n); }
    const Rat& upper(std::size_t n) const { return upper_.at(n); }
    const std::vector<Rat>& lower_values() const { return lower_; }
    const std::vector<Rat>& upper_values() const { return upper_; }

private:
    unsigned k_;
    DSchedule schedule_;
    std::vector<Rat> lower_, upper_;
};

// Scaled-integer builder: runs both recurrences over numerators that share a
// single running denominator, deferring all rational reduction to the end.
BoundTables bound_tables(unsigned k, const DSchedule& schedule, std::size_t n_max);

// Same recurrences evaluated term by term in mpq arithmetic. Slow; exists to
// cross-check the scaled-integer builder.
BoundTables bound_tables_reference(unsigned k, const DSchedule& schedule,
                                   std::size_t n_max);

struct SandwichReport {
    unsigned k = 0;
    std::size_t n_max = 0;
    std::size_t checked = 0;
    // n where lower(n) <= p_k(n) <= upper(n) fails
    std::vector<std::size_t> order_violations;
    // n with d_n < n but lower(n) = p_k(n); the strict-bound lemma applied
    // index by index
    std::vector<std::size_t> strictness_violations;
    // n >= first_truncated with d_n = n but lower(n) = p_k(n); the lemma read
    // as "strict from the first truncation onward" (strictness propagates
    // through the recurrence once it holds anywhere in the window)
    std::vector<std::size_t> eventual_violations;
    std::size_t first_truncated = 0; // 0 when d_j = j up to n_max

    bool ok() const
    {
        return order_violations.empty() && strictness_violations.empty()
            && eventual_violations.empty();
    }
};

// Compares the bound tables against the exact table, which must cover
// bt.n_max(). Violations become report entries, never exceptions.
SandwichReport check_sandwich(const BoundTables& bt, const CountTable& exact);
SandwichReport check_sandwich(unsigned k, const DSchedule& schedule,
                              std::size_t n_max);

struct RatioReport {
    std::size_t from = 0, to = 0;
    std::size_t checked = 0;
    std::vector<std::size_t> failures; // n with lower(n)^2 < upper(n-1) upper(n+1)
    bool ok() const { return failures.empty(); }
};

// Evaluates lower(n)^2 >= upper(n-1) upper(n+1) for n in [from, to]; the
// tables must cover [from-1, to+1].
RatioReport check_ratio_condition(const BoundTables& bt, std::size_t from,
                                  std::size_t to);
RatioReport check_ratio_condition(unsigned k, const DSchedule& schedule,
                                  std::size_t from, std::size_t to);

} // namespace kcp
