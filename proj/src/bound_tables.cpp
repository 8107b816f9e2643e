#include "kcp/bound_tables.hpp"

#include <stdexcept>
#include <utility>

#include "kcp/sigma.hpp"

namespace kcp {

BoundTables::BoundTables(unsigned k, DSchedule schedule,
                         std::vector<Rat> lower, std::vector<Rat> upper)
    : k_(k), schedule_(std::move(schedule)),
      lower_(std::move(lower)), upper_(std::move(upper))
{
    if (k_ == 0)
        throw std::invalid_argument("BoundTables: k must be >= 1");
    if (lower_.empty() || lower_.size() != upper_.size())
        throw std::invalid_argument("BoundTables: table size mismatch");
    if (lower_[0] != 1 || upper_[0] != 1)
        throw std::logic_error("BoundTables: values at n=0 must be 1");
    for (std::size_t n = 0; n < lower_.size(); ++n)
        if (lower_[n] > upper_[n])
            throw std::logic_error("BoundTables: lower > upper at n="
                                   + std::to_string(n));
}

namespace {

// One recurrence over numerators x_j = value_j * den for a shared running
// denominator. Dividing by n forces den to absorb n/gcd(s, n); every live
// numerator is rescaled by the same factor so the family stays coherent.
std::pair<std::vector<Int>, Int> build_scaled(unsigned k, const DSchedule& sched,
                                              std::size_t n_max, bool upper)
{
    SigmaTable sig(n_max == 0 ? 1 : n_max);
    std::vector<Int> num;
    num.reserve(n_max + 1);
    num.emplace_back(1);
    Int den = 1;
    Int s;
    for (std::size_t n = 1; n <= n_max; ++n) {
        std::size_t d = sched(n);
        s = 0;
        for (std::size_t l = 1; l <= d; ++l)
            mpz_addmul_ui(s.get_mpz_t(), num[n - l].get_mpz_t(), sig(l));
        if (upper && n >= d + 1)
            mpz_addmul_ui(s.get_mpz_t(), num[n - d - 1].get_mpz_t(),
                          static_cast<unsigned long>(n) * static_cast<unsigned long>(n));
        s *= k;
        unsigned long g = mpz_gcd_ui(nullptr, s.get_mpz_t(),
                                     static_cast<unsigned long>(n));
        if (g != n) {
            unsigned long f = static_cast<unsigned long>(n) / g;
            den *= f;
            for (std::size_t j = 0; j < n; ++j)
                num[j] *= f;
        }
        Int x;
        mpz_divexact_ui(x.get_mpz_t(), s.get_mpz_t(), g);
        num.push_back(std::move(x));
    }
    return {std::move(num), std::move(den)};
}

std::vector<Rat> canonical(std::vector<Int> num, const Int& den)
{
    std::vector<Rat> out;
    out.reserve(num.size());
    for (Int& x : num) {
        Rat r(std::move(x), den);
        r.canonicalize();
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace

BoundTables bound_tables(unsigned k, const DSchedule& schedule, std::size_t n_max)
{
    if (k == 0)
        throw std::invalid_argument("bound_tables: k must be >= 1");
    auto [lo_num, lo_den] = build_scaled(k, schedule, n_max, false);
    auto [up_num, up_den] = build_scaled(k, schedule, n_max, true);
    return BoundTables(k, schedule, canonical(std::move(lo_num), lo_den),
                       canonical(std::move(up_num), up_den));
}

BoundTables bound_tables_reference(unsigned k, const DSchedule& schedule,
                                   std::size_t n_max)
{
    if (k == 0)
        throw std::invalid_argument("bound_tables_reference: k must be >= 1");
    SigmaTable sig(n_max == 0 ? 1 : n_max);
    std::vector<Rat> lo, up;
    lo.reserve(n_max + 1);
    up.reserve(n_max + 1);
    lo.emplace_back(1);
    up.emplace_back(1);
    for (std::size_t n = 1; n <= n_max; ++n) {
        std::size_t d = schedule(n);
        Rat sl = 0, su = 0;
        for (std::size_t l = 1; l <= d; ++l) {
            unsigned long w = sig(l);
            sl += Rat(w) * lo[n - l];
            su += Rat(w) * up[n - l];
        }
        sl *= k;
        sl /= static_cast<unsigned long>(n);
        su *= k;
        su /= static_cast<unsigned long>(n);
        if (n >= d + 1)
            su += Rat(static_cast<unsigned long>(k) * n) * up[n - d - 1];
        lo.push_back(std::move(sl));
        up.push_back(std::move(su));
    }
    return BoundTables(k, schedule, std::move(lo), std::move(up));
}

SandwichReport check_sandwich(const BoundTables& bt, const CountTable& exact)
{
    if (!exact.covers(bt.n_max()))
        throw std::out_of_range("check_sandwich: exact table too short");
    if (exact.k() != bt.k())
        throw std::invalid_argument("check_sandwich: k mismatch");
    const DSchedule& sched = bt.schedule();
    SandwichReport rep;
    rep.k = bt.k();
    rep.n_max = bt.n_max();
    rep.first_truncated = sched.first_truncated(bt.n_max());
    for (std::size_t n = 0; n <= bt.n_max(); ++n) {
        ++rep.checked;
        const Rat& lo = bt.lower(n);
        const Rat& up = bt.upper(n);
        const Int& ex = exact[n];
        if (mpq_cmp_z(lo.get_mpq_t(), ex.get_mpz_t()) > 0
            || mpq_cmp_z(up.get_mpq_t(), ex.get_mpz_t()) < 0) {
            rep.order_violations.push_back(n);
            continue;
        }
        if (n == 0)
            continue;
        bool equal = mpq_cmp_z(lo.get_mpq_t(), ex.get_mpz_t()) == 0;
        if (!equal)
            continue;
        std::size_t d = sched(n);
        if (d < n)
            rep.strictness_violations.push_back(n);
        else if (rep.first_truncated != 0 && n >= rep.first_truncated)
            rep.eventual_violations.push_back(n);
    }
    return rep;
}

SandwichReport check_sandwich(unsigned k, const DSchedule& schedule,
                              std::size_t n_max)
{
    BoundTables bt = bound_tables(k, schedule, n_max);
    CountTable exact = partition_count_table(k, n_max);
    return check_sandwich(bt, exact);
}

RatioReport check_ratio_condition(const BoundTables& bt, std::size_t from,
                                  std::size_t to)
{
    if (from < 1 || from > to || to + 1 > bt.n_max())
        throw std::out_of_range("check_ratio_condition: range must fit tables "
                                "with one index of margin on each side");
    RatioReport rep;
    rep.from = from;
    rep.to = to;
    for (std::size_t n = from; n <= to; ++n) {
        ++rep.checked;
        Rat lhs = bt.lower(n) * bt.lower(n);
        Rat rhs = bt.upper(n - 1) * bt.upper(n + 1);
        if (lhs < rhs)
            rep.failures.push_back(n);
    }
    return rep;
}

RatioReport check_ratio_condition(unsigned k, const DSchedule& schedule,
                                  std::size_t from, std::size_t to)
{
    BoundTables bt = bound_tables(k, schedule, to + 1);
    return check_ratio_condition(bt, from, to);
}

} // namespace kcp
