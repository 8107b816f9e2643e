#include "kcp/count_table.hpp"

#include <stdexcept>

#include "kcp/sigma.hpp"

namespace kcp {

CountTable::CountTable(unsigned k, std::vector<Int> values)
    : k_(k), values_(std::move(values))
{
    if (k_ == 0)
        throw std::invalid_argument("CountTable: k must be >= 1");
    if (values_.empty() || values_[0] != 1)
        throw std::invalid_argument("CountTable: values[0] must be 1");
}

namespace {

// Continue the recurrence from values.size()-1 up to n_max.
void run_recurrence(unsigned k, std::size_t n_max, std::vector<Int>& values)
{
    if (n_max + 1 <= values.size())
        return;
    SigmaTable sig(n_max);
    values.reserve(n_max + 1);
    Int acc;
    for (std::size_t n = values.size(); n <= n_max; ++n) {
        acc = 0;
        for (std::size_t l = 1; l <= n; ++l)
            mpz_addmul_ui(acc.get_mpz_t(), values[n - l].get_mpz_t(), sig(l));
        acc *= k;
        if (mpz_fdiv_ui(acc.get_mpz_t(), n) != 0)
            throw std::logic_error("partition_count_table: non-exact division");
        mpz_divexact_ui(acc.get_mpz_t(), acc.get_mpz_t(), n);
        values.push_back(acc);
    }
}

} // namespace

CountTable partition_count_table(unsigned k, std::size_t n_max)
{
    if (k == 0)
        throw std::invalid_argument("partition_count_table: k must be >= 1");
    std::vector<Int> values;
    values.emplace_back(1);
    run_recurrence(k, n_max, values);
    return CountTable(k, std::move(values));
}

CountTable extended(const CountTable& t, std::size_t new_n_max)
{
    std::vector<Int> values(t.values().begin(), t.values().end());
    run_recurrence(t.k(), new_n_max, values);
    return CountTable(t.k(), std::move(values));
}

std::vector<Int> convolve(const std::vector<Int>& a, const std::vector<Int>& b)
{
    if (a.empty() || b.empty())
        throw std::invalid_argument("convolve: inputs must be non-empty");
    std::size_t len = std::min(a.size(), b.size());
    std::vector<Int> e(len, Int(0));
    for (std::size_t n = 0; n < len; ++n)
        for (std::size_t j = 0; j <= n; ++j)
            mpz_addmul(e[n].get_mpz_t(), a[j].get_mpz_t(), b[n - j].get_mpz_t());
    return e;
}

} // namespace kcp
