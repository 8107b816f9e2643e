#include "kcp/sigma.hpp"

#include <stdexcept>

namespace kcp {

SigmaTable::SigmaTable(std::size_t n_max)
{
    if (n_max == 0)
        throw std::invalid_argument("sigma_table: n_max must be >= 1");
    values_.assign(n_max + 1, 0);
    for (std::size_t d = 1; d <= n_max; ++d)
        for (std::size_t m = d; m <= n_max; m += d)
            values_[m] += d;
}

SigmaTable sigma_table(std::size_t n_max)
{
    return SigmaTable(n_max);
}

} // namespace kcp
