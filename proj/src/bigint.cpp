#include "kcp/bigint.hpp"

#include <cmath>
#include <stdexcept>

namespace kcp {

double log_of(const Int& z)
{
    if (sgn(z) <= 0)
        throw std::invalid_argument("log_of: value must be positive");
    signed long exp2 = 0;
    double mant = mpz_get_d_2exp(&exp2, z.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp2) * M_LN2;
}

std::uint64_t isqrt_u64(std::uint64_t x)
{
    return isqrt_u128(x);
}

std::uint64_t isqrt_u128(unsigned __int128 x)
{
    if (x == 0)
        return 0;
    // double sqrt as a seed, then correct; the loops move at most a few steps
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
    while (static_cast<unsigned __int128>(r) * r > x)
        --r;
    while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= x)
        ++r;
    return r;
}

std::uint64_t icbrt_u128(unsigned __int128 x)
{
    if (x == 0)
        return 0;
    constexpr std::uint64_t rmax = 6981463658331ull; // floor(cbrt(2^128 - 1))
    auto r = static_cast<std::uint64_t>(std::cbrt(static_cast<double>(x)));
    if (r > rmax)
        r = rmax;
    auto cube = [](std::uint64_t v) {
        return static_cast<unsigned __int128>(v) * v * v;
    };
    while (r > 0 && cube(r) > x)
        --r;
    while (r < rmax && cube(r + 1) <= x)
        ++r;
    return r;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b)
{
    while (b != 0) {
        std::uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

} // namespace kcp
