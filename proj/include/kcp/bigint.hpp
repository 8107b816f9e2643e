#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace kcp {

using Int = mpz_class;
using Rat = mpq_class;

// Natural log of a positive big integer. Goes through mantissa/exponent
// extraction, so the result is accurate to ~1 ulp even when the value is
// far outside double range.
double log_of(const Int& z);

// Floor square root / cube root on unsigned integers. Pure integer
// bisection-free Newton with correction loops; never touches floating
// point beyond the initial guess, so floors are exact at perfect powers.
std::uint64_t isqrt_u64(std::uint64_t x);
std::uint64_t isqrt_u128(unsigned __int128 x);
std::uint64_t icbrt_u128(unsigned __int128 x);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

} // namespace kcp
