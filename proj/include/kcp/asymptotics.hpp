#pragma once

#include <cstddef>
#include <string>

#include "kcp/count_table.hpp"

namespace kcp {

// Main-term machinery for the exact difference
//   p_a(n-1) p_a(l+1) - p_a(n) p_a(l)
//     = pi (a/24)^{a/2+1} (NL)^{-(a+5)/4} (sqrt N - sqrt L)
//       e^{pi sqrt(2a/3)(sqrt N + sqrt L)} (1 + O_<=(14/15)),
// where N = n-1-a/24, L = l-a/24, valid once L >= max{2a^11, 100/(a-24)}.
// Everything is evaluated in log space; the exponential alone overflows
// doubles long before the interesting range ends.

struct Applicability {
    bool ok = false;
    std::string reason; // set when !ok
};

// n > l+1, n,l >= 2, and L >= max{2a^11, 100/(a-24)}. For alpha <= 24 the
// second operand is negative or undefined and only the first binds.
Applicability applicability(double alpha, long long n, long long ell);

struct AsymptoticEstimate {
    double alpha = 0;
    long long n = 0, ell = 0;
    double N = 0, L = 0;
    double log_main_term = 0;
    // endpoints 1 - 14/15 and 1 + 14/15
    static constexpr double error_lo = 1.0 / 15.0;
    static constexpr double error_hi = 29.0 / 15.0;
};

// log of the main term; sqrt N - sqrt L is computed as
// (n-1-ell)/(sqrt N + sqrt L) to dodge cancellation. Throws
// std::domain_error when applicability fails.
double main_term_log(double alpha, long long n, long long ell);
AsymptoticEstimate estimate(double alpha, long long n, long long ell);

struct DifferenceCertificate {
    bool certified = false;
    std::string reason;       // refusal reason when !certified
    double log_main_term = 0; // valid when certified
};

// Certifies p_a(n-1)p_a(l+1) - p_a(n)p_a(l) > 0: the main term is positive
// and the error factor stays inside [1/15, 29/15]. Refusal is a value.
DifferenceCertificate certify_positive_difference(double alpha, long long n,
                                                  long long ell);

// Exact check that n clears the adjacent-instance threshold
// n >= 2k^11 + k/24 + 1 (so the theorem applies with n -> n+1, l = n-1).
// Pure 128-bit integer arithmetic, no rounding.
bool clears_adjacent_threshold(unsigned k, unsigned long long n);

// (exact difference) / exp(main_term_log) for integer alpha = t.k(); the
// caller asserts membership in [1/15, 29/15]. Table must cover n.
double ratio_check(const CountTable& t, long long n, long long ell);

} // namespace kcp
