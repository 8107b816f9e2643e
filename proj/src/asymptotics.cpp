#include "kcp/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

namespace kcp {

Applicability applicability(double alpha, long long n, long long ell)
{
    if (!(alpha >= 2))
        return {false, "alpha must be >= 2"};
    if (n < 2 || ell < 2)
        return {false, "n and ell must be >= 2"};
    if (n <= ell + 1)
        return {false, "need n > ell + 1"};
    double L = static_cast<double>(ell) - alpha / 24.0;
    double bound = 2.0 * std::pow(alpha, 11);
    if (alpha > 24.0)
        bound = std::max(bound, 100.0 / (alpha - 24.0));
    if (L < bound)
        return {false, "L = " + std::to_string(L) + " below "
                       + std::to_string(bound)};
    return {true, ""};
}

double main_term_log(double alpha, long long n, long long ell)
{
    Applicability ap = applicability(alpha, n, ell);
    if (!ap.ok)
        throw std::domain_error("main_term_log: " + ap.reason);
    double N = static_cast<double>(n) - 1.0 - alpha / 24.0;
    double L = static_cast<double>(ell) - alpha / 24.0;
    double sN = std::sqrt(N), sL = std::sqrt(L);
    double diff = static_cast<double>(n - 1 - ell) / (sN + sL); // sqrt N - sqrt L
    return std::log(M_PI) + (alpha / 2.0 + 1.0) * std::log(alpha / 24.0)
         - (alpha + 5.0) / 4.0 * (std::log(N) + std::log(L)) + std::log(diff)
         + M_PI * std::sqrt(2.0 * alpha / 3.0) * (sN + sL);
}

AsymptoticEstimate estimate(double alpha, long long n, long long ell)
{
    AsymptoticEstimate e;
    e.alpha = alpha;
    e.n = n;
    e.ell = ell;
    e.N = static_cast<double>(n) - 1.0 - alpha / 24.0;
    e.L = static_cast<double>(ell) - alpha / 24.0;
    e.log_main_term = main_term_log(alpha, n, ell);
    return e;
}

DifferenceCertificate certify_positive_difference(double alpha, long long n,
                                                  long long ell)
{
    Applicability ap = applicability(alpha, n, ell);
    if (!ap.ok)
        return {false, ap.reason, 0.0};
    // n > ell + 1 makes sqrt N - sqrt L > 0, so the main term is positive;
    // the error factor lies in [1/15, 29/15], a subset of (0, inf).
    return {true, "", main_term_log(alpha, n, ell)};
}

bool clears_adjacent_threshold(unsigned k, unsigned long long n)
{
    // n >= 2k^11 + k/24 + 1  <=>  24(n - 1) - k >= 48 k^11, exactly.
    if (n < 1)
        return false;
    unsigned __int128 p = 1;
    for (int i = 0; i < 11; ++i)
        p *= k;
    unsigned __int128 lhs = static_cast<unsigned __int128>(n - 1) * 24;
    if (lhs < k)
        return false;
    lhs -= k;
    if (lhs < 48 * p)
        return false;
    if (k > 24) {
        // additionally L >= 100/(k-24): (24(n-1) - k)(k - 24) >= 2400
        if (lhs * (k - 24) < 2400)
            return false;
    }
    // the theorem instance also needs ell = n-1 >= 2
    return n >= 3;
}

double ratio_check(const CountTable& t, long long n, long long ell)
{
    double alpha = static_cast<double>(t.k());
    double lmt = main_term_log(alpha, n, ell); // throws if not applicable
    if (!t.covers(static_cast<std::size_t>(n)))
        throw std::out_of_range("ratio_check: table too short");
    std::size_t un = static_cast<std::size_t>(n);
    std::size_t ul = static_cast<std::size_t>(ell);
    Int diff = t[un - 1] * t[ul + 1] - t[un] * t[ul];
    if (diff <= 0)
        return sgn(diff) == 0 ? 0.0 : -1.0; // outside [1/15, 29/15] either way
    return std::exp(log_of(diff) - lmt);
}

} // namespace kcp
