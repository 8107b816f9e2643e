#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "kcp/bound_tables.hpp"
#include "kcp/count_table.hpp"
#include "kcp/schedule.hpp"

namespace kcp {

enum class Verdict { Strict, Equal, Reversed };

const char* to_string(Verdict v);

// Three-way exact comparison of p_k(n)^2 against p_k(n-1) p_k(n+1).
// Needs the table to cover n+1 and n >= 1.
Verdict is_strictly_logconcave_at(const CountTable& t, std::size_t n);
Verdict is_strictly_logconcave_at(unsigned k, std::size_t n);

// Three-way exact comparison of p_k(l+1) p_k(n-1) against p_k(l) p_k(n).
// Requires l <= n-2; the table must cover n.
Verdict verify_cross_inequality(const CountTable& t, std::size_t ell, std::size_t n);
Verdict verify_cross_inequality(unsigned k, std::size_t ell, std::size_t n);

struct ExceptionRecord {
    unsigned k = 0;
    std::size_t n = 0;
    std::optional<std::size_t> ell; // set for cross-form records
    Verdict kind = Verdict::Equal;  // Equal or Reversed
};

enum class RangeMethod { Auto, Exact, Bounds };

struct VerifyConfig {
    // Auto switches from exact tables to bound tables above this n.
    std::size_t exact_threshold = 10000;
    // Schedule for the bounds leg; required whenever that leg is exercised.
    std::optional<DSchedule> schedule;
    // Reused when they already cover the needed range.
    const CountTable* exact = nullptr;
    const BoundTables* bounds = nullptr;
    unsigned threads = 0; // 0 = hardware
};

struct RangeReport {
    unsigned k = 0;
    std::size_t n_lo = 0, n_hi = 0;
    std::size_t checked = 0;
    std::size_t exact_checked = 0;    // settled by exact comparison
    std::size_t bounds_certified = 0; // settled by ratio condition + strict lower bound
    std::size_t exact_fallback = 0;   // bounds premise failed, settled exactly
    std::vector<ExceptionRecord> exceptions; // ascending n
    bool ok() const { return exceptions.empty(); }
};

// Verdict per n in [n_lo, n_hi]; every non-strict n becomes an exception
// record. The bounds leg certifies strictness where d_n < n and the ratio
// condition lower(n)^2 >= upper(n-1) upper(n+1) holds, and falls back to the
// exact comparison elsewhere so no n is ever skipped.
RangeReport verify_range(unsigned k, std::size_t n_lo, std::size_t n_hi,
                         RangeMethod method = RangeMethod::Auto,
                         const VerifyConfig& cfg = {});

// Deterministic decomposition k = 3 j1 + 4 j2 + 5 j3 for k >= 3.
std::array<unsigned, 3> decompose_k(unsigned k);

enum class CertMethod { Exact, Bounds, Asymptotic, Convolution, Uncertified };

const char* to_string(CertMethod m);

struct Certificate {
    unsigned k = 0;
    std::size_t n = 0;
    CertMethod method = CertMethod::Uncertified;
    bool premises_verified = false;
    std::optional<std::array<unsigned, 3>> decomposition; // Convolution only
    std::string detail; // premise trace, human-readable
};

struct CertifyConfig {
    std::size_t exact_threshold = 10000;
    // Tables reused when they cover the route's needs; otherwise the exact
    // route builds its own, and the bounds route builds desk-schedule tables
    // on demand up to on_demand_cap (0 disables on-demand building).
    const CountTable* exact = nullptr;
    const BoundTables* bounds = nullptr;
    std::size_t on_demand_cap = 20000;
};

// Certification pipeline: Exact below the threshold, Asymptotic once
// n >= 2k^11 + k/24 + 1, Bounds in between for k in {4,5}, Convolution for
// k >= 6 (reduces to base certificates over the full window). Gaps yield an
// explicit Uncertified result, never a false certificate. (3,1) is rejected.
Certificate certify_strict_logconcavity(unsigned k, std::size_t n,
                                        const CertifyConfig& cfg = {});

} // namespace kcp
