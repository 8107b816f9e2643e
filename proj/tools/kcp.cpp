// kcp: k-coloured partition tables and inequality checks.
//
// Exit codes: 0 success / no violation, 1 property violation found,
// 2 usage or environment error.

#include <cstdio>
#include <exception>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kcp/asymptotics.hpp"
#include "kcp/bound_tables.hpp"
#include "kcp/cache.hpp"
#include "kcp/logconcavity.hpp"
#include "kcp/majorization.hpp"
#include "kcp/schedule.hpp"
#include "kcp/stats.hpp"

using namespace kcp;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_violation = 1;
constexpr int exit_usage = 2;

// Desk cap for ranges without --full-scale; the full-scale runs go far past
// this and are opt-in.
constexpr std::size_t desk_cap = 100000;

std::filesystem::path cache_dir_from(const std::string& flag)
{
    return flag.empty() ? default_cache_dir() : std::filesystem::path(flag);
}

CountTable cached_table(unsigned k, std::size_t n_max, const std::string& dir_flag)
{
    CacheManifest manifest(cache_dir_from(dir_flag));
    return manifest.load_or_build(k, n_max);
}

DSchedule make_schedule(const std::string& name, std::size_t desk_switch)
{
    if (name == "exact")
        return DSchedule::exact();
    if (name == "d4")
        return DSchedule::d4();
    if (name == "d5")
        return DSchedule::d5();
    if (name == "desk")
        return DSchedule::desk(desk_switch);
    throw CLI::ValidationError("--schedule", "unknown schedule '" + name + "'");
}

int cmd_table(unsigned k, std::size_t n_max, const std::string& dir_flag)
{
    CacheManifest manifest(cache_dir_from(dir_flag));
    CountTable t = manifest.load_or_build(k, n_max);
    auto entry = manifest.find(k);
    std::printf("k=%u n_max=%zu values=%zu file=%s checksum=%016llx\n", k,
                t.n_max(), t.n_max() + 1,
                entry ? entry->file.c_str() : "?",
                entry ? static_cast<unsigned long long>(entry->checksum) : 0ull);
    std::printf("p_%u(%zu) = %s\n", k, n_max, t[n_max].get_str().c_str());
    return exit_ok;
}

int cmd_logcheck(unsigned k, std::size_t from, std::size_t to,
                 const std::string& method_name, const std::string& sched_name,
                 std::size_t desk_switch, std::size_t exact_threshold,
                 bool full_scale, const std::string& dir_flag, unsigned threads)
{
    if (!full_scale && to > desk_cap) {
        std::fprintf(stderr, "range end %zu exceeds the desk cap %zu; "
                             "pass --full-scale to run anyway\n", to, desk_cap);
        return exit_usage;
    }
    RangeMethod method = RangeMethod::Auto;
    if (method_name == "exact")
        method = RangeMethod::Exact;
    else if (method_name == "bounds")
        method = RangeMethod::Bounds;
    else if (method_name != "auto")
        throw CLI::ValidationError("--method", "unknown method '" + method_name + "'");

    VerifyConfig cfg;
    cfg.threads = threads;
    cfg.exact_threshold = exact_threshold;
    if (full_scale) {
        // full-scale defaults: k=3 entirely exact, k=4/5 exact up to the
        // schedule switch and bound tables beyond, with the verbatim rules
        if (k == 3)
            cfg.exact_threshold = to;
        else if (k == 4) {
            cfg.exact_threshold = 200000;
            cfg.schedule = DSchedule::d4();
        } else if (k == 5) {
            cfg.exact_threshold = 800000;
            cfg.schedule = DSchedule::d5();
        }
    }
    if (!sched_name.empty())
        cfg.schedule = make_schedule(sched_name, desk_switch);

    CountTable exact = cached_table(
        k, std::min(to, cfg.exact_threshold) + 1, dir_flag);
    cfg.exact = &exact;

    RangeReport rep = verify_range(k, from, to, method, cfg);
    std::printf("k=%u range=[%zu,%zu] checked=%zu exact=%zu bounds=%zu "
                "fallback=%zu exceptions=%zu\n",
                k, from, to, rep.checked, rep.exact_checked,
                rep.bounds_certified, rep.exact_fallback, rep.exceptions.size());
    for (const ExceptionRecord& e : rep.exceptions)
        std::printf("%u,%zu,%s,%s\n", e.k, e.n,
                    e.ell ? std::to_string(*e.ell).c_str() : "",
                    to_string(e.kind));
    return rep.ok() ? exit_ok : exit_violation;
}

int cmd_cross(unsigned k, std::size_t ell, std::size_t n, const std::string& dir_flag)
{
    CountTable t = cached_table(k, n, dir_flag);
    Verdict v = verify_cross_inequality(t, ell, n);
    Int lhs = t[ell + 1] * t[n - 1];
    Int rhs = t[ell] * t[n];
    std::printf("%s\n%s %s %s\n", to_string(v), lhs.get_str().c_str(),
                v == Verdict::Strict ? ">" : (v == Verdict::Equal ? "=" : "<"),
                rhs.get_str().c_str());
    return v == Verdict::Strict ? exit_ok : exit_violation;
}

int cmd_majorize(unsigned k, const std::string& a_str, const std::string& b_str,
                 const std::string& dir_flag)
{
    PartitionVec a = PartitionVec::parse(a_str);
    PartitionVec b = PartitionVec::parse(b_str);
    MajRelation rel = majorizes(b, a);
    if (rel != MajRelation::StrictlyMajorizes) {
        std::printf("%s; no assertion; SKIP\n", to_string(rel));
        return exit_ok;
    }
    CountTable t = cached_table(k, a.max_part(), dir_flag);
    MajorizationEvidence ev = verify_majorization_inequality(t, a, b);
    const char* cmp_sym = ev.verdict == Verdict::Strict
                              ? "<"
                              : (ev.verdict == Verdict::Equal ? "=" : ">");
    bool pass = ev.verdict == Verdict::Strict && ev.chain_reaches_b
             && ev.product_monotone && (ev.has_strict_step || ev.chain.empty());
    const char* tag = k >= 3 ? (pass ? "PASS" : "FAIL") : "REPORT";
    std::printf("%s; %s %s %s; %s\n", to_string(rel),
                ev.product_a.get_str().c_str(), cmp_sym,
                ev.product_b.get_str().c_str(), tag);
    if (k < 3)
        return exit_ok;
    return pass ? exit_ok : exit_violation;
}

int cmd_chain(const std::string& a_str, const std::string& b_str, unsigned k,
              const std::string& dir_flag)
{
    PartitionVec a = PartitionVec::parse(a_str);
    PartitionVec b = PartitionVec::parse(b_str);
    std::vector<RHStep> steps = rh_chain(a, b);
    std::optional<CountTable> t;
    if (k > 0)
        t.emplace(cached_table(k, a.max_part(), dir_flag));
    PartitionVec cur = a;
    std::printf("start %s%s\n", cur.str().c_str(),
                t ? (" p_k=" + pk_product(*t, cur).get_str()).c_str() : "");
    for (RHStep s : steps) {
        cur = robin_hood(cur, s);
        std::printf("T(%zu,%zu) -> %s%s\n", s.ell, s.j, cur.str().c_str(),
                    t ? (" p_k=" + pk_product(*t, cur).get_str()).c_str() : "");
    }
    if (cur != b) {
        std::printf("replay FAILED to reach %s\n", b.str().c_str());
        return exit_violation;
    }
    std::printf("steps=%zu reached %s\n", steps.size(), b.str().c_str());
    return exit_ok;
}

int cmd_stats(unsigned long n, std::size_t r, unsigned k, const std::string& format,
              const std::string& rule_name, const std::string& dir_flag,
              unsigned threads)
{
    PairRule rule = PairRule::AllPairsAscLex;
    if (rule_name == "firstpart")
        rule = PairRule::FirstPartStrict;
    else if (rule_name != "allpairs")
        throw CLI::ValidationError("--rule", "unknown rule '" + rule_name + "'");
    if (r < 1 || r > n)
        throw CLI::ValidationError("--r", "need 1 <= r <= n");
    CountTable t = cached_table(k, n - r + 1, dir_flag);
    StatRecord rec = s_sets(t, n, r, rule, threads);
    if (format == "csv")
        std::printf("%s\n", stat_csv_row(rec).c_str());
    else if (format == "markdown")
        std::printf("%s", stat_markdown_table({rec}).c_str());
    else
        throw CLI::ValidationError("--format", "unknown format '" + format + "'");
    return exit_ok;
}

int cmd_bounds(unsigned k, std::size_t n_max, const std::string& sched_name,
               std::size_t desk_switch, bool csv, std::size_t ratio_from,
               std::size_t ratio_to, const std::string& dir_flag)
{
    DSchedule sched = make_schedule(sched_name.empty() ? "desk" : sched_name,
                                    desk_switch);
    BoundTables bt = bound_tables(k, sched, n_max);
    CountTable exact = cached_table(k, n_max, dir_flag);
    SandwichReport rep = check_sandwich(bt, exact);
    std::printf("k=%u schedule=%s n_max=%zu checked=%zu order_violations=%zu "
                "strictness_violations=%zu eventual_violations=%zu "
                "first_truncated=%zu\n",
                k, sched.name().c_str(), n_max, rep.checked,
                rep.order_violations.size(), rep.strictness_violations.size(),
                rep.eventual_violations.size(), rep.first_truncated);
    if (csv) {
        for (std::size_t n = 0; n <= n_max; ++n) {
            const Rat& lo = bt.lower(n);
            const Rat& up = bt.upper(n);
            bool bad_order = mpq_cmp_z(lo.get_mpq_t(), exact[n].get_mpz_t()) > 0
                          || mpq_cmp_z(up.get_mpq_t(), exact[n].get_mpz_t()) < 0;
            std::printf("%zu,%s/%s,%s,%s/%s,%s\n", n,
                        lo.get_num().get_str().c_str(),
                        lo.get_den().get_str().c_str(),
                        exact[n].get_str().c_str(),
                        up.get_num().get_str().c_str(),
                        up.get_den().get_str().c_str(),
                        bad_order ? "violation" : "ok");
        }
    }
    bool ratio_ok = true;
    if (ratio_to != 0) {
        RatioReport rr = check_ratio_condition(bt, ratio_from, ratio_to);
        std::printf("ratio [%zu,%zu]: checked=%zu failures=%zu\n", rr.from,
                    rr.to, rr.checked, rr.failures.size());
        for (std::size_t n : rr.failures)
            std::printf("ratio_failure,%zu\n", n);
        ratio_ok = rr.ok();
    }
    return rep.ok() && ratio_ok ? exit_ok : exit_violation;
}

int cmd_asym(double alpha, long long n, long long ell, bool with_ratio,
             const std::string& dir_flag)
{
    double a_int;
    if (with_ratio && std::modf(alpha, &a_int) != 0.0) {
        std::fprintf(stderr, "ratio needs integer alpha "
                             "(exact tables exist only there)\n");
        return exit_usage;
    }
    Applicability ap = applicability(alpha, n, ell);
    std::string lmt, ratio;
    bool ratio_bad = false;
    if (ap.ok) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.12g", main_term_log(alpha, n, ell));
        lmt = buf;
        if (with_ratio) {
            CountTable t = cached_table(static_cast<unsigned>(alpha),
                                        static_cast<std::size_t>(n), dir_flag);
            double rv = ratio_check(t, n, ell);
            std::snprintf(buf, sizeof buf, "%.12g", rv);
            ratio = buf;
            ratio_bad = !(rv >= AsymptoticEstimate::error_lo
                          && rv <= AsymptoticEstimate::error_hi);
        }
    }
    std::printf("%.10g,%lld,%lld,%d,%s,%s\n", alpha, n, ell, ap.ok ? 1 : 0,
                lmt.c_str(), ratio.c_str());
    if (!ap.ok)
        std::printf("# not applicable: %s\n", ap.reason.c_str());
    return ratio_bad ? exit_violation : exit_ok;
}

int cmd_scanR(std::size_t r, unsigned k, unsigned long n_min, unsigned long n_max,
              const std::string& dir_flag)
{
    if (r < 2 || n_max < r)
        throw CLI::ValidationError("--r", "need 2 <= r <= nmax");
    if (n_min < r)
        n_min = r;
    std::vector<unsigned long> ns;
    for (unsigned long n = n_min; n <= n_max; ++n)
        ns.push_back(n);
    CountTable t = cached_table(k, n_max - r + 1, dir_flag);
    RSearchReport rep = find_R(t, r, ns);
    bool ok = true;
    for (const RSearchRow& row : rep.rows) {
        std::printf("%lu,%zu\n", row.n, row.minimal_R);
        if (row.minimal_R == 0)
            ok = false;
    }
    std::printf("aggregate_R=%zu\n", rep.aggregate_R);
    return ok ? exit_ok : exit_violation;
}

int cmd_scaneq(unsigned k_lo, unsigned k_hi, unsigned long n_max, std::size_t r_max)
{
    std::vector<EqEntry> entries = scan_s_equal(k_lo, k_hi, n_max, r_max);
    bool violation = false;
    for (const EqEntry& e : entries) {
        std::printf("%u,%lu,%zu,%zu\n", e.k, e.n, e.r, e.eq);
        if (e.k >= 4)
            violation = true; // equal products are claimed absent for k >= 4
    }
    std::printf("entries=%zu\n", entries.size());
    return violation ? exit_violation : exit_ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"k-coloured partition tables, log-concavity and majorization "
                 "checks"};
    app.require_subcommand(1);

    std::string cache_dir;
    app.add_option("--cache-dir", cache_dir,
                   "table cache directory (default: $KCP_CACHE_DIR or a "
                   "kcp-cache directory under the system temp dir)");

    unsigned k = 0, threads = 0;
    std::size_t n_max = 0, from = 1, to = 0, r = 0, desk_switch = 2000;
    std::size_t exact_threshold = 10000, ratio_from = 1, ratio_to = 0;
    unsigned long n_ul = 0, n_min_ul = 0;
    long long nn = 0, ell_ll = 0;
    std::size_t ell = 0, n_sz = 0;
    double alpha = 0;
    std::string a_str, b_str, method = "auto", sched_name, format = "csv";
    std::string rule_name = "allpairs";
    bool full_scale = false, csv_rows = false, with_ratio = false;
    unsigned k_lo = 3, k_hi = 10;

    auto* c_table = app.add_subcommand("table", "build or extend a p_k table");
    c_table->add_option("--k", k, "colour count")->required();
    c_table->add_option("--nmax", n_max, "largest n")->required();

    auto* c_log = app.add_subcommand("logcheck",
                                     "strict log-concavity over a range");
    c_log->add_option("--k", k)->required();
    c_log->add_option("--from", from, "first n (default 1)");
    c_log->add_option("--to", to)->required();
    c_log->add_option("--method", method, "auto|exact|bounds");
    c_log->add_option("--schedule", sched_name, "exact|d4|d5|desk");
    c_log->add_option("--desk-switch", desk_switch);
    c_log->add_option("--exact-threshold", exact_threshold);
    c_log->add_option("--threads", threads);
    c_log->add_flag("--full-scale", full_scale,
                    "allow full-scale ranges (hours of runtime)");

    auto* c_cross = app.add_subcommand("cross", "cross inequality at (k, ell, n)");
    c_cross->add_option("--k", k)->required();
    c_cross->add_option("--ell", ell)->required();
    c_cross->add_option("--n", n_sz)->required();

    auto* c_maj = app.add_subcommand("majorize",
                                     "majorization product inequality");
    c_maj->add_option("--k", k)->required();
    c_maj->add_option("--a", a_str, "ascending parts, e.g. 1,3")->required();
    c_maj->add_option("--b", b_str)->required();

    auto* c_chain = app.add_subcommand("chain", "Robin Hood chain from a to b");
    c_chain->add_option("--a", a_str)->required();
    c_chain->add_option("--b", b_str)->required();
    c_chain->add_option("--k", k, "also print p_k products along the chain");

    auto* c_stats = app.add_subcommand("stats", "S-set pair classification");
    c_stats->add_option("--n", n_ul)->required();
    c_stats->add_option("--r", r)->required();
    c_stats->add_option("--k", k)->required();
    c_stats->add_option("--format", format, "csv|markdown");
    c_stats->add_option("--rule", rule_name, "allpairs|firstpart");
    c_stats->add_option("--threads", threads);

    auto* c_bounds = app.add_subcommand("bounds",
                                        "sandwich bound tables and checks");
    c_bounds->add_option("--k", k)->required();
    c_bounds->add_option("--nmax", n_max)->required();
    c_bounds->add_option("--schedule", sched_name, "exact|d4|d5|desk");
    c_bounds->add_option("--desk-switch", desk_switch);
    c_bounds->add_option("--ratio-from", ratio_from);
    c_bounds->add_option("--ratio-to", ratio_to,
                         "also check the ratio condition up to here");
    c_bounds->add_flag("--csv", csv_rows, "emit per-n csv rows");

    auto* c_asym = app.add_subcommand("asym", "main-term evaluation");
    c_asym->add_option("--alpha", alpha)->required();
    c_asym->add_option("--n", nn)->required();
    c_asym->add_option("--ell", ell_ll)->required();
    c_asym->add_flag("--ratio", with_ratio,
                     "compare against the exact difference (integer alpha)");

    auto* c_scanR = app.add_subcommand("scanR", "minimal prefix depth per n");
    c_scanR->add_option("--r", r)->required();
    c_scanR->add_option("--k", k)->required();
    c_scanR->add_option("--nmin", n_min_ul);
    c_scanR->add_option("--nmax", n_ul)->required();

    auto* c_scaneq = app.add_subcommand("scaneq",
                                        "list S-set triples with equal products");
    c_scaneq->add_option("--kmin", k_lo);
    c_scaneq->add_option("--kmax", k_hi);
    c_scaneq->add_option("--nmax", n_ul)->required();
    c_scaneq->add_option("--rmax", r);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (c_table->parsed())
            return cmd_table(k, n_max, cache_dir);
        if (c_log->parsed())
            return cmd_logcheck(k, from, to, method, sched_name, desk_switch,
                                exact_threshold, full_scale, cache_dir, threads);
        if (c_cross->parsed())
            return cmd_cross(k, ell, n_sz, cache_dir);
        if (c_maj->parsed())
            return cmd_majorize(k, a_str, b_str, cache_dir);
        if (c_chain->parsed())
            return cmd_chain(a_str, b_str, k, cache_dir);
        if (c_stats->parsed())
            return cmd_stats(n_ul, r, k, format, rule_name, cache_dir, threads);
        if (c_bounds->parsed())
            return cmd_bounds(k, n_max, sched_name, desk_switch, csv_rows,
                              ratio_from, ratio_to, cache_dir);
        if (c_asym->parsed())
            return cmd_asym(alpha, nn, ell_ll, with_ratio, cache_dir);
        if (c_scanR->parsed())
            return cmd_scanR(r, k, n_min_ul, n_ul, cache_dir);
        if (c_scaneq->parsed())
            return cmd_scaneq(k_lo, k_hi, n_ul, r == 0 ? 4 : r);
    } catch (const CLI::ValidationError& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "invalid argument: %s\n", e.what());
        return exit_usage;
    } catch (const std::out_of_range& e) {
        std::fprintf(stderr, "out of range: %s\n", e.what());
        return exit_usage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_usage;
    }
    return exit_usage;
}
