#pragma once

#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <vector>

#include "twothree/bigint.hpp"
#include "twothree/identities.hpp"

namespace twothree {

// Bounded exhaustive search over N X^2 + 2^L 3^M = Y^N (main) or
// X^2 + 2^L 3^M = Y^N (variant).  The sweep runs Y outermost so Y^N is
// computed once per (Y, N) and reused across every (L, M) cell; perfect
// squares are detected by exact integer square roots.
struct SearchConfig {
    Int n_max, y_max;
    long l_max = 1, m_max = 1;
    bool variant = false;       // true: drop the N coefficient, gcd(X, Y) = 1
    bool filtered = true;       // apply the mod-6 pruning (sound; cross-checked unfiltered)
    unsigned jobs = 1;
    bool allow_zero_exponents = false;  // exploratory only; excluded from acceptance runs
};

struct SearchReport {
    SearchConfig config;
    std::vector<CandidateTuple> solutions;           // re-verified exactly at insertion
    std::vector<CandidateTuple> catalog_conflicts;   // variant: minimal exponent not 3 or 4
    unsigned long long candidates_tested = 0;
    std::int64_t elapsed_ms = 0;
    bool ok() const { return catalog_conflicts.empty(); }
};

namespace detail {

struct SearchSlice {
    std::vector<CandidateTuple> solutions;
    unsigned long long candidates = 0;
};

inline bool coprime_to_six(unsigned long residue) { return residue == 1 || residue == 5; }

// Smallest divisor >= 3 of n; a solution at a composite exponent N is also
// one at each divisor (with base Y^(N/d)), so conflicts with the pure-power
// catalog are judged on the minimal exponent form.
inline CandidateTuple minimal_exponent_form(const CandidateTuple& sol) {
    if (sol.n == 3 || sol.n == 4) return sol;
    for (Int d = 3; d <= sol.n; ++d) {
        if (!mpz_divisible_p(sol.n.get_mpz_t(), d.get_mpz_t())) continue;
        const Int cofactor = sol.n / d;
        if (cofactor == 1 || !cofactor.fits_ulong_p()) break;  // prime exponent stays as is
        return CandidateTuple{d, sol.x, pow_ui(sol.y, cofactor.get_ui()), sol.l, sol.m};
    }
    return sol;
}

inline void scan_y_range(const SearchConfig& cfg, const std::vector<std::vector<Int>>& table,
                         long lmin, long mmin, const Int& y_lo, const Int& y_hi,
                         SearchSlice* slice) {
    const unsigned long n_max = cfg.n_max.get_ui();
    const unsigned long n_lo = cfg.variant ? 3 : 2;
    for (Int y = y_lo; y <= y_hi; ++y) {
        if (cfg.filtered && !coprime_to_six(mod_ui(y, 6))) continue;
        Int ypow = y;
        for (unsigned long n = 2; n <= n_max; ++n) {
            ypow *= y;  // ypow = y^n
            if (n < n_lo) continue;
            if (cfg.filtered && !cfg.variant && !coprime_to_six(n % 6)) continue;
            for (size_t li = 0; li < table.size(); ++li) {
                if (table[li][0] >= ypow) break;
                for (size_t mi = 0; mi < table[li].size(); ++mi) {
                    const Int& pw = table[li][mi];
                    if (pw >= ypow) break;
                    ++slice->candidates;
                    const Int diff = ypow - pw;
                    Int x, square;
                    if (cfg.variant) {
                        square = diff;
                    } else {
                        if (!mpz_divisible_ui_p(diff.get_mpz_t(), n)) continue;
                        square = diff / static_cast<unsigned long>(n);
                    }
                    if (!is_perfect_square(square, &x) || x < 1) continue;
                    if (gcd(x, y) != 1) continue;
                    if (!cfg.variant && gcd(Int(n), y) != 1) continue;
                    CandidateTuple sol{Int(n), x, y, Int(lmin + static_cast<long>(li)),
                                       Int(mmin + static_cast<long>(mi))};
                    // insertion-time re-verification: the report cannot
                    // contain a false positive
                    const Int nx = cfg.variant ? x : Int(Int(n) * x);
                    const Int lhs = nx * x + pow23(sol.l.get_ui(), sol.m.get_ui());
                    if (lhs != ypow || gcd(nx, y) != 1)
                        throw std::logic_error("search: insertion check failed");
                    slice->solutions.push_back(std::move(sol));
                }
            }
        }
    }
}

}  // namespace detail

inline SearchReport run_search(const SearchConfig& cfg) {
    if (cfg.n_max < 1 || cfg.y_max < 1 || cfg.l_max < 1 || cfg.m_max < 1)
        throw std::invalid_argument("search: all bounds must be >= 1");
    if (!cfg.n_max.fits_ulong_p())
        throw std::invalid_argument("search: n_max too large");
    if (cfg.jobs < 1) throw std::invalid_argument("search: jobs must be >= 1");

    const auto start = std::chrono::steady_clock::now();
    const long lmin = cfg.allow_zero_exponents ? 0 : 1;
    const long mmin = cfg.allow_zero_exponents ? 0 : 1;

    // 2^L 3^M, rows by L, increasing in both directions
    std::vector<std::vector<Int>> table;
    for (long l = lmin; l <= cfg.l_max; ++l) {
        std::vector<Int> row;
        for (long m = mmin; m <= cfg.m_max; ++m)
            row.push_back(pow23(static_cast<unsigned long>(l), static_cast<unsigned long>(m)));
        table.push_back(std::move(row));
    }

    // contiguous Y ranges per worker; ordered merge keeps the output
    // lexicographic in (Y, N, L, M) regardless of the worker count
    const Int y_first = 2;
    std::vector<detail::SearchSlice> slices(cfg.jobs);
    if (cfg.y_max >= y_first) {
        const Int span = cfg.y_max - y_first + 1;
        const Int chunk = span / cfg.jobs + (span % cfg.jobs != 0 ? 1 : 0);
        std::vector<std::thread> workers;
        Int lo = y_first;
        for (unsigned j = 0; j < cfg.jobs && lo <= cfg.y_max; ++j) {
            Int hi = lo + chunk - 1;
            if (hi > cfg.y_max) hi = cfg.y_max;
            workers.emplace_back(detail::scan_y_range, std::cref(cfg), std::cref(table), lmin,
                                 mmin, lo, hi, &slices[j]);
            lo = hi + 1;
        }
        for (std::thread& th : workers) th.join();
    }

    SearchReport report;
    report.config = cfg;
    for (detail::SearchSlice& slice : slices) {
        report.candidates_tested += slice.candidates;
        for (CandidateTuple& sol : slice.solutions) report.solutions.push_back(std::move(sol));
    }
    if (cfg.variant) {
        for (const CandidateTuple& sol : report.solutions) {
            const CandidateTuple minimal = detail::minimal_exponent_form(sol);
            if (minimal.n != 3 && minimal.n != 4) report.catalog_conflicts.push_back(sol);
        }
    }
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    return report;
}

inline SearchReport search_main(SearchConfig cfg) {
    cfg.variant = false;
    return run_search(cfg);
}

inline SearchReport search_variant(SearchConfig cfg) {
    cfg.variant = true;
    return run_search(cfg);
}

// Same findings irrespective of bookkeeping: used to cross-validate the
// filtered sweep against the unfiltered one.
inline bool same_findings(const SearchReport& a, const SearchReport& b) {
    return a.solutions == b.solutions;
}

}  // namespace twothree
