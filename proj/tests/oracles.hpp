#pragma once

// Test-only oracles, kept independent of the library code paths they check:
//  - prime factorization by trial division + Baillie-PSW + Brent's rho,
//    backing the factorization route for defectiveness;
//  - Lehmer/companion numbers computed by literal ring powering of
//    gamma = (sqrt(R)+sqrt(R-4Q))/2 instead of the integer recurrence;
//  - plain quadruple-loop brute-force searches;
//  - an independent count of admissible search cells.

#include <algorithm>
#include <set>
#include <vector>

#include "twothree/bigint.hpp"
#include "twothree/descent.hpp"
#include "twothree/identities.hpp"
#include "twothree/lehmer.hpp"
#include "twothree/ring.hpp"
#include "twothree/search.hpp"

namespace oracle {

using twothree::CandidateTuple;
using twothree::Int;
using twothree::Rat;
using twothree::RingElement;

// ---------------------------------------------------------------------------
// factorization
// ---------------------------------------------------------------------------

inline const std::vector<unsigned long>& small_primes() {
    static const std::vector<unsigned long> primes = [] {
        std::vector<unsigned long> out;
        std::vector<bool> sieve(10001, true);
        for (unsigned long p = 2; p <= 10000; ++p) {
            if (!sieve[p]) continue;
            out.push_back(p);
            for (unsigned long q = p * p; q <= 10000; q += p) sieve[q] = false;
        }
        return out;
    }();
    return primes;
}

inline Int brent_rho(const Int& n, unsigned long c) {
    Int y = 2, r = 1, q = 1, g = 1, x = 0, ys = 0;
    const long m = 128;
    while (g == 1) {
        x = y;
        for (Int i = 0; i < r; ++i) y = (y * y + c) % n;
        Int k = 0;
        while (k < r && g == 1) {
            ys = y;
            Int lim = r - k;
            if (lim > m) lim = m;
            for (Int j = 0; j < lim; ++j) {
                y = (y * y + c) % n;
                q = q * abs(x - y) % n;
            }
            g = twothree::gcd(q, n);
            k += m;
        }
        r *= 2;
    }
    if (g == n) {
        do {
            ys = (ys * ys + c) % n;
            g = twothree::gcd(abs(x - ys), n);
        } while (g == 1);
    }
    return g;
}

inline void split_into(const Int& n, std::set<Int>* primes) {
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 40) != 0) {
        primes->insert(n);
        return;
    }
    Int d = n;
    for (unsigned long c = 1; d == n || d == 1; ++c) d = brent_rho(n, c);
    split_into(d, primes);
    split_into(Int(n / d), primes);
}

// distinct primes of |value|
inline std::vector<Int> prime_factors(const Int& value) {
    Int n = abs(value);
    std::set<Int> primes;
    if (n <= 1) return {};
    for (unsigned long p : small_primes()) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            primes.insert(Int(p));
            while (mpz_divisible_ui_p(n.get_mpz_t(), p)) n /= p;
        }
        if (n == 1) break;
    }
    if (n > 1) split_into(n, &primes);
    return {primes.begin(), primes.end()};
}

// Factorization route for defectiveness: factor |L_s| completely and test
// each prime against the defect product.
inline bool defective_by_factorization(const twothree::LehmerPair& pair, unsigned s) {
    const std::vector<Int> a = twothree::lehmer_numbers(pair, s);
    Int product = abs(pair.r() * (pair.r() - 4 * pair.q()));
    for (unsigned i = 1; i < s; ++i) product *= abs(a[i]);
    const Int v = abs(a[s]);
    if (v == 1) return true;
    for (const Int& p : prime_factors(v))
        if (!mpz_divisible_p(product.get_mpz_t(), p.get_mpz_t())) return false;
    return true;
}

// ---------------------------------------------------------------------------
// ring-powering route for Lehmer numbers
// ---------------------------------------------------------------------------

// Solve lhs = x * rhs for rational x by coordinate proportionality; the
// cross-product check makes the quotient exact, not approximate.
inline bool exact_ratio(const RingElement& lhs, const RingElement& rhs, Rat* out) {
    int pivot = -1;
    for (int i = 0; i < 4; ++i)
        if (rhs.half_units(i) != 0) {
            pivot = i;
            break;
        }
    if (pivot < 0) return false;
    for (int j = 0; j < 4; ++j)
        if (lhs.half_units(j) * rhs.half_units(pivot) !=
            rhs.half_units(j) * lhs.half_units(pivot))
            return false;
    *out = twothree::make_rat(lhs.half_units(pivot), 1) /
           twothree::make_rat(rhs.half_units(pivot), 1);
    out->canonicalize();
    return true;
}

// (gamma^s - delta^s)/(gamma - delta) for odd s, divided instead by
// gamma^2 - delta^2 for even s, evaluated by literal powering.
inline bool ring_lehmer_number(const twothree::LehmerPair& pair, unsigned s, Int* out) {
    const RingElement g = pair.gamma(), d = pair.delta();
    const RingElement diff = g.pow(s) - d.pow(s);
    const RingElement denom = (s % 2 == 1) ? g - d : (g * g) - (d * d);
    Rat ratio;
    if (!exact_ratio(diff, denom, &ratio)) return false;
    if (ratio.get_den() != 1) return false;
    *out = ratio.get_num();
    return true;
}

// (gamma^s + delta^s)/(gamma + delta) for odd s, gamma^s + delta^s for even s.
inline bool ring_companion_number(const twothree::LehmerPair& pair, unsigned s, Int* out) {
    const RingElement g = pair.gamma(), d = pair.delta();
    const RingElement sum = g.pow(s) + d.pow(s);
    if (s % 2 == 0) {
        if (!sum.is_rational()) return false;
        const Rat value = sum.rational_value();
        if (value.get_den() != 1) return false;
        *out = value.get_num();
        return true;
    }
    Rat ratio;
    if (!exact_ratio(sum, g + d, &ratio)) return false;
    if (ratio.get_den() != 1) return false;
    *out = ratio.get_num();
    return true;
}

// ---------------------------------------------------------------------------
// brute-force searches
// ---------------------------------------------------------------------------

inline std::vector<CandidateTuple> brute_force_search(unsigned long n_max, unsigned long y_max,
                                                      unsigned long l_max, unsigned long m_max,
                                                      bool variant) {
    std::vector<CandidateTuple> solutions;
    for (unsigned long y = 2; y <= y_max; ++y)
        for (unsigned long n = variant ? 3 : 2; n <= n_max; ++n) {
            const Int yn = twothree::pow_ui(Int(y), n);
            for (unsigned long l = 1; l <= l_max; ++l)
                for (unsigned long m = 1; m <= m_max; ++m) {
                    const Int pw = twothree::pow_ui(2, l) * twothree::pow_ui(3, m);
                    if (pw >= yn) continue;
                    Int square = yn - pw;
                    if (!variant) {
                        if (!mpz_divisible_ui_p(square.get_mpz_t(), n)) continue;
                        square /= n;
                    }
                    Int x;
                    if (!twothree::is_perfect_square(square, &x) || x < 1) continue;
                    if (twothree::gcd(variant ? x : Int(Int(n) * x), Int(y)) != 1) continue;
                    solutions.push_back({Int(n), x, Int(y), Int(l), Int(m)});
                }
        }
    std::sort(solutions.begin(), solutions.end(),
              [](const CandidateTuple& a, const CandidateTuple& b) {
                  if (a.y != b.y) return a.y < b.y;
                  if (a.n != b.n) return a.n < b.n;
                  if (a.l != b.l) return a.l < b.l;
                  return a.m < b.m;
              });
    return solutions;
}

// all valid descent instances with the given bounds
inline std::vector<twothree::DescentInstance> enumerate_descent_instances(long d_max,
                                                                          long k_max,
                                                                          long z_max) {
    std::vector<twothree::DescentInstance> instances;
    for (long d = 2; d <= d_max; ++d) {
        if (!twothree::is_squarefree(Int(d))) continue;
        for (long k = 3; k <= k_max; k += 2) {
            if (std::gcd(d, k) != 1) continue;
            for (long z = 1; z <= z_max; ++z) {
                const Int kz = twothree::pow_ui(Int(k), static_cast<unsigned long>(z));
                for (Int y = 1; d * y * y < kz; ++y) {
                    const Int x2 = kz - d * y * y;
                    Int x;
                    if (!twothree::is_perfect_square(x2, &x) || x < 1) continue;
                    if (twothree::gcd(x, y) != 1) continue;
                    instances.push_back({Int(d), Int(k), x, y, Int(z)});
                }
            }
        }
    }
    return instances;
}

// Independent accounting of admissible (Y, N, L, M) cells: flat sorted list
// of 2^L 3^M values, binary search per (Y, N) row.
inline unsigned long long count_admissible_cells(const twothree::SearchConfig& cfg) {
    std::vector<Int> values;
    const long lmin = cfg.allow_zero_exponents ? 0 : 1;
    for (long l = lmin; l <= cfg.l_max; ++l)
        for (long m = lmin; m <= cfg.m_max; ++m)
            values.push_back(twothree::pow23(static_cast<unsigned long>(l),
                                             static_cast<unsigned long>(m)));
    std::sort(values.begin(), values.end());
    unsigned long long count = 0;
    const unsigned long n_lo = cfg.variant ? 3 : 2;
    for (Int y = 2; y <= cfg.y_max; ++y) {
        if (cfg.filtered && twothree::mod_ui(y, 6) != 1 && twothree::mod_ui(y, 6) != 5)
            continue;
        for (unsigned long n = n_lo; n <= cfg.n_max.get_ui(); ++n) {
            if (cfg.filtered && !cfg.variant && n % 6 != 1 && n % 6 != 5) continue;
            const Int yn = twothree::pow_ui(y, n);
            count += static_cast<unsigned long long>(
                std::lower_bound(values.begin(), values.end(), yn) - values.begin());
        }
    }
    return count;
}

}  // namespace oracle
