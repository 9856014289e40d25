#pragma once

#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "twothree/bigint.hpp"
#include "twothree/ring.hpp"

namespace twothree {

// Candidate tuple (N, X, Y, L, M) for N X^2 + 2^L 3^M = Y^N.
struct CandidateTuple {
    Int n, x, y, l, m;

    void validate() const {
        if (n <= 1) throw std::invalid_argument("CandidateTuple: N must exceed 1");
        if (x < 1 || y < 1 || l < 1 || m < 1)
            throw std::invalid_argument("CandidateTuple: entries must be positive");
        if (gcd(n * x, y) != 1)
            throw std::invalid_argument("CandidateTuple: gcd(N X, Y) must be 1");
    }

    friend bool operator==(const CandidateTuple& a, const CandidateTuple& b) {
        return a.n == b.n && a.x == b.x && a.y == b.y && a.l == b.l && a.m == b.m;
    }
};

// Rewrites a candidate with exponent N = u v^2 (u square-free) as one with
// exponent u: (u, vX, Y^{v^2}, L, M).  Uses u (vx)^2 + 2^L 3^M = (y^{v^2})^u.
// u = 1 is rejected: the exponent would be a pure square, reducing the
// equation to X^2 + 2^L 3^M = Y^N whose solutions all have N = 3 or 4,
// incompatible with gcd(N, 6) = 1 forced by positive L and M.
inline CandidateTuple squarefree_reduce(const CandidateTuple& c) {
    c.validate();
    const SquarefreeSplit split = squarefree_split(c.n);
    if (split.u == 1)
        throw std::domain_error(
            "squarefree_reduce: N is a perfect square; the pure-power catalog (N = 3 or 4) "
            "rules this case out");
    if (split.v == 1) return c;
    if (!split.v.fits_ulong_p() || split.v > 1000)
        throw std::invalid_argument("squarefree_reduce: square part too large");
    const unsigned long v = split.v.get_ui();
    CandidateTuple reduced{split.u, split.v * c.x, pow_ui(c.y, v * v), c.l, c.m};
    reduced.validate();
    return reduced;
}

// Necessary residues for a solution with L, M >= 1:
// N, Y and X all congruent to +-1 mod 6.
inline bool mod6_filter(const CandidateTuple& c) {
    const unsigned long rn = mod_ui(c.n, 6), rx = mod_ui(c.x, 6), ry = mod_ui(c.y, 6);
    auto pm1 = [](unsigned long r) { return r == 1 || r == 5; };
    return pm1(rn) && pm1(rx) && pm1(ry);
}

// ---------------------------------------------------------------------------
// Binomial sum lemma: for odd t = 2 t1 + 1,
//   sum_j C(t, 2j+1) = 2^(t-1)   and   sum_j C(t, 2j+1) (-1)^j = +-2^t1.
// ---------------------------------------------------------------------------

struct SumsLemmaRow {
    unsigned t = 0;
    Int plain_sum;
    Int alternating_sum;
    int sign = 0;  // sign of the alternating sum
    bool ok = false;
};

struct SumsLemmaReport {
    std::vector<SumsLemmaRow> rows;
    bool ok = true;
};

inline SumsLemmaReport verify_sums_lemma(unsigned t_max) {
    if (t_max < 1 || t_max % 2 == 0)
        throw std::invalid_argument("verify_sums_lemma: t_max must be odd and positive");
    SumsLemmaReport report;
    for (unsigned t = 1; t <= t_max; t += 2) {
        const unsigned t1 = (t - 1) / 2;
        SumsLemmaRow row;
        row.t = t;
        for (unsigned j = 0; j <= t1; ++j) {
            const Int b = binomial(t, 2 * j + 1);
            row.plain_sum += b;
            row.alternating_sum += (j % 2 == 0) ? b : Int(-b);
        }
        row.sign = row.alternating_sum > 0 ? 1 : -1;
        row.ok = row.plain_sum == pow_ui(2, t - 1) &&
                 abs(row.alternating_sum) == pow_ui(2, t1);
        if (!row.ok) report.ok = false;
        report.rows.push_back(std::move(row));
    }
    return report;
}

// ---------------------------------------------------------------------------
// Expansion identities: each family equates coordinates extracted from an
// exact ring power with the corresponding binomial-sum formula.
// ---------------------------------------------------------------------------

enum class ExpansionKind {
    SurdPower,         // (X1 + Y1 sqrt(-n))^t: real and imaginary parts
    DoubledSurdPower,  // (2A + 2B sqrt(-wn))^t with integer 2A, 2B
    AlphaPower,        // (A + B sqrt(-wn))^t, half-integer A, B where integral
    GammaFifthPower,   // (A1 sqrt(w) + B1 sqrt(-n))^5: quintic coefficient forms
    GammaSquare,       // (A1 sqrt(w) + B1 sqrt(-n))^2 = (A1^2 w - B1^2 n) + 2 A1 B1 sqrt(-wn)
};

inline const char* expansion_kind_name(ExpansionKind kind) {
    switch (kind) {
        case ExpansionKind::SurdPower: return "surd-power";
        case ExpansionKind::DoubledSurdPower: return "doubled-surd-power";
        case ExpansionKind::AlphaPower: return "alpha-power";
        case ExpansionKind::GammaFifthPower: return "gamma-fifth-power";
        case ExpansionKind::GammaSquare: return "gamma-square";
    }
    return "?";
}

struct ExpansionCheck {
    bool ok = false;
    Rat lhs_re, rhs_re;  // coordinate from ring power vs binomial formula
    Rat lhs_im, rhs_im;
    std::string detail;
};

namespace detail {

inline Rat rat_pow(const Rat& base, unsigned long e) {
    Rat r(1);
    Rat b = base;
    while (e > 0) {
        if (e & 1UL) r *= b;
        e >>= 1UL;
        if (e > 0) b *= b;
    }
    r.canonicalize();
    return r;
}

// sum_j C(t,2j) A^(t-2j) (B^2 q)^j  and  B * sum_j C(t,2j+1) A^(t-2j-1) (B^2 q)^j
// -- the real part and the sqrt coefficient of (A + B sqrt(q))^t.
inline void binomial_parts(const Rat& a, const Rat& b, const Int& q, unsigned t, Rat* re,
                           Rat* im) {
    const Rat step = Rat(b) * b * q;
    *re = 0;
    *im = 0;
    for (unsigned j = 0; 2 * j <= t; ++j) {
        *re += Rat(binomial(t, 2 * j)) * rat_pow(a, t - 2 * j) * rat_pow(step, j);
        if (2 * j + 1 <= t)
            *im += Rat(binomial(t, 2 * j + 1)) * rat_pow(a, t - 2 * j - 1) * rat_pow(step, j);
    }
    *im *= b;
    re->canonicalize();
    im->canonicalize();
}

}  // namespace detail

// (X1 + Y1 sqrt(-n))^t: the rational coordinate must equal
// sum_j C(t,2j) X1^(t-2j) (-n Y1^2)^j and the sqrt(-n) coordinate
// Y1 sum_j C(t,2j+1) X1^(t-2j-1) (-n Y1^2)^j.
inline ExpansionCheck check_surd_power(const Int& x1, const Int& y1, const Int& n,
                                       unsigned t) {
    const RingElement base = RingElement::integers(1, n, x1, 0, y1, 0);
    const RingElement power = base.pow(t);
    ExpansionCheck check;
    check.lhs_re = power.coord(0);
    check.lhs_im = power.coord(2);
    detail::binomial_parts(Rat(x1), Rat(y1), Int(-n), t, &check.rhs_re, &check.rhs_im);
    check.ok = check.lhs_re == check.rhs_re && check.lhs_im == check.rhs_im;
    return check;
}

// (2A + 2B sqrt(-wn))^t with 2A, 2B integers, against the doubled binomial sums.
inline ExpansionCheck check_doubled_surd_power(const Int& two_a, const Int& two_b, long w,
                                               const Int& n, unsigned t) {
    const Int wn = Int(w) * n;
    const RingElement base = RingElement::integers(w, n, two_a, 0, 0, two_b);
    const RingElement power = base.pow(t);
    ExpansionCheck check;
    check.lhs_re = power.coord(0);
    check.lhs_im = power.coord(3);
    detail::binomial_parts(Rat(two_a), Rat(two_b), Int(-wn), t, &check.rhs_re, &check.rhs_im);
    check.ok = check.lhs_re == check.rhs_re && check.lhs_im == check.rhs_im;
    return check;
}

// (A + B sqrt(-wn))^t where A, B may be half-integers (the integral
// configurations only; elsewhere integers).
inline ExpansionCheck check_alpha_power(const Rat& a, const Rat& b, long w, const Int& n,
                                        unsigned t) {
    const Int wn = Int(w) * n;
    const RingElement base = RingElement::from_rationals(w, n, a, 0, 0, b);
    const RingElement power = base.pow(t);
    ExpansionCheck check;
    check.lhs_re = power.coord(0);
    check.lhs_im = power.coord(3);
    detail::binomial_parts(a, b, Int(-wn), t, &check.rhs_re, &check.rhs_im);
    check.ok = check.lhs_re == check.rhs_re && check.lhs_im == check.rhs_im;
    return check;
}

// gamma = A1 sqrt(w) + B1 sqrt(-n); gamma^5 must have sqrt(w) coefficient
// A1 (A1^4 w^2 - 10 A1^2 B1^2 w n + 5 B1^4 n^2) and sqrt(-n) coefficient
// B1 (5 A1^4 w^2 - 10 A1^2 B1^2 w n + B1^4 n^2), and nothing else.
inline ExpansionCheck check_gamma_fifth_power(const Rat& a1, const Rat& b1, long w,
                                              const Int& n) {
    const RingElement gamma = RingElement::from_rationals(w, n, 0, a1, b1, 0);
    const RingElement power = gamma.pow(5);
    ExpansionCheck check;
    check.lhs_re = power.coord(1);
    check.lhs_im = power.coord(2);
    const Rat a2 = Rat(a1) * a1, b2 = Rat(b1) * b1;
    const Rat a4 = a2 * a2, b4 = b2 * b2;
    const Rat w2(Int(w) * w), nw(Int(w) * n), n2(n * n);
    check.rhs_re = a1 * (a4 * w2 - 10 * a2 * b2 * nw + 5 * b4 * n2);
    check.rhs_im = b1 * (5 * a4 * w2 - 10 * a2 * b2 * nw + b4 * n2);
    check.rhs_re.canonicalize();
    check.rhs_im.canonicalize();
    check.ok = check.lhs_re == check.rhs_re && check.lhs_im == check.rhs_im &&
               power.coord(0) == 0 && power.coord(3) == 0;
    return check;
}

// gamma^2 = alpha: A = A1^2 w - B1^2 n and B = 2 A1 B1.
inline ExpansionCheck check_gamma_square(const Rat& a1, const Rat& b1, long w, const Int& n) {
    const RingElement gamma = RingElement::from_rationals(w, n, 0, a1, b1, 0);
    const RingElement alpha = gamma.pow(2);
    ExpansionCheck check;
    check.lhs_re = alpha.coord(0);
    check.lhs_im = alpha.coord(3);
    check.rhs_re = Rat(a1) * a1 * Int(w) - Rat(b1) * b1 * n;
    check.rhs_im = 2 * Rat(a1) * b1;
    check.rhs_re.canonicalize();
    check.rhs_im.canonicalize();
    check.ok = check.lhs_re == check.rhs_re && check.lhs_im == check.rhs_im &&
               alpha.coord(1) == 0 && alpha.coord(2) == 0;
    return check;
}

// ---------------------------------------------------------------------------
// Seeded sample batches over the admissible parameter ranges.
// ---------------------------------------------------------------------------

// splitmix64: tiny, fully specified, identical on every platform
class SampleRng {
public:
    explicit SampleRng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    long uniform(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    long pick(std::initializer_list<long> values) {
        const auto idx = next() % values.size();
        return *(values.begin() + idx);
    }

private:
    std::uint64_t state_;
};

inline constexpr std::uint64_t kDefaultSampleSeed = 0x7e57ab1e23ULL;

struct ExpansionBatchReport {
    ExpansionKind kind{};
    unsigned samples = 0;
    unsigned failures = 0;
    std::uint64_t seed = 0;
    bool ok = true;
    std::string first_failure;
};

namespace detail {

inline Int sample_squarefree(SampleRng& rng, long lo, long hi, long coprime_to = 1) {
    for (;;) {
        const long n = rng.uniform(lo, hi);
        if (coprime_to > 1 && std::gcd(n, coprime_to) != 1) continue;
        if (is_squarefree(Int(n))) return Int(n);
    }
}

// A1, B1 sampled as k/2 with matching parity when the half-integer
// configuration is integral (w = 3, n = 1 mod 4), plain integers otherwise.
inline void sample_half_pair(SampleRng& rng, long w, const Int& n, Rat* a, Rat* b) {
    const bool halves_ok = (w == 3 && mod_ui(n, 4) == 1);
    if (halves_ok && rng.uniform(0, 1) == 1) {
        long ka = rng.uniform(-39, 39) | 1L;  // odd numerators
        long kb = rng.uniform(-39, 39) | 1L;
        *a = make_rat(Int(ka), 2);
        *b = make_rat(Int(kb), 2);
    } else {
        *a = Rat(rng.uniform(-20, 20));
        *b = Rat(rng.uniform(-20, 20));
    }
}

}  // namespace detail

inline ExpansionBatchReport run_expansion_samples(ExpansionKind kind, unsigned samples,
                                                  std::uint64_t seed = kDefaultSampleSeed) {
    SampleRng rng(seed ^ (0x1000UL + static_cast<unsigned>(kind)));
    ExpansionBatchReport report;
    report.kind = kind;
    report.samples = samples;
    report.seed = seed;
    for (unsigned i = 0; i < samples; ++i) {
        ExpansionCheck check;
        switch (kind) {
            case ExpansionKind::SurdPower: {
                const Int n = detail::sample_squarefree(rng, 1, 20);
                check = check_surd_power(Int(rng.uniform(-20, 20)), Int(rng.uniform(-20, 20)),
                                         n, static_cast<unsigned>(2 * rng.uniform(0, 7) + 1));
                break;
            }
            case ExpansionKind::DoubledSurdPower: {
                const long w = rng.pick({2, 3, 6});
                const Int n = detail::sample_squarefree(rng, 1, 20, w);
                check = check_doubled_surd_power(Int(rng.uniform(-20, 20)),
                                                 Int(rng.uniform(-20, 20)), w, n,
                                                 static_cast<unsigned>(2 * rng.uniform(0, 7) + 1));
                break;
            }
            case ExpansionKind::AlphaPower: {
                const long w = rng.pick({2, 3, 6});
                const Int n = detail::sample_squarefree(rng, 1, 20, w);
                Rat a, b;
                detail::sample_half_pair(rng, w, n, &a, &b);
                check = check_alpha_power(a, b, w, n,
                                          static_cast<unsigned>(2 * rng.uniform(0, 7) + 1));
                break;
            }
            case ExpansionKind::GammaFifthPower: {
                const long w = rng.pick({2, 3, 6});
                const Int n = detail::sample_squarefree(rng, 1, 20, w);
                Rat a, b;
                detail::sample_half_pair(rng, w, n, &a, &b);
                check = check_gamma_fifth_power(a, b, w, n);
                break;
            }
            case ExpansionKind::GammaSquare: {
                const long w = rng.pick({2, 3, 6});
                const Int n = detail::sample_squarefree(rng, 1, 20, w);
                Rat a, b;
                detail::sample_half_pair(rng, w, n, &a, &b);
                check = check_gamma_square(a, b, w, n);
                break;
            }
        }
        if (!check.ok) {
            ++report.failures;
            report.ok = false;
            if (report.first_failure.empty())
                report.first_failure = "sample " + std::to_string(i);
        }
    }
    return report;
}

inline std::vector<ExpansionBatchReport> run_all_expansion_samples(
    unsigned samples, std::uint64_t seed = kDefaultSampleSeed) {
    std::vector<ExpansionBatchReport> reports;
    for (ExpansionKind kind :
         {ExpansionKind::SurdPower, ExpansionKind::DoubledSurdPower, ExpansionKind::AlphaPower,
          ExpansionKind::GammaFifthPower, ExpansionKind::GammaSquare}) {
        reports.push_back(run_expansion_samples(kind, samples, seed));
    }
    return reports;
}

// ---------------------------------------------------------------------------
// Residue suites, each over its full residue grid (no sampling).
// ---------------------------------------------------------------------------

struct ResidueSuiteReport {
    std::string name;
    unsigned long grid_size = 0;
    unsigned long violations = 0;
    bool ok = true;
    std::string notes;
};

// S = 2^(4l) 3^(4m) - 10 * 2^(2l) 3^(2m) n Y1^2 + 5 n^2 Y1^4 is 5 (mod 8)
// for every odd n, odd Y1, and l, m in {1,2,3}.
inline ResidueSuiteReport check_quintic_sum_mod8() {
    ResidueSuiteReport report;
    report.name = "quintic-sum mod 8";
    for (long n = 1; n < 8; n += 2)
        for (long y1 = 1; y1 < 8; y1 += 2)
            for (unsigned l = 1; l <= 3; ++l)
                for (unsigned m = 1; m <= 3; ++m) {
                    ++report.grid_size;
                    const Int s = pow23(4 * l, 4 * m) -
                                  10 * pow23(2 * l, 2 * m) * n * y1 * y1 +
                                  5 * Int(n) * n * pow_ui(Int(y1), 4);
                    if (mod_ui(s, 8) != 5) ++report.violations;
                }
    report.ok = report.violations == 0;
    report.notes = "S = 5 (mod 8) on the full grid";
    return report;
}

// Admissible residue combinations (n, 2A1, 2B1) mod 32 for the w = 3
// half-integer case: n = 1 (mod 8) and 2A1, 2B1 odd.  Requesting any other
// n-residue class yields an empty grid.
struct Mod32Cell {
    long n, two_a1, two_b1;
};

inline std::vector<Mod32Cell> mod32_grid(unsigned n_mod8 = 1) {
    std::vector<Mod32Cell> cells;
    for (long n = 1; n < 32; n += 8) {
        if (n % 8 != static_cast<long>(n_mod8)) continue;
        for (long a = 1; a < 32; a += 2)
            for (long b = 1; b < 32; b += 2) cells.push_back({n, a, b});
    }
    return cells;
}

// 4 ((2A1)^2 w)^2 + ((2A1)^2 w - (2B1)^2 n)^2 - 8 (2A1)^2 (2B1)^2 w n
// is 16 (mod 32), never 0, over the full admissible grid (w = 3).
inline ResidueSuiteReport check_quartic_sum_mod32() {
    ResidueSuiteReport report;
    report.name = "quartic-sum mod 32";
    const long w = 3;
    for (const Mod32Cell& cell : mod32_grid()) {
        ++report.grid_size;
        const Int a2 = Int(cell.two_a1) * cell.two_a1;
        const Int b2 = Int(cell.two_b1) * cell.two_b1;
        const Int expr =
            4 * (a2 * w) * (a2 * w) + (a2 * w - b2 * cell.n) * (a2 * w - b2 * cell.n) -
            8 * a2 * b2 * w * cell.n;
        if (mod_ui(expr, 32) != 16) ++report.violations;
    }
    report.ok = report.violations == 0;
    report.notes = "expression = 16 (mod 32), hence never 0 (mod 32)";
    return report;
}

// The quintic coefficient expression A1^4 w^2 - 10 A1^2 B1^2 w n + 5 B1^4 n^2
// can never be +-1: with 2 | A1 (any w) or with A1 odd and w even, it is
// always 5 (mod 8).
inline ResidueSuiteReport check_unit_obstruction_mod8() {
    ResidueSuiteReport report;
    report.name = "unit-obstruction mod 8";
    auto expr_mod8 = [](long a1, long b1, long w, long n) {
        const Int value = pow_ui(Int(a1), 4) * w * w - 10 * Int(a1) * a1 * b1 * b1 * w * n +
                          5 * pow_ui(Int(b1), 4) * n * n;
        return mod_ui(value, 8);
    };
    // even A1 sub-case
    for (long a1 = 0; a1 < 8; a1 += 2)
        for (long b1 = 1; b1 < 8; b1 += 2)
            for (long n = 1; n < 8; n += 2)
                for (long w : {2L, 3L, 6L}) {
                    ++report.grid_size;
                    if (expr_mod8(a1, b1, w, n) != 5) ++report.violations;
                }
    // odd A1 sub-case: the even prime must then sit in w, so w in {2, 6}
    for (long a1 = 1; a1 < 8; a1 += 2)
        for (long b1 = 1; b1 < 8; b1 += 2)
            for (long n = 1; n < 8; n += 2)
                for (long w : {2L, 6L}) {
                    ++report.grid_size;
                    if (expr_mod8(a1, b1, w, n) != 5) ++report.violations;
                }
    report.ok = report.violations == 0;
    report.notes = "expression = 5 (mod 8) on both sub-grids, never +-1";
    return report;
}

inline std::vector<ResidueSuiteReport> residue_checks() {
    return {check_quintic_sum_mod8(), check_quartic_sum_mod32(),
            check_unit_obstruction_mod8()};
}

}  // namespace twothree
