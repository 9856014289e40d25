#pragma once

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "twothree/bigint.hpp"

namespace twothree {

// Primitive binary quadratic form a x^2 + b xy + c y^2 of negative
// discriminant b^2 - 4ac, in reduced shape: |b| <= a <= c with b >= 0
// whenever |b| = a or a = c.  Each class contains exactly one reduced form,
// so counting them is counting classes.
struct QuadForm {
    long long a = 0, b = 0, c = 0;

    long long disc() const { return b * b - 4 * a * c; }
    bool primitive() const { return std::gcd(std::gcd(a, b), c) == 1; }
    bool reduced() const {
        if (a <= 0) return false;
        long long ab = b < 0 ? -b : b;
        if (ab > a || a > c) return false;
        if ((ab == a || a == c) && b < 0) return false;
        return true;
    }
    friend bool operator==(const QuadForm& x, const QuadForm& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c;
    }
};

struct ClassNumberResult {
    Int disc;
    std::vector<QuadForm> forms;
    unsigned long h() const { return static_cast<unsigned long>(forms.size()); }
};

namespace detail {
// enumeration bound: a <= sqrt(|disc|/3); keep everything in 64-bit
inline long long disc_to_ll(const Int& disc) {
    static const Int kLimit("1000000000000");
    if (disc >= 0) throw std::invalid_argument("h_form: discriminant must be negative");
    if (-disc > kLimit)
        throw std::invalid_argument("h_form: |discriminant| too large for enumeration");
    return disc.get_si();
}
}  // namespace detail

// Class number of a negative discriminant (= 0 or 1 mod 4) by direct
// enumeration of reduced primitive forms.
inline ClassNumberResult h_form(const Int& disc) {
    const long long d = detail::disc_to_ll(disc);
    const unsigned long residue = mod_ui(disc, 4);
    if (residue != 0 && residue != 1)
        throw std::invalid_argument("h_form: discriminant must be 0 or 1 mod 4");

    ClassNumberResult result;
    result.disc = disc;
    for (long long a = 1; 3 * a * a <= -d; ++a) {  // reduced forms have a <= sqrt(|d|/3)
        for (long long b = -a; b <= a; ++b) {
            if (((b - d) & 1LL) != 0) continue;  // b and disc must share parity
            const long long num = b * b - d;
            if (num % (4 * a) != 0) continue;
            const long long c = num / (4 * a);
            QuadForm form{a, b, c};
            if (!form.reduced() || !form.primitive()) continue;
            result.forms.push_back(form);
        }
    }
    return result;
}

// Class number of the imaginary quadratic field Q(sqrt(m)), m < 0
// square-free: the fundamental discriminant is m when m = 1 (mod 4), else 4m.
inline ClassNumberResult field_class_number(const Int& m) {
    if (m >= 0) throw std::invalid_argument("field_class_number: m must be negative");
    if (!is_squarefree(-m))
        throw std::invalid_argument("field_class_number: m must be square-free");
    const Int disc = (mod_ui(m, 4) == 1) ? m : Int(4 * m);
    return h_form(disc);
}

// Floating-point comparisons downstream carry this guard band.
inline constexpr double kFloatGuard = 1e-9;

// (2 sqrt|d| / pi) (1 + ln sqrt|d|): analytic upper bound for the class
// number of discriminant d.
inline double class_number_bound(const Int& d) {
    if (abs(d) < 3) throw std::invalid_argument("class_number_bound: |d| must be >= 3");
    const double s = std::sqrt(std::fabs(d.get_d()));
    return 2.0 * s / M_PI * (1.0 + std::log(s));
}

// g(n) = (sqrt(24) / (pi sqrt n)) (1 + ln sqrt(24 n)): the threshold
// function whose crossing of 1 between n = 50 and n = 51 caps the field
// degree argument.  Strictly decreasing in n.
inline double g_threshold(const Int& n) {
    if (n < 1) throw std::invalid_argument("g_threshold: n must be >= 1");
    const double x = n.get_d();
    return std::sqrt(24.0) / (M_PI * std::sqrt(x)) * (1.0 + std::log(std::sqrt(24.0 * x)));
}

struct ClassFactsLimits {
    long n_limit = 5000;        // h(-4n) < n for square-free n coprime to 6, 1 < n <= n_limit
    long wn_limit = 300;        // h_F <= h_cap for all Q(sqrt(-wn)) with wn <= wn_limit
    long h_cap = 22;
    long wn_limit_small = 66;   // h_F <= h_cap_small for wn <= wn_limit_small
    long h_cap_small = 8;
    long g_samples = 1000;      // strict decrease of g on 1..g_samples
    long bound_disc_limit = 300;  // class_number_bound(d) >= h(d), fundamental |d| <= limit
};

struct ClassFactsViolation {
    std::string check;
    Int value;
    std::string detail;
};

struct ClassFactsReport {
    ClassFactsLimits limits;
    long wang_wang_checked = 0;   // (i)  h(-4n) < n instances
    long field_bound_checked = 0; // (ii) + (iii) fields
    long g_checked = 0;           // (iv) monotonicity samples
    long bound_checked = 0;       // (iv) fundamental discriminants
    std::vector<ClassFactsViolation> violations;
    bool ok = true;
};

inline bool is_fundamental_discriminant(long d) {
    if (d >= 0) return false;
    const long r = ((d % 4) + 4) % 4;
    if (r == 1) return is_squarefree(Int(-d));
    if (r == 0) {
        const long m = d / 4;
        const long rm = ((m % 4) + 4) % 4;
        return (rm == 2 || rm == 3) && is_squarefree(Int(-m));
    }
    return false;
}

// Scans the class-number facts the proof consumes:
//   (i)   h(-4n) < n for square-free n coprime to 6, 1 < n <= n_limit;
//   (ii)  h_F <= 22 for Q(sqrt(-wn)), w in {2,3,6}, n square-free coprime
//         to 6, wn <= 300 (and h_F <= 8 for wn <= 66);
//   (iii) g strictly decreasing on integer samples and the analytic bound
//         dominating the enumerated class number on fundamental discriminants.
inline ClassFactsReport verify_class_facts(const ClassFactsLimits& limits = {}) {
    ClassFactsReport report;
    report.limits = limits;
    auto violate = [&](const char* check, Int value, std::string detail) {
        report.violations.push_back({check, std::move(value), std::move(detail)});
        report.ok = false;
    };

    for (long n = 2; n <= limits.n_limit; ++n) {
        if (std::gcd(n, 6L) != 1 || !is_squarefree(Int(n))) continue;
        ++report.wang_wang_checked;
        const unsigned long hn = h_form(Int(-4 * n)).h();
        if (!(static_cast<long>(hn) < n))
            violate("h(-4n) < n", Int(n), "h = " + std::to_string(hn));
    }

    for (long w : {2L, 3L, 6L}) {
        for (long n = 1; w * n <= limits.wn_limit; ++n) {
            if (std::gcd(n, 6L) != 1 || !is_squarefree(Int(n))) continue;
            ++report.field_bound_checked;
            const long wn = w * n;
            const unsigned long hf = field_class_number(Int(-wn)).h();
            if (static_cast<long>(hf) > limits.h_cap)
                violate("h_F cap", Int(wn), "h_F = " + std::to_string(hf));
            if (wn <= limits.wn_limit_small && static_cast<long>(hf) > limits.h_cap_small)
                violate("h_F small cap", Int(wn), "h_F = " + std::to_string(hf));
        }
    }

    double prev = g_threshold(1);
    ++report.g_checked;
    for (long n = 2; n <= limits.g_samples; ++n) {
        const double cur = g_threshold(Int(n));
        ++report.g_checked;
        if (!(cur < prev - kFloatGuard))
            violate("g decreasing", Int(n), "g did not strictly decrease");
        prev = cur;
    }

    for (long d = -3; d >= -limits.bound_disc_limit; --d) {
        if (!is_fundamental_discriminant(d)) continue;
        ++report.bound_checked;
        const unsigned long hd = h_form(Int(d)).h();
        const double bound = class_number_bound(Int(d));
        if (!(bound + kFloatGuard >= static_cast<double>(hd)))
            violate("analytic bound", Int(d),
                    "bound " + std::to_string(bound) + " < h = " + std::to_string(hd));
    }

    return report;
}

}  // namespace twothree
