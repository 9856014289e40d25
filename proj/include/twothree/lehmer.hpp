#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "twothree/bigint.hpp"
#include "twothree/ring.hpp"

namespace twothree {

// Lehmer pair (gamma, delta) in the canonical integer parameterization
//   R = (gamma + delta)^2,   Q = gamma * delta,
// so gamma, delta = (sqrt(R) +- sqrt(R - 4Q))/2.  Validity requires R, Q
// nonzero, gcd(R, Q) = 1, R != 4Q, and gamma/delta not a root of unity.
// The ratio lives in a field of degree <= 4, where the possible orders of
// roots of unity are {1,2,3,4,5,6,8,10,12}; gamma^s = delta^s for some such
// order is equivalent to a zero among the first twelve sequence values, so
// that is the test.
class LehmerPair {
public:
    LehmerPair(Int R, Int Q) : r_(std::move(R)), q_(std::move(Q)) {
        std::string reason;
        if (!valid(r_, q_, &reason)) throw std::invalid_argument("LehmerPair: " + reason);
    }

    static bool valid(const Int& R, const Int& Q, std::string* reason = nullptr) {
        auto fail = [&](const char* why) {
            if (reason) *reason = why;
            return false;
        };
        if (R == 0) return fail("R must be nonzero");
        if (Q == 0) return fail("Q must be nonzero");
        if (gcd(R, Q) != 1) return fail("R and Q must be coprime");
        if (R == 4 * Q) return fail("R = 4Q makes gamma = delta");
        // u_1..u_12 nonzero <=> gamma/delta is not a root of unity
        Int prev = 0, cur = 1;
        for (unsigned s = 2; s <= 12; ++s) {
            Int next = (s % 2 == 0) ? Int(cur - Q * prev) : Int(R * cur - Q * prev);
            prev = cur;
            cur = next;
            if (cur == 0) return fail("gamma/delta is a root of unity");
        }
        if (reason) reason->clear();
        return true;
    }

    const Int& r() const { return r_; }
    const Int& q() const { return q_; }

    // gamma, delta as elements of the formal ring over sqrt(R), sqrt(R-4Q)
    RingElement gamma() const {
        return RingElement::formal_halves(r_, r_ - 4 * q_, 0, 1, 1, 0);
    }
    RingElement delta() const {
        return RingElement::formal_halves(r_, r_ - 4 * q_, 0, 1, -1, 0);
    }

private:
    Int r_, q_;
};

// L_s = (gamma^s - delta^s)/(gamma - delta) for odd s and
//       (gamma^s - delta^s)/(gamma^2 - delta^2) for even s.
// Both tracks collapse to one integer recurrence:
//   a_0 = 0, a_1 = 1,
//   a_s = a_{s-1} - Q a_{s-2}     (s even)
//   a_s = R a_{s-1} - Q a_{s-2}   (s odd)
// The sign convention follows the recurrence with a_1 = 1.
inline std::vector<Int> lehmer_numbers(const LehmerPair& pair, unsigned s_max) {
    std::vector<Int> a;
    a.reserve(s_max + 1);
    a.emplace_back(0);
    if (s_max >= 1) a.emplace_back(1);
    for (unsigned s = 2; s <= s_max; ++s) {
        if (s % 2 == 0)
            a.push_back(a[s - 1] - pair.q() * a[s - 2]);
        else
            a.push_back(pair.r() * a[s - 1] - pair.q() * a[s - 2]);
    }
    return a;
}

inline Int lehmer_number(const LehmerPair& pair, unsigned s) {
    if (s < 1) throw std::invalid_argument("lehmer_number: s must be positive");
    return lehmer_numbers(pair, s)[s];
}

// Companion value (gamma^s + delta^s)/(gamma + delta) for odd s and
// gamma^s + delta^s for even s; satisfies L_{2s} = L_s * companion_s for odd s.
// Integer recurrence: b_0 = 2, b_1 = 1,
//   b_s = R b_{s-1} - Q b_{s-2}   (s even)
//   b_s = b_{s-1} - Q b_{s-2}     (s odd)
inline std::vector<Int> companion_numbers(const LehmerPair& pair, unsigned s_max) {
    std::vector<Int> b;
    b.reserve(s_max + 1);
    b.emplace_back(2);
    if (s_max >= 1) b.emplace_back(1);
    for (unsigned s = 2; s <= s_max; ++s) {
        if (s % 2 == 0)
            b.push_back(pair.r() * b[s - 1] - pair.q() * b[s - 2]);
        else
            b.push_back(b[s - 1] - pair.q() * b[s - 2]);
    }
    return b;
}

inline Int companion_number(const LehmerPair& pair, unsigned s) {
    if (s < 1) throw std::invalid_argument("companion_number: s must be positive");
    return companion_numbers(pair, s)[s];
}

struct DefectReport {
    unsigned s = 0;
    Int l_value;     // signed L_s
    Int stripped;    // |L_s| after removing all prime content shared with the defect product
    bool defective = false;
    std::string notes;
};

// (gamma, delta) is s-defective when every prime of L_s already divides
// (gamma^2 - delta^2)^2 L_1 ... L_{s-1}, with (gamma^2-delta^2)^2 = R(R-4Q).
// Decided by iterated gcd-stripping: no factorization is performed, only
// whether any prime content of |L_s| escapes the product.
inline DefectReport is_defective(const LehmerPair& pair, unsigned s) {
    if (s < 2) throw std::invalid_argument("is_defective: s must be at least 2");
    const std::vector<Int> a = lehmer_numbers(pair, s);
    Int product = abs(pair.r() * (pair.r() - 4 * pair.q()));
    for (unsigned i = 1; i < s; ++i) product *= abs(a[i]);

    DefectReport report;
    report.s = s;
    report.l_value = a[s];
    Int v = abs(a[s]);
    while (v > 1) {
        Int g = gcd(v, product);
        if (g == 1) break;
        v /= g;
    }
    report.stripped = v;
    report.defective = (v == 1);
    if (abs(report.l_value) == 1)
        report.notes = "|L_s| = 1, defective vacuously";
    else if (report.defective)
        report.notes = "all prime content divides the defect product";
    else
        report.notes = "stripped remainder " + report.stripped.get_str() +
                       " is coprime to the defect product";
    return report;
}

// Registry of the known s-defective pairs for 6 < s <= 30 (up to the i^k
// twist), keyed by the canonical (R, Q).  gamma = (sqrt(A) + sqrt(-B))/2
// gives R = A, Q = (A+B)/4.
struct TableEntry {
    unsigned s;
    long r;
    long q;
    const char* label;
};

inline const std::array<TableEntry, 26>& defective_pair_registry() {
    static const std::array<TableEntry, 26> table = {{
        {7, 1, 2, "(1 +- sqrt(-7))/2"},
        {7, 1, 5, "(1 +- sqrt(-19))/2"},
        {7, 3, 2, "(sqrt(3) +- sqrt(-5))/2"},
        {7, 5, 3, "(sqrt(5) +- sqrt(-7))/2"},
        {7, 13, 4, "(sqrt(13) +- sqrt(-3))/2"},
        {7, 14, 9, "(sqrt(14) +- sqrt(-22))/2"},
        {9, 5, 2, "(sqrt(5) +- sqrt(-3))/2"},
        {9, 7, 2, "(sqrt(7) +- sqrt(-1))/2"},
        {9, 7, 3, "(sqrt(7) +- sqrt(-5))/2"},
        {13, 1, 2, "(1 +- sqrt(-7))/2"},
        {14, 3, 4, "(sqrt(3) +- sqrt(-13))/2"},
        {14, 5, 2, "(sqrt(5) +- sqrt(-3))/2"},
        {14, 7, 2, "(sqrt(7) +- sqrt(-1))/2"},
        {14, 7, 3, "(sqrt(7) +- sqrt(-5))/2"},
        {14, 19, 5, "(sqrt(19) +- sqrt(-1))/2"},
        {14, 22, 9, "(sqrt(22) +- sqrt(-14))/2"},
        {15, 7, 2, "(sqrt(7) +- sqrt(-1))/2"},
        {15, 10, 3, "(sqrt(10) +- sqrt(-2))/2"},
        {18, 1, 2, "(1 +- sqrt(-7))/2"},
        {18, 3, 2, "(sqrt(3) +- sqrt(-5))/2"},
        {18, 5, 3, "(sqrt(5) +- sqrt(-7))/2"},
        {24, 3, 2, "(sqrt(3) +- sqrt(-5))/2"},
        {24, 5, 2, "(sqrt(5) +- sqrt(-3))/2"},
        {26, 7, 2, "(sqrt(7) +- sqrt(-1))/2"},
        {30, 1, 2, "(1 +- sqrt(-7))/2"},
        {30, 2, 3, "(sqrt(2) +- sqrt(-10))/2"},
    }};
    return table;
}

struct RegistryCheck {
    TableEntry entry{};
    bool pair_valid = false;
    DefectReport defect;
    bool twist_invariant = false;  // |L_s|, s <= 30, unchanged under (R,Q) -> (-R,-Q)
    bool ok() const { return pair_valid && defect.defective && twist_invariant; }
};

struct RegistryReport {
    std::vector<RegistryCheck> checks;
    bool all_ok = true;
};

// Checks every registry entry: a valid Lehmer pair, s-defective for its
// stated s, and |L_s| invariant under the i^k twist for all s <= 30.
inline RegistryReport verify_table1() {
    RegistryReport report;
    for (const TableEntry& entry : defective_pair_registry()) {
        RegistryCheck check;
        check.entry = entry;
        check.pair_valid = LehmerPair::valid(entry.r, entry.q);
        if (check.pair_valid) {
            const LehmerPair pair{Int(entry.r), Int(entry.q)};
            check.defect = is_defective(pair, entry.s);
            check.twist_invariant = LehmerPair::valid(-entry.r, -entry.q);
            if (check.twist_invariant) {
                const LehmerPair twisted{Int(-entry.r), Int(-entry.q)};
                const std::vector<Int> a = lehmer_numbers(pair, 30);
                const std::vector<Int> b = lehmer_numbers(twisted, 30);
                for (unsigned s = 1; s <= 30; ++s) {
                    if (abs(a[s]) != abs(b[s])) {
                        check.twist_invariant = false;
                        break;
                    }
                }
            }
        }
        if (!check.ok()) report.all_ok = false;
        report.checks.push_back(std::move(check));
    }
    return report;
}

}  // namespace twothree
