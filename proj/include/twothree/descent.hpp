#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "twothree/bigint.hpp"
#include "twothree/classforms.hpp"
#include "twothree/ring.hpp"

namespace twothree {

// Representation X^2 + d Y^2 = k^Z with d > 1 square-free, k > 1 odd,
// gcd(d, k) = 1, gcd(X, Y) = 1, Z > 0.  X and Y are kept positive; other
// sign choices are out of contract here.
struct DescentInstance {
    Int d, k, x, y, z;

    void validate() const {
        if (d <= 1) throw std::invalid_argument("descent: d must exceed 1");
        if (!is_squarefree(d)) throw std::invalid_argument("descent: d must be square-free");
        if (k <= 1 || is_even(k)) throw std::invalid_argument("descent: k must be odd and > 1");
        if (gcd(d, k) != 1) throw std::invalid_argument("descent: d and k must be coprime");
        if (x < 1 || y < 1) throw std::invalid_argument("descent: X and Y must be positive");
        if (gcd(x, y) != 1) throw std::invalid_argument("descent: X and Y must be coprime");
        if (z < 1) throw std::invalid_argument("descent: Z must be positive");
        if (!z.fits_ulong_p()) throw std::invalid_argument("descent: Z too large");
        if (x * x + d * y * y != pow_ui(k, z.get_ui()))
            throw std::invalid_argument("descent: X^2 + d Y^2 != k^Z");
    }
};

// Witness (X1, Y1, Z1, t, l1, l2) with
//   X1^2 + d Y1^2 = k^Z1,  gcd(X1, Y1) = 1,  Z = Z1 t,  Z1 | h(-4d),
//   X + Y sqrt(-d) = l1 (X1 + l2 Y1 sqrt(-d))^t.
struct DescentWitness {
    Int x1, y1, z1, t;
    int l1 = 1, l2 = 1;
};

// Raised when no witness exists for a valid instance, i.e. the descent
// lemma would be falsified; callers must treat it as a hard failure.
class NoWitnessError : public std::runtime_error {
public:
    explicit NoWitnessError(const std::string& what) : std::runtime_error(what) {}
};

// Exact re-verification of every witness invariant.
inline bool witness_holds(const DescentInstance& inst, const DescentWitness& wit) {
    if (wit.x1 < 1 || wit.y1 < 1 || wit.z1 < 1 || wit.t < 1) return false;
    if (std::abs(wit.l1) != 1 || std::abs(wit.l2) != 1) return false;
    if (!wit.z1.fits_ulong_p() || !wit.t.fits_ulong_p()) return false;
    if (wit.x1 * wit.x1 + inst.d * wit.y1 * wit.y1 != pow_ui(inst.k, wit.z1.get_ui()))
        return false;
    if (gcd(wit.x1, wit.y1) != 1) return false;
    if (wit.z1 * wit.t != inst.z) return false;
    const Int hd(h_form(Int(-4 * inst.d)).h());
    if (hd % wit.z1 != 0) return false;  // Z1 | h(-4d)
    const QuadSurd base(Int(-inst.d), wit.x1, wit.l2 * wit.y1, 1);
    QuadSurd value = base.pow(wit.t.get_ui());
    if (wit.l1 == -1) value = -value;
    return value == QuadSurd(Int(-inst.d), inst.x, inst.y, 1);
}

// Constructive search for the witness: Z1 runs over the common divisors of
// Z and h(-4d) in increasing order, X1 over [0, k^(Z1/2)], Y1 solved from
// d Y1^2 = k^Z1 - X1^2 by an exact square test, then the four sign choices
// are tried by exact expansion.  Returns the first witness in lexicographic
// (Z1, X1, l1, l2) order; deterministic by construction.
inline DescentWitness descend(const DescentInstance& inst) {
    inst.validate();
    const unsigned long hd = h_form(Int(-4 * inst.d)).h();
    const unsigned long z = inst.z.get_ui();
    const QuadSurd target(Int(-inst.d), inst.x, inst.y, 1);

    for (unsigned long z1 = 1; z1 <= z; ++z1) {
        if (z % z1 != 0 || hd % z1 != 0) continue;
        const Int kz1 = pow_ui(inst.k, z1);
        const unsigned long t = z / z1;
        for (Int x1 = 0; x1 * x1 <= kz1; ++x1) {
            const Int rem = kz1 - x1 * x1;
            if (rem <= 0) continue;
            if (!mpz_divisible_p(rem.get_mpz_t(), inst.d.get_mpz_t())) continue;
            const Int quot = rem / inst.d;
            Int y1;
            if (!is_perfect_square(quot, &y1) || y1 < 1) continue;
            if (gcd(x1, y1) != 1) continue;
            for (int l1 : {-1, 1}) {
                for (int l2 : {-1, 1}) {
                    const QuadSurd base(Int(-inst.d), x1, Int(l2) * y1, 1);
                    QuadSurd value = base.pow(t);
                    if (l1 == -1) value = -value;
                    if (value == target)
                        return DescentWitness{x1, y1, Int(z1), Int(t), l1, l2};
                }
            }
        }
    }
    throw NoWitnessError("descend: no witness for X=" + inst.x.get_str() +
                         " Y=" + inst.y.get_str() + " Z=" + inst.z.get_str() +
                         " (d=" + inst.d.get_str() + ", k=" + inst.k.get_str() + ")");
}

}  // namespace twothree
