#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace twothree {

using Int = mpz_class;
using Rat = mpq_class;

inline Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline bool is_even(const Int& a) { return mpz_even_p(a.get_mpz_t()) != 0; }

// Nonnegative remainder of a mod m, also for negative a.
inline unsigned long mod_ui(const Int& a, unsigned long m) {
    return mpz_fdiv_ui(a.get_mpz_t(), m);
}

inline Int isqrt(const Int& n) {
    if (n < 0) throw std::invalid_argument("isqrt: negative argument");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const Int& n, Int* root = nullptr) {
    if (n < 0) return false;
    if (!mpz_perfect_square_p(n.get_mpz_t())) return false;
    if (root) mpz_sqrt(root->get_mpz_t(), n.get_mpz_t());
    return true;
}

inline Int pow_ui(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// 2^l * 3^m
inline Int pow23(unsigned long l, unsigned long m) {
    Int r = 1;
    mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), l);
    return r * pow_ui(3, m);
}

inline Rat make_rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Trial-division square-free decomposition n = u * v^2, u square-free.
// Meant for desk-scale inputs; refuses numbers too big to factor this way.
struct SquarefreeSplit {
    Int u;
    Int v;
};

inline SquarefreeSplit squarefree_split(const Int& n) {
    if (n <= 0) throw std::invalid_argument("squarefree_split: argument must be positive");
    static const Int kLimit("1000000000000000");
    if (n > kLimit)
        throw std::invalid_argument("squarefree_split: argument too large for trial division");
    unsigned long long m = n.get_ui();
    Int u = 1, v = 1;
    for (unsigned long long p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
        if (m % p != 0) continue;
        unsigned e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (e & 1) u *= Int(static_cast<unsigned long>(p));
        for (unsigned i = 0; i < e / 2; ++i) v *= Int(static_cast<unsigned long>(p));
    }
    if (m > 1) u *= Int(static_cast<unsigned long>(m));
    return {u, v};
}

inline bool is_squarefree(const Int& n) { return squarefree_split(n).v == 1; }

}  // namespace twothree
