#pragma once

#include <array>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "twothree/bigint.hpp"

namespace twothree {

// Exact element of Q(sqrt(r1), sqrt(r2)) with coordinates over the basis
// {1, sqrt(r1), sqrt(r2), sqrt(r1*r2)}.  Every coordinate is a rational with
// denominator 1 or 2, stored as its double (h[i] = 2 * coordinate), since
// all elements arising here live in orders where half-coordinates suffice.
//
// The standard configuration is r1 = w in {1,2,3,6} and r2 = -n with n a
// positive square-free integer coprime to w; integrality is decided there by
// the explicit integral bases (Z[(1+sqrt(-n))/2] when -n = 1 mod 4, and
// Z[sqrt(3), (sqrt(3)+sqrt(-n))/2] when w = 3 and n = 1 mod 4).
//
// Arbitrary nonzero radicands are accepted through the formal constructor:
// multiplication uses the same table, so the result is a commutative ring
// even when the radicands share factors or are perfect squares.  This is
// what lets sequence recurrences be cross-checked against literal powering
// of gamma = (sqrt(R) + sqrt(R-4Q))/2 for any integer parameters.
//
// A product whose exact value needs denominator 4 cannot be represented and
// throws; products of integral elements never do.
class RingElement {
public:
    enum class Radical { SqrtW, SqrtMinusN };

    // value = c0 + c1*sqrt(w) + c2*sqrt(-n) + c3*sqrt(-w*n)
    static RingElement integers(long w, const Int& n, Int c0, Int c1, Int c2, Int c3) {
        return halves(w, n, std::move(c0) * 2, std::move(c1) * 2, std::move(c2) * 2,
                      std::move(c3) * 2);
    }

    // value = (h0 + h1*sqrt(w) + h2*sqrt(-n) + h3*sqrt(-w*n)) / 2
    static RingElement halves(long w, const Int& n, Int h0, Int h1, Int h2, Int h3) {
        check_standard_field(w, n);
        return RingElement(Int(w), -n,
                           {std::move(h0), std::move(h1), std::move(h2), std::move(h3)});
    }

    static RingElement from_rationals(long w, const Int& n, const Rat& c0, const Rat& c1,
                                      const Rat& c2, const Rat& c3) {
        return halves(w, n, double_of(c0), double_of(c1), double_of(c2), double_of(c3));
    }

    static RingElement rational(long w, const Int& n, const Rat& r) {
        return from_rationals(w, n, r, 0, 0, 0);
    }

    static RingElement zero(long w, const Int& n) { return integers(w, n, 0, 0, 0, 0); }
    static RingElement one(long w, const Int& n) { return integers(w, n, 1, 0, 0, 0); }

    // value = (h0 + h1*sqrt(r1) + h2*sqrt(r2) + h3*sqrt(r1*r2)) / 2 with
    // arbitrary nonzero radicands r1, r2 (formal ring, no field checks).
    static RingElement formal_halves(const Int& r1, const Int& r2, Int h0, Int h1, Int h2,
                                     Int h3) {
        if (r1 == 0 || r2 == 0)
            throw std::invalid_argument("RingElement: zero radicand");
        return RingElement(r1, r2, {std::move(h0), std::move(h1), std::move(h2), std::move(h3)});
    }

    const Int& rad1() const { return rad1_; }
    const Int& rad2() const { return rad2_; }

    long w() const {
        if (!standard_rads()) throw std::domain_error("RingElement: not a standard field");
        return static_cast<long>(rad1_.get_si());
    }
    Int n() const {
        if (!standard_rads()) throw std::domain_error("RingElement: not a standard field");
        return -rad2_;
    }

    // exact coordinate over {1, sqrt(r1), sqrt(r2), sqrt(r1*r2)}
    Rat coord(int i) const { return make_rat(h_.at(static_cast<size_t>(i)), 2); }
    // twice the coordinate (always an integer)
    const Int& half_units(int i) const { return h_.at(static_cast<size_t>(i)); }

    bool is_zero() const { return h_[0] == 0 && h_[1] == 0 && h_[2] == 0 && h_[3] == 0; }
    bool is_rational() const { return h_[1] == 0 && h_[2] == 0 && h_[3] == 0; }
    Rat rational_value() const {
        if (!is_rational()) throw std::domain_error("RingElement: not rational");
        return coord(0);
    }

    friend bool operator==(const RingElement& a, const RingElement& b) {
        return a.rad1_ == b.rad1_ && a.rad2_ == b.rad2_ && a.h_ == b.h_;
    }
    friend bool operator!=(const RingElement& a, const RingElement& b) { return !(a == b); }

    RingElement operator-() const {
        return RingElement(rad1_, rad2_, {-h_[0], -h_[1], -h_[2], -h_[3]});
    }

    friend RingElement operator+(const RingElement& a, const RingElement& b) {
        a.check_same_field(b);
        return RingElement(a.rad1_, a.rad2_,
                           {a.h_[0] + b.h_[0], a.h_[1] + b.h_[1], a.h_[2] + b.h_[2],
                            a.h_[3] + b.h_[3]});
    }

    friend RingElement operator-(const RingElement& a, const RingElement& b) {
        a.check_same_field(b);
        return RingElement(a.rad1_, a.rad2_,
                           {a.h_[0] - b.h_[0], a.h_[1] - b.h_[1], a.h_[2] - b.h_[2],
                            a.h_[3] - b.h_[3]});
    }

    friend RingElement operator*(const RingElement& a, const RingElement& b) {
        a.check_same_field(b);
        std::array<Int, 4> quarter;  // 4x the true coordinates
        mul4(a.h_, b.h_, a.rad1_, a.rad2_, quarter);
        std::array<Int, 4> h;
        for (int i = 0; i < 4; ++i) {
            if (!is_even(quarter[static_cast<size_t>(i)]))
                throw std::domain_error(
                    "RingElement: product leaves the half-integer lattice");
            h[static_cast<size_t>(i)] = quarter[static_cast<size_t>(i)] / 2;
        }
        return RingElement(a.rad1_, a.rad2_, std::move(h));
    }

    // x^e by square-and-multiply; exact at every step
    RingElement pow(unsigned long e) const {
        RingElement result(rad1_, rad2_, {2, 0, 0, 0});  // one
        RingElement base = *this;
        while (e > 0) {
            if (e & 1UL) result = result * base;
            e >>= 1UL;
            if (e > 0) base = base * base;
        }
        return result;
    }

    // Negates the chosen radical; sqrt(r1*r2) flips with either factor.
    // Applying the same conjugation twice is the identity.
    RingElement conjugate(Radical which) const {
        std::array<Int, 4> h = h_;
        if (which == Radical::SqrtW) {
            h[1] = -h[1];
            h[3] = -h[3];
        } else {
            h[2] = -h[2];
            h[3] = -h[3];
        }
        return RingElement(rad1_, rad2_, std::move(h));
    }

    // Product of the four sign conjugates; a rational with denominator
    // dividing 16.  Computed at fixed scale, so it is total (no lattice
    // throw even for non-integral elements).
    Rat norm() const {
        // p = x * conj_{sqrt(r1)}(x), at 4x scale; lies in span{1, sqrt(r2)}
        const std::array<Int, 4> c1 = {h_[0], -h_[1], h_[2], -h_[3]};
        std::array<Int, 4> p;
        mul4(h_, c1, rad1_, rad2_, p);
        // norm * 16 = (p0 + p2 sqrt(r2)) (p0 - p2 sqrt(r2)) = p0^2 - r2 p2^2
        return make_rat(p[0] * p[0] - rad2_ * p[2] * p[2], 16);
    }

    // Membership in the ring of integers, decided by the explicit integral
    // bases of the standard fields.  Integer coordinates always qualify;
    // half-coordinates qualify exactly in the (odd+odd*sqrt(-n))/2 shape with
    // -n = 1 (mod 4), the analogous sqrt(-wn) shape, and the paired-parity
    // shapes of Z[sqrt(3), (sqrt(3)+sqrt(-n))/2] when w = 3, n = 1 (mod 4).
    bool is_integral() const {
        long w_val = w();  // validates the field
        const Int n_val = -rad2_;
        const bool p0 = !is_even(h_[0]), p1 = !is_even(h_[1]), p2 = !is_even(h_[2]),
                   p3 = !is_even(h_[3]);
        if (!p0 && !p1 && !p2 && !p3) return true;
        if (w_val == 3 && mod_ui(n_val, 4) == 1) return p0 == p3 && p1 == p2;
        if (p0 && !p1 && p2 && !p3) return mod_ui(n_val, 4) == 3;   // -n = 1 (mod 4)
        if (p0 && !p1 && !p2 && p3) return mod_ui(Int(w_val) * n_val, 4) == 3;
        // real-quadratic halves would need w = 1 (mod 4); no standard w is
        return false;
    }

    std::string str() const {
        std::ostringstream out;
        bool any = false;
        const bool half = !is_even(h_[0]) || !is_even(h_[1]) || !is_even(h_[2]) ||
                          !is_even(h_[3]);
        if (half) out << "(";
        for (int i = 0; i < 4; ++i) {
            Int v = half ? h_[static_cast<size_t>(i)] : h_[static_cast<size_t>(i)] / 2;
            if (v == 0) continue;
            if (any)
                out << (v > 0 ? " + " : " - ");
            else if (v < 0)
                out << "-";
            Int a = abs(v);
            const std::string rad = radical_str(i);
            if (rad.empty())
                out << a.get_str();
            else if (a == 1)
                out << rad;
            else
                out << a.get_str() << "*" << rad;
            any = true;
        }
        if (!any) out << "0";
        if (half) out << ")/2";
        return out.str();
    }

private:
    RingElement(Int r1, Int r2, std::array<Int, 4> h)
        : rad1_(std::move(r1)), rad2_(std::move(r2)), h_(std::move(h)) {
        normalize();
    }

    static void check_standard_field(long w, const Int& n) {
        if (w != 1 && w != 2 && w != 3 && w != 6)
            throw std::invalid_argument("RingElement: w must be one of 1, 2, 3, 6");
        if (n < 1) throw std::invalid_argument("RingElement: n must be positive");
        if (!is_squarefree(n))
            throw std::invalid_argument("RingElement: n must be square-free");
        if (w > 1 && gcd(Int(w), n) != 1)
            throw std::invalid_argument("RingElement: w and n must be coprime");
    }

    bool standard_rads() const {
        if (rad2_ >= 0 || !rad1_.fits_slong_p()) return false;
        long w_val = rad1_.get_si();
        return w_val == 1 || w_val == 2 || w_val == 3 || w_val == 6;
    }

    void check_same_field(const RingElement& other) const {
        if (rad1_ != other.rad1_ || rad2_ != other.rad2_)
            throw std::invalid_argument("RingElement: mixed ambient fields");
    }

    static Int double_of(const Rat& c) {
        const Int den = c.get_den();
        if (den == 1) return c.get_num() * 2;
        if (den == 2) return c.get_num();
        throw std::invalid_argument("RingElement: coordinate denominator exceeds 2");
    }

    // (a/2)(b/2) coordinate products at 4x scale over the basis
    // {1, e1, e2, e1 e2} with e1^2 = r1, e2^2 = r2:
    //   e1*e2 = e3,  e1*e3 = r1 e2,  e2*e3 = r2 e1,  e3^2 = r1 r2.
    static void mul4(const std::array<Int, 4>& a, const std::array<Int, 4>& b, const Int& r1,
                     const Int& r2, std::array<Int, 4>& out) {
        const Int r12 = r1 * r2;
        out[0] = a[0] * b[0] + r1 * (a[1] * b[1]) + r2 * (a[2] * b[2]) + r12 * (a[3] * b[3]);
        out[1] = a[0] * b[1] + a[1] * b[0] + r2 * (a[2] * b[3] + a[3] * b[2]);
        out[2] = a[0] * b[2] + a[2] * b[0] + r1 * (a[1] * b[3] + a[3] * b[1]);
        out[3] = a[0] * b[3] + a[3] * b[0] + a[1] * b[2] + a[2] * b[1];
    }

    // sqrt(1) = 1: fold degenerate radicals so equality is coordinate equality
    void normalize() {
        if (rad1_ == 1) {
            h_[0] += h_[1];
            h_[1] = 0;
            h_[2] += h_[3];
            h_[3] = 0;
        }
        if (rad2_ == 1) {
            h_[0] += h_[2];
            h_[2] = 0;
            h_[1] += h_[3];
            h_[3] = 0;
        }
    }

    std::string radical_str(int i) const {
        switch (i) {
            case 1: return "sqrt(" + rad1_.get_str() + ")";
            case 2: return "sqrt(" + rad2_.get_str() + ")";
            case 3: return "sqrt(" + Int(rad1_ * rad2_).get_str() + ")";
            default: return "";
        }
    }

    Int rad1_, rad2_;
    std::array<Int, 4> h_;
};

// x^2 = -1 has a solution in Q(sqrt(w), sqrt(-n)) iff some quadratic
// subfield contains i: a solution generates a degree-<=2 extension, so it
// lies in Q(sqrt(w)), Q(sqrt(-n)) or Q(sqrt(-wn)), and q^2 D = -1 with D
// square-free forces D = -1.  Hence a witness exists exactly when n = 1.
inline std::optional<RingElement> solve_sqrt_minus_one(long w, const Int& n) {
    RingElement probe = RingElement::zero(w, n);  // validates (w, n)
    (void)probe;
    if (n == 1) return RingElement::integers(w, n, 0, 0, 1, 0);
    return std::nullopt;
}

// (p + q sqrt(D))/den with D a nonzero square-free integer and den in {1,2}.
// den = 2 is canonical (p, q not both even) and, unless explicitly allowed,
// restricted to the integral configuration D = 1 (mod 4), p = q (mod 2).
class QuadSurd {
public:
    QuadSurd(Int D, Int p, Int q, int den = 1, bool allow_nonintegral = false)
        : d_(std::move(D)), p_(std::move(p)), q_(std::move(q)), den_(den) {
        if (d_ == 0) throw std::invalid_argument("QuadSurd: zero radicand");
        if (!is_squarefree(abs(d_)))
            throw std::invalid_argument("QuadSurd: radicand must be square-free");
        if (den_ != 1 && den_ != 2) throw std::invalid_argument("QuadSurd: den must be 1 or 2");
        reduce();
        if (den_ == 2 && !allow_nonintegral && !is_integral())
            throw std::invalid_argument(
                "QuadSurd: half denominator requires D = 1 (mod 4) and p = q (mod 2)");
    }

    const Int& disc() const { return d_; }
    const Int& p() const { return p_; }
    const Int& q() const { return q_; }
    int den() const { return den_; }

    Rat rational_part() const { return make_rat(p_, den_); }
    Rat surd_part() const { return make_rat(q_, den_); }

    bool is_integral() const {
        if (den_ == 1) return true;
        return mod_ui(d_, 4) == 1 && is_even(p_) == is_even(q_);
    }

    friend bool operator==(const QuadSurd& a, const QuadSurd& b) {
        return a.d_ == b.d_ && a.p_ == b.p_ && a.q_ == b.q_ && a.den_ == b.den_;
    }
    friend bool operator!=(const QuadSurd& a, const QuadSurd& b) { return !(a == b); }

    QuadSurd operator-() const { return QuadSurd(d_, -p_, -q_, den_, true); }
    QuadSurd conjugate() const { return QuadSurd(d_, p_, -q_, den_, true); }

    friend QuadSurd operator+(const QuadSurd& a, const QuadSurd& b) {
        a.check_same(b);
        if (a.den_ == b.den_) return QuadSurd(a.d_, a.p_ + b.p_, a.q_ + b.q_, a.den_, true);
        const QuadSurd& h = a.den_ == 2 ? a : b;
        const QuadSurd& w = a.den_ == 2 ? b : a;
        return QuadSurd(a.d_, h.p_ + 2 * w.p_, h.q_ + 2 * w.q_, 2, true);
    }

    friend QuadSurd operator-(const QuadSurd& a, const QuadSurd& b) { return a + (-b); }

    friend QuadSurd operator*(const QuadSurd& a, const QuadSurd& b) {
        a.check_same(b);
        Int p = a.p_ * b.p_ + a.q_ * b.q_ * a.d_;
        Int q = a.p_ * b.q_ + a.q_ * b.p_;
        int den = a.den_ * b.den_;
        while (den > 1 && is_even(p) && is_even(q)) {
            p /= 2;
            q /= 2;
            den /= 2;
        }
        if (den > 2) throw std::domain_error("QuadSurd: product leaves the half lattice");
        return QuadSurd(a.d_, std::move(p), std::move(q), den, true);
    }

    QuadSurd pow(unsigned long e) const {
        QuadSurd result(d_, 1, 0, 1, true);
        QuadSurd base = *this;
        while (e > 0) {
            if (e & 1UL) result = result * base;
            e >>= 1UL;
            if (e > 0) base = base * base;
        }
        return result;
    }

    Rat norm() const { return make_rat(p_ * p_ - d_ * q_ * q_, Int(den_) * den_); }

    std::string str() const {
        std::ostringstream out;
        if (den_ == 2) out << "(";
        out << p_.get_str();
        if (q_ >= 0)
            out << " + " << q_.get_str();
        else
            out << " - " << Int(abs(q_)).get_str();
        out << "*sqrt(" << d_.get_str() << ")";
        if (den_ == 2) out << ")/2";
        return out.str();
    }

private:
    void check_same(const QuadSurd& other) const {
        if (d_ != other.d_) throw std::invalid_argument("QuadSurd: mixed radicands");
    }

    void reduce() {
        if (den_ == 2 && is_even(p_) && is_even(q_)) {
            p_ /= 2;
            q_ /= 2;
            den_ = 1;
        }
    }

    Int d_, p_, q_;
    int den_;
};

}  // namespace twothree
