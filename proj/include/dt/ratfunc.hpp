#pragma once

// Rational functions in (s, t1, t2), kept fully reduced at all times:
//   * numerator and denominator share no polynomial factor,
//   * the denominator is integer-primitive with positive leading coefficient
//     (graded-lex); the overall rational scale lives in the numerator.
// With that normalization two equal functions have identical representations,
// so operator== is plain member comparison.

#include "multipoly.hpp"

namespace dt {

class RatFunc {
public:
    RatFunc() : num_(), den_(Rational(1)) {}
    RatFunc(const Rational& c) : num_(c), den_(Rational(1)) {}
    RatFunc(long c) : num_(Rational(c)), den_(Rational(1)) {}
    RatFunc(const MultiPoly& p) : num_(p), den_(Rational(1)) {}
    RatFunc(MultiPoly n, MultiPoly d) : num_(std::move(n)), den_(std::move(d)) {
        reduce();
    }

    static RatFunc var(int v, int exp = 1) { return RatFunc(MultiPoly::var(v, exp)); }

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }

    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const {
        if (!is_constant()) throw error("RatFunc: not a constant");
        return num_.constant_value() / den_.constant_value();
    }

    const MultiPoly& as_polynomial() const {
        if (!is_polynomial()) throw error("RatFunc: denominator is not trivial");
        return num_; // den_ == 1 by normalization
    }

    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero() || b.is_zero()) return RatFunc();
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }

    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw error("RatFunc: division by zero");
        if (a.is_zero()) return RatFunc();
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }

    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    RatFunc inv() const {
        if (is_zero()) throw error("RatFunc::inv: zero");
        return RatFunc(den_, num_);
    }

    RatFunc pow(int e) const {
        if (e < 0) return inv().pow(-e);
        RatFunc acc(Rational(1)), b = *this;
        while (e) {
            if (e & 1) acc *= b;
            if (e >>= 1) b *= b;
        }
        return acc;
    }

    // f with x_v := g (field substitution; throws if a denominator vanishes
    // identically under it).
    RatFunc subst(int v, const RatFunc& g) const {
        RatFunc n = subst_poly(num_, v, g);
        RatFunc d = subst_poly(den_, v, g);
        if (d.is_zero()) throw error("RatFunc::subst: denominator vanishes");
        return n / d;
    }
    RatFunc subst(int v, const Rational& c) const { return subst(v, RatFunc(c)); }

    Rational eval(const Rational& vs, const Rational& vt1, const Rational& vt2) const {
        Rational d = den_.eval(vs, vt1, vt2);
        if (d == 0) throw error("RatFunc::eval: pole at sample point");
        return num_.eval(vs, vt1, vt2) / d;
    }

    std::string str() const {
        if (is_polynomial()) return num_.str();
        bool npar = num_.terms().size() > 1;
        std::string out = npar ? "(" + num_.str() + ")" : num_.str();
        return out + "/(" + den_.str() + ")";
    }

private:
    static RatFunc subst_poly(const MultiPoly& p, int v, const RatFunc& g) {
        int d = p.degree_in(v);
        if (d <= 0) return RatFunc(p);
        RatFunc acc(p.coeff_in(v, d));
        for (int k = d - 1; k >= 0; --k) acc = acc * g + RatFunc(p.coeff_in(v, k));
        return acc;
    }

    void reduce() {
        if (den_.is_zero()) throw error("RatFunc: zero denominator");
        if (num_.is_zero()) {
            den_ = MultiPoly(Rational(1));
            return;
        }
        if (den_.is_constant()) {
            num_ /= den_.constant_value();
            den_ = MultiPoly(Rational(1));
            return;
        }
        Rational cn = num_.content(), cd = den_.content();
        MultiPoly nz = num_, dz = den_;
        nz /= cn;
        dz /= cd;
        MultiPoly g = poly_gcd(nz, dz);
        if (!g.is_constant() || g.constant_value() != 1) {
            nz = divexact(nz, g);
            dz = divexact(dz, g);
        }
        if (dz.is_constant()) {
            num_ = nz * (cn / (cd * dz.constant_value()));
            den_ = MultiPoly(Rational(1));
            return;
        }
        if (dz.leading().second < 0) {
            nz = -nz;
            dz = -dz;
        }
        num_ = nz * (cn / cd);
        den_ = dz;
    }

    MultiPoly num_;
    MultiPoly den_;
};

// t1 <-> t2 (variable slots 1 and 2), an involutive field automorphism.
inline RatFunc swap_t(const RatFunc& f) {
    return RatFunc(swap_vars(f.num(), 1, 2), swap_vars(f.den(), 1, 2));
}

// f restricted to the anti-diagonal t2 = -t1. Throws on a pole there.
inline RatFunc antidiagonal_restrict(const RatFunc& f) {
    return f.subst(2, -RatFunc::var(1));
}

// (t1 + t2) | f, detected through the restriction t2 = -t1: for a polynomial
// the two statements are equivalent, and for a reduced rational function
// divisibility of the numerator is the right reading (the denominator must
// not vanish on the anti-diagonal, or the question is ill posed and we throw).
inline bool divisible_by_antidiagonal(const MultiPoly& f) {
    return f.subst(2, -MultiPoly::var(1)).is_zero();
}
inline bool divisible_by_antidiagonal(const RatFunc& f) {
    if (divisible_by_antidiagonal(f.den()))
        throw error("divisible_by_antidiagonal: denominator vanishes at t2 = -t1");
    return divisible_by_antidiagonal(f.num());
}

} // namespace dt
