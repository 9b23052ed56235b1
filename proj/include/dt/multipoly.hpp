#pragma once

// Sparse polynomials over the rationals in the three equivariant parameters.
// Variable slots are fixed library-wide: 0 = s, 1 = t1, 2 = t2. Terms are kept
// in graded-lex order (total degree first, then lex on exponents), which is a
// proper monomial order, so leading-term exact division is well defined.
//
// The gcd tries the evaluation heuristic first: substitute a large integer
// for one variable, take the gcd one level down, lift the result back through
// balanced base-xi digits, and certify it by exact trial division of both
// inputs. A certified candidate is the true gcd (the evaluation point exceeds
// twice the smaller coefficient height, so the digit lift of the evaluated
// gcd is faithful); an uncertified one triggers a retry at a fresh point, and
// after a few failures we fall back to Brown's subresultant polynomial-
// remainder sequence, which is slow but unconditional.

#include "rational.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>
#include <vector>

namespace dt {

inline constexpr int kNumVars = 3;
inline constexpr const char* kVarNames[kNumVars] = {"s", "t1", "t2"};

using Mono = std::array<int, kNumVars>;

inline int mono_total(const Mono& m) { return m[0] + m[1] + m[2]; }

// Graded-lex: higher total degree first; ties broken lexicographically with
// larger s-exponent first, then t1, then t2. "Less" means closer to the tail
// of the canonical (descending) print order.
struct MonoLess {
    bool operator()(const Mono& a, const Mono& b) const {
        int ta = mono_total(a), tb = mono_total(b);
        if (ta != tb) return ta < tb;
        return a < b; // std::array lex
    }
};

class MultiPoly {
public:
    using TermMap = std::map<Mono, Rational, MonoLess>;

    MultiPoly() = default;
    explicit MultiPoly(const Rational& c) {
        if (c != 0) terms_[Mono{0, 0, 0}] = c;
    }
    explicit MultiPoly(long c) : MultiPoly(Rational(c)) {}

    static MultiPoly var(int v, int exp = 1) {
        if (v < 0 || v >= kNumVars) throw error("MultiPoly::var: bad index");
        MultiPoly p;
        Mono m{0, 0, 0};
        m[v] = exp;
        p.terms_[m] = 1;
        return p;
    }

    static MultiPoly term(const Mono& m, const Rational& c) {
        MultiPoly p;
        if (c != 0) p.terms_[m] = c;
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && terms_.begin()->first == Mono{0, 0, 0});
    }

    Rational constant_value() const {
        if (is_zero()) return Rational(0);
        if (!is_constant()) throw error("MultiPoly: not a constant");
        return terms_.begin()->second;
    }

    int total_degree() const {
        if (is_zero()) return -1;
        return mono_total(terms_.rbegin()->first);
    }

    int degree_in(int v) const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m[v]);
        return d;
    }

    bool depends_on(int v) const {
        for (const auto& [m, c] : terms_)
            if (m[v] > 0) return true;
        return false;
    }

    // Leading term in graded-lex (the map's last entry).
    const std::pair<const Mono, Rational>& leading() const {
        if (is_zero()) throw error("MultiPoly::leading: zero polynomial");
        return *terms_.rbegin();
    }

    Rational coeff(const Mono& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    MultiPoly operator-() const {
        MultiPoly r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                r.add_term(Mono{ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]}, ca * cb);
        return r;
    }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    MultiPoly& operator*=(const Rational& c) {
        if (c == 0) { terms_.clear(); return *this; }
        for (auto& [m, v] : terms_) v *= c;
        return *this;
    }
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }

    MultiPoly& operator/=(const Rational& c) {
        if (c == 0) throw error("MultiPoly: division by zero scalar");
        for (auto& [m, v] : terms_) v /= c;
        return *this;
    }

    bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    MultiPoly pow(int e) const {
        if (e < 0) throw error("MultiPoly::pow: negative exponent");
        MultiPoly acc(Rational(1)), b = *this;
        while (e) {
            if (e & 1) acc *= b;
            if (e >>= 1) b *= b;
        }
        return acc;
    }

    // Coefficient of v^k, as a polynomial with the v-exponent stripped.
    MultiPoly coeff_in(int v, int k) const {
        MultiPoly r;
        for (const auto& [m, c] : terms_)
            if (m[v] == k) {
                Mono m2 = m;
                m2[v] = 0;
                r.terms_[m2] = c;
            }
        return r;
    }

    // f(..., x_v = g, ...) by Horner in x_v.
    MultiPoly subst(int v, const MultiPoly& g) const {
        int d = degree_in(v);
        if (d <= 0) return *this;
        MultiPoly acc = coeff_in(v, d);
        for (int k = d - 1; k >= 0; --k) acc = acc * g + coeff_in(v, k);
        return acc;
    }

    MultiPoly subst(int v, const Rational& c) const { return subst(v, MultiPoly(c)); }

    Rational eval(const Rational& vs, const Rational& vt1, const Rational& vt2) const {
        Rational r(0);
        for (const auto& [m, c] : terms_)
            r += c * rat_pow(vs, m[0]) * rat_pow(vt1, m[1]) * rat_pow(vt2, m[2]);
        return r;
    }

    // Grading by the total exponent of the selected variables: returns the
    // pieces f_d with f = sum_d f_d, keyed by d.
    std::map<int, MultiPoly> graded_parts(const std::array<bool, kNumVars>& sel) const {
        std::map<int, MultiPoly> out;
        for (const auto& [m, c] : terms_) {
            int d = 0;
            for (int v = 0; v < kNumVars; ++v)
                if (sel[v]) d += m[v];
            out[d].terms_[m] = c;
        }
        return out;
    }

    bool is_homogeneous(const std::array<bool, kNumVars>& sel, int* deg = nullptr) const {
        auto parts = graded_parts(sel);
        if (parts.size() > 1) return false;
        if (deg) *deg = parts.empty() ? 0 : parts.begin()->first;
        return true;
    }

    // Exact division by leading terms; throws if d does not divide *this.
    friend MultiPoly divexact(const MultiPoly& f, const MultiPoly& d) {
        if (d.is_zero()) throw error("divexact: division by zero polynomial");
        if (f.is_zero()) return MultiPoly();
        if (d.is_constant()) {
            MultiPoly q = f;
            q /= d.constant_value();
            return q;
        }
        MultiPoly q, r = f;
        const auto& [dm, dc] = d.leading();
        while (!r.is_zero()) {
            const auto& [rm, rc] = r.leading();
            Mono qm;
            for (int v = 0; v < kNumVars; ++v) {
                qm[v] = rm[v] - dm[v];
                if (qm[v] < 0) throw error("divexact: not divisible");
            }
            Rational qc = rc / dc;
            q.add_term(qm, qc);
            r -= MultiPoly::term(qm, qc) * d;
        }
        return q;
    }

    // gcd of the integer numerators over lcm of denominators: f / content(f)
    // is integer-primitive. Zero polynomial has content 0.
    Rational content() const {
        if (is_zero()) return Rational(0);
        Integer g(0), l(1);
        for (const auto& [m, c] : terms_) {
            g = boost::multiprecision::gcd(g, numerator(c));
            l = boost::multiprecision::lcm(l, denominator(c));
        }
        return Rational(g, l);
    }

    std::string str() const;

private:
    void add_term(const Mono& m, const Rational& c) {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_[m] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    TermMap terms_;
};

namespace detail {

// Integer-primitive part with positive graded-lex leading coefficient; the
// canonical associate used throughout gcd computations.
inline MultiPoly normalize_primitive(const MultiPoly& f) {
    if (f.is_zero()) return f;
    Rational c = f.content();
    if (f.leading().second < 0) c = -c;
    MultiPoly g = f;
    g /= c;
    return g;
}

// Pseudo-remainder of f by g in variable v: lc_v(g)^(deg f - deg g + 1) * f
// reduced mod g, all over the coefficient ring (no fractions introduced).
inline MultiPoly prem(const MultiPoly& f, const MultiPoly& g, int v) {
    int dg = g.degree_in(v);
    MultiPoly lcg = g.coeff_in(v, dg);
    MultiPoly r = f;
    int e = f.degree_in(v) - dg + 1;
    while (!r.is_zero() && r.degree_in(v) >= dg) {
        int dr = r.degree_in(v);
        MultiPoly lcr = r.coeff_in(v, dr);
        r = lcg * r - lcr * MultiPoly::var(v, dr - dg) * g;
        --e;
    }
    for (; e > 0; --e) r *= lcg;
    return r;
}

inline MultiPoly gcd_z(const MultiPoly& a, const MultiPoly& b);

// Content of f with respect to variable v: gcd of its v-coefficients.
inline MultiPoly content_in(const MultiPoly& f, int v) {
    MultiPoly c;
    for (int k = 0; k <= f.degree_in(v); ++k) {
        MultiPoly ck = f.coeff_in(v, k);
        if (ck.is_zero()) continue;
        c = c.is_zero() ? normalize_primitive(ck) : gcd_z(c, ck);
        if (c.is_constant()) break; // gcd can only shrink; 1 is terminal
    }
    return c;
}

// Subresultant PRS gcd of integer-primitive inputs (any associates accepted;
// result is the canonical associate).
inline MultiPoly gcd_z(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero()) return normalize_primitive(b);
    if (b.is_zero()) return normalize_primitive(a);

    int v = -1;
    for (int i = 0; i < kNumVars && v < 0; ++i)
        if (a.depends_on(i) || b.depends_on(i)) v = i;
    if (v < 0) {
        // both nonzero integers
        Integer g = boost::multiprecision::gcd(numerator(a.constant_value()),
                                               numerator(b.constant_value()));
        return MultiPoly(Rational(g));
    }

    MultiPoly ca = content_in(a, v), cb = content_in(b, v);
    MultiPoly f = divexact(a, ca), g = divexact(b, cb);
    MultiPoly c = gcd_z(ca, cb);

    if (f.degree_in(v) < g.degree_in(v)) std::swap(f, g);

    MultiPoly hpow(Rational(1)), lcprev(Rational(1));
    while (true) {
        int delta = f.degree_in(v) - g.degree_in(v);
        MultiPoly r = prem(f, g, v);
        if (r.is_zero()) break;
        if (r.degree_in(v) == 0) {
            // last nonzero remainder is v-free: the primitive gcd is trivial
            return normalize_primitive(c);
        }
        f = g;
        g = divexact(r, lcprev * hpow.pow(delta));
        lcprev = f.coeff_in(v, f.degree_in(v));
        if (delta > 0)
            hpow = delta == 1 ? lcprev : divexact(lcprev.pow(delta), hpow.pow(delta - 1));
    }
    return normalize_primitive(c * divexact(g, content_in(g, v)));
}

} // namespace detail

// Exchange two variables (a ring automorphism).
inline MultiPoly swap_vars(const MultiPoly& f, int a, int b) {
    if (a < 0 || a >= kNumVars || b < 0 || b >= kNumVars)
        throw error("swap_vars: bad index");
    MultiPoly r;
    for (const auto& [m, c] : f.terms()) {
        Mono m2 = m;
        std::swap(m2[a], m2[b]);
        r += MultiPoly::term(m2, c);
    }
    return r;
}

// Canonical gcd over Q[s,t1,t2]: integer-primitive, positive leading
// coefficient. gcd(0,0) = 0.
inline MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() && b.is_zero()) return MultiPoly();
    if (a.is_zero()) return detail::normalize_primitive(b);
    if (b.is_zero()) return detail::normalize_primitive(a);
    return detail::gcd_z(detail::normalize_primitive(a),
                         detail::normalize_primitive(b));
}

inline std::string MultiPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // canonical print order: graded-lex descending
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational ca = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool unit = (ca == 1);
        bool has_var = mono_total(m) > 0;
        if (!has_var || !unit) os << rat_str(ca);
        bool star = !unit;
        for (int v = 0; v < kNumVars; ++v) {
            if (m[v] == 0) continue;
            if (star) os << "*";
            os << kVarNames[v];
            if (m[v] > 1) os << "^" << m[v];
            star = true;
        }
    }
    return os.str();
}

} // namespace dt
