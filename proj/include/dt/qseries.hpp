#pragma once

// Truncated Laurent series in the box-counting variable q, over an arbitrary
// exact coefficient ring C (Rational for pure counts, RatFunc for equivariant
// series). A series knows its valuation (lowest potentially-nonzero power) and
// its truncation order (highest power whose coefficient is reliable); every
// operation propagates the truncation pessimistically:
//
//   add:  T = min(T1, T2)
//   mul:  T = min(T1 + v2, T2 + v1)
//   inv:  same relative precision as the input
//
// Asking for a coefficient beyond the truncation throws — silent garbage is
// the one failure mode this layer exists to rule out. An identically-zero
// series is stored with val = trunc + 1, which makes the rules above work
// unchanged (a zero known to order T could hide terms from T+1 on).

#include "ratfunc.hpp"

#include <map>
#include <sstream>

namespace dt {

template <class C>
class QSeries {
public:
    // zero series, reliable through q^trunc
    explicit QSeries(long trunc = 0) : val_(trunc + 1), trunc_(trunc) {}

    static QSeries monomial(long exp, const C& c, long trunc) {
        QSeries f(trunc);
        if (exp <= trunc) {
            f.coeffs_[exp] = c;
            f.normalize();
        }
        return f;
    }

    static QSeries one(long trunc) { return monomial(0, C(Rational(1)), trunc); }
    static QSeries q_pow(long k, long trunc) { return monomial(k, C(Rational(1)), trunc); }
    // (-q)^k
    static QSeries neg_q_pow(long k, long trunc) {
        return monomial(k, C(Rational((k % 2 == 0) ? 1 : -1)), trunc);
    }

    long valuation() const { return val_; }
    long trunc() const { return trunc_; }
    bool is_zero() const { return coeffs_.empty(); }

    C coeff(long n) const {
        if (n > trunc_)
            throw error("QSeries::coeff: order " + std::to_string(n) +
                        " beyond truncation " + std::to_string(trunc_));
        auto it = coeffs_.find(n);
        return it == coeffs_.end() ? C(Rational(0)) : it->second;
    }

    void set_coeff(long n, const C& c) {
        if (n > trunc_) throw error("QSeries::set_coeff: beyond truncation");
        if (is_zero_c(c))
            coeffs_.erase(n);
        else
            coeffs_[n] = c;
        normalize();
    }

    QSeries truncated(long t) const {
        if (t > trunc_) throw error("QSeries::truncated: cannot extend precision");
        QSeries f(t);
        for (const auto& [n, c] : coeffs_) {
            if (n > t) break;
            f.coeffs_[n] = c;
        }
        f.normalize();
        return f;
    }

    QSeries shifted(long k) const { // multiply by q^k
        QSeries f(trunc_ + k);
        for (const auto& [n, c] : coeffs_) f.coeffs_[n + k] = c;
        f.normalize();
        return f;
    }

    QSeries operator-() const {
        QSeries f = *this;
        for (auto& [n, c] : f.coeffs_) c = -c;
        return f;
    }

    friend QSeries operator+(const QSeries& a, const QSeries& b) {
        QSeries f(std::min(a.trunc_, b.trunc_));
        for (const auto& [n, c] : a.coeffs_)
            if (n <= f.trunc_) f.coeffs_[n] = c;
        for (const auto& [n, c] : b.coeffs_) {
            if (n > f.trunc_) break;
            auto it = f.coeffs_.find(n);
            if (it == f.coeffs_.end())
                f.coeffs_[n] = c;
            else
                it->second = it->second + c;
        }
        f.normalize();
        return f;
    }
    friend QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

    friend QSeries operator*(const QSeries& a, const QSeries& b) {
        QSeries f(std::min(a.trunc_ + b.val_, b.trunc_ + a.val_));
        for (const auto& [n, ca] : a.coeffs_)
            for (const auto& [m, cb] : b.coeffs_) {
                if (n + m > f.trunc_) break; // b.coeffs_ ascending in m
                auto it = f.coeffs_.find(n + m);
                if (it == f.coeffs_.end())
                    f.coeffs_[n + m] = ca * cb;
                else
                    it->second = it->second + ca * cb;
            }
        f.normalize();
        return f;
    }

    QSeries& operator+=(const QSeries& o) { return *this = *this + o; }
    QSeries& operator-=(const QSeries& o) { return *this = *this - o; }
    QSeries& operator*=(const QSeries& o) { return *this = *this * o; }

    friend QSeries operator*(const QSeries& a, const C& c) {
        if (is_zero_c(c)) return QSeries(a.trunc_);
        QSeries f = a;
        for (auto& [n, v] : f.coeffs_) v = v * c;
        f.normalize();
        return f;
    }
    friend QSeries operator*(const C& c, const QSeries& a) { return a * c; }

    // multiplicative inverse; leading coefficient must be invertible in C
    QSeries inv() const {
        if (is_zero()) throw error("QSeries::inv: zero series");
        long v = val_, rel = trunc_ - val_;
        C lead = coeffs_.at(v);
        QSeries f(rel - v); // valuation -v, same relative precision
        std::map<long, C> inv_rel;
        inv_rel[0] = C(Rational(1)) / lead;
        for (long n = 1; n <= rel; ++n) {
            C acc(Rational(0));
            for (const auto& [m, c] : coeffs_) {
                long k = m - v;
                if (k < 1) continue;
                if (k > n) break;
                auto it = inv_rel.find(n - k);
                if (it != inv_rel.end()) acc = acc + c * it->second;
            }
            C cn = -(acc / lead);
            if (!is_zero_c(cn)) inv_rel[n] = cn;
        }
        for (const auto& [n, c] : inv_rel) f.coeffs_[n - v] = c;
        f.normalize();
        return f;
    }

    friend QSeries operator/(const QSeries& a, const QSeries& b) { return a * b.inv(); }

    QSeries pow(int e) const {
        if (e < 0) return inv().pow(-e);
        // cap the truncation the product rules would yield, then square-multiply
        if (e == 0) return one(is_zero() ? trunc_ : trunc_ - val_);
        QSeries acc = *this;
        for (int i = 1; i < e; ++i) acc *= *this;
        return acc;
    }

    // q d/dq
    QSeries theta() const {
        QSeries f(trunc_);
        for (const auto& [n, c] : coeffs_) {
            C v = c * C(Rational(n));
            if (!is_zero_c(v)) f.coeffs_[n] = v;
        }
        f.normalize();
        return f;
    }

    // q := -q
    QSeries flip_sign() const {
        QSeries f(trunc_);
        for (const auto& [n, c] : coeffs_) f.coeffs_[n] = (n % 2 == 0) ? c : -c;
        f.normalize();
        return f;
    }

    template <class F>
    auto map(F&& fn) const -> QSeries<std::decay_t<decltype(fn(std::declval<C>()))>> {
        using D = std::decay_t<decltype(fn(std::declval<C>()))>;
        QSeries<D> f(trunc_);
        for (const auto& [n, c] : coeffs_) {
            D v = fn(c);
            if (!QSeries<D>::is_zero_c(v)) f.raw_insert(n, v);
        }
        f.normalize();
        return f;
    }

    const std::map<long, C>& coeffs() const { return coeffs_; }
    void raw_insert(long n, const C& c) { coeffs_[n] = c; } // used by map()
    void normalize() {
        for (auto it = coeffs_.begin(); it != coeffs_.end();)
            it = (it->first > trunc_ || is_zero_c(it->second)) ? coeffs_.erase(it)
                                                               : std::next(it);
        val_ = coeffs_.empty() ? trunc_ + 1 : coeffs_.begin()->first;
    }

    static bool is_zero_c(const C& c) {
        if constexpr (std::is_same_v<C, Rational>)
            return c == 0;
        else
            return c.is_zero();
    }

    std::string str() const {
        if (is_zero()) return "0 + O(q^" + std::to_string(trunc_ + 1) + ")";
        std::ostringstream os;
        bool first = true;
        for (const auto& [n, c] : coeffs_) {
            std::string cs;
            if constexpr (std::is_same_v<C, Rational>)
                cs = rat_str(c);
            else
                cs = c.str();
            bool neg = !cs.empty() && cs[0] == '-';
            if (first) {
                if (neg) { os << "-"; cs = cs.substr(1); }
                first = false;
            } else if (neg && cs.find(' ') == std::string::npos) {
                os << " - ";
                cs = cs.substr(1);
            } else {
                os << " + ";
            }
            bool unit = (cs == "1") && n != 0;
            if (!unit) os << (cs.find(' ') != std::string::npos ? "(" + cs + ")" : cs);
            if (n != 0) {
                if (!unit) os << "*";
                os << "q";
                if (n != 1) os << "^" << n;
            }
            first = false;
        }
        os << " + O(q^" << trunc_ + 1 << ")";
        return os.str();
    }

private:
    long val_;
    long trunc_;
    std::map<long, C> coeffs_; // ascending exponent; absent = zero
};

// coefficient-wise equality through order min(T1, T2); the workhorse of the
// property tests (exactness up to truncation, never approximate)
template <class C>
bool agree(const QSeries<C>& a, const QSeries<C>& b, long at_least = -1000000) {
    long T = std::min(a.trunc(), b.trunc());
    if (T < at_least) throw error("agree: series not reliable to requested order");
    for (long n = std::min(a.valuation(), b.valuation()); n <= T; ++n)
        if (a.coeff(n) != b.coeff(n)) return false;
    return true;
}

// f^E for exponent E in the coefficient ring; needs f = 1 + O(q).
//   n g_n = sum_{k=1..n} (E k - (n-k)) f_k g_{n-k}
template <class C>
QSeries<C> series_pow_exponent(const QSeries<C>& f, const C& E) {
    if (f.valuation() != 0 || f.coeff(0) != C(Rational(1)))
        throw error("series_pow_exponent: series must start at 1");
    long T = f.trunc();
    QSeries<C> g = QSeries<C>::one(T);
    std::map<long, C> gc;
    gc[0] = C(Rational(1));
    for (long n = 1; n <= T; ++n) {
        C acc(Rational(0));
        for (long k = 1; k <= n; ++k) {
            C fk = f.coeff(k);
            if (QSeries<C>::is_zero_c(fk)) continue;
            auto it = gc.find(n - k);
            if (it == gc.end()) continue;
            acc = acc + (E * C(Rational(k)) - C(Rational(n - k))) * fk * it->second;
        }
        C gn = acc / C(Rational(n));
        if (!QSeries<C>::is_zero_c(gn)) gc[n] = gn;
    }
    QSeries<C> out(T);
    for (const auto& [n, c] : gc) out.raw_insert(n, c);
    out.normalize();
    return out;
}

// log f for f = 1 + O(q):  n L_n = n f_n - sum_{k=1..n-1} k L_k f_{n-k}
template <class C>
QSeries<C> series_log(const QSeries<C>& f) {
    if (f.valuation() != 0 || f.coeff(0) != C(Rational(1)))
        throw error("series_log: series must start at 1");
    long T = f.trunc();
    std::map<long, C> lc;
    for (long n = 1; n <= T; ++n) {
        C acc = f.coeff(n) * C(Rational(n));
        for (long k = 1; k < n; ++k) {
            auto it = lc.find(k);
            if (it == lc.end()) continue;
            C fk = f.coeff(n - k);
            if (QSeries<C>::is_zero_c(fk)) continue;
            acc = acc - C(Rational(k)) * it->second * fk;
        }
        C ln = acc / C(Rational(n));
        if (!QSeries<C>::is_zero_c(ln)) lc[n] = ln;
    }
    QSeries<C> out(T);
    for (const auto& [n, c] : lc) out.raw_insert(n, c);
    out.normalize();
    return out;
}

// MacMahon's generating series prod_{n>=1} (1 - q^n)^{-n}
inline QSeries<Rational> macmahon(long trunc) {
    QSeries<Rational> f = QSeries<Rational>::one(trunc);
    for (long n = 1; n <= trunc; ++n) {
        QSeries<Rational> factor =
            QSeries<Rational>::one(trunc) - QSeries<Rational>::q_pow(n, trunc);
        f *= factor.pow(static_cast<int>(-n));
    }
    return f;
}

// q d/dq log M(-q) = sum_{j>=1} (-1)^j (sum_{n|j} n^2) q^j
inline QSeries<Rational> theta_log_macmahon_neg(long trunc) {
    QSeries<Rational> f(trunc);
    for (long j = 1; j <= trunc; ++j) {
        Integer d(0);
        for (long n = 1; n <= j; ++n)
            if (j % n == 0) d += Integer(n) * Integer(n);
        f.set_coeff(j, Rational((j % 2 == 0) ? d : -d));
    }
    return f;
}

} // namespace dt
