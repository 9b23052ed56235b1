#pragma once

// The Fock-space model: basis states indexed by partitions, bosonic creation
// and annihilation operators, the equivariant inner product, the divisor
// operators (classical and quantum), and the torus-fixed-point classes.
//
// Normalization: the basis state of a partition mu is the alpha-monomial on
// the vacuum divided by z(mu). In that basis
//
//   alpha_m   |mu> = |mu minus a part m>                      (m > 0)
//   alpha_{-m}|mu> = m (c_m + 1) |mu plus a part m>           (c_m = mult of m)
//   <mu|nu>        = delta * (-1)^{|mu| - l(mu)} / ( (t1 t2)^{l(mu)} z(mu) )
//
// Operators that depend on q are stored as matrices of truncated series over
// the degree-d basis, with entry(mu, nu) = coefficient of |mu> in Op|nu>.

#include "homog.hpp"
#include "linalg.hpp"
#include "partition.hpp"
#include "qseries.hpp"
#include "symfunc.hpp"

#include <map>
#include <mutex>

namespace dt {

using FockVec = std::map<Partition, RatFunc>;
using OpSeries = Matrix<QSeries<RatFunc>>;   // q-dependent degree-preserving operator
using OpConst = Matrix<RatFunc>;             // q-independent one

struct FockBasis {
    explicit FockBasis(int degree) : d(degree), parts(partitions_of(degree)) {
        for (size_t i = 0; i < parts.size(); ++i) index[parts[i]] = static_cast<int>(i);
    }
    int at(const Partition& mu) const {
        auto it = index.find(mu);
        if (it == index.end()) throw error("FockBasis: partition of wrong size");
        return it->second;
    }
    size_t dim() const { return parts.size(); }

    int d;
    std::vector<Partition> parts;
    std::map<Partition, int> index;
};

inline void fock_add(FockVec& v, const Partition& mu, const RatFunc& c) {
    if (c.is_zero()) return;
    auto it = v.find(mu);
    if (it == v.end()) {
        v[mu] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) v.erase(it);
    }
}

inline FockVec fock_scale(const FockVec& v, const RatFunc& c) {
    FockVec out;
    for (const auto& [mu, x] : v) fock_add(out, mu, x * c);
    return out;
}

inline FockVec fock_sum(const FockVec& a, const FockVec& b) {
    FockVec out = a;
    for (const auto& [mu, x] : b) fock_add(out, mu, x);
    return out;
}

// alpha_m for m != 0 (annihilation for m > 0, creation for m < 0)
inline FockVec apply_alpha(int m, const FockVec& v) {
    if (m == 0) throw error("apply_alpha: m must be nonzero");
    FockVec out;
    for (const auto& [mu, c] : v) {
        if (m > 0) {
            auto mult = mu.multiplicities();
            if (mult.count(m)) fock_add(out, mu.remove_part(m), c);
        } else {
            int k = -m;
            int cm = 0;
            for (int p : mu.parts())
                if (p == k) ++cm;
            fock_add(out, mu.add_part(k), c * RatFunc(Rational(Integer(k) * (cm + 1))));
        }
    }
    return out;
}

// <mu|mu> (off-diagonal pairs vanish)
inline RatFunc fock_self_pairing(const Partition& mu) {
    int d = mu.size(), l = mu.length();
    RatFunc t1t2 = RatFunc::var(1) * RatFunc::var(2);
    Rational sign((d - l) % 2 == 0 ? 1 : -1);
    return RatFunc(sign) / (t1t2.pow(l) * RatFunc(Rational(z_factor(mu))));
}

inline RatFunc fock_pairing(const FockVec& a, const FockVec& b) {
    RatFunc acc;
    for (const auto& [mu, x] : a) {
        auto it = b.find(mu);
        if (it != b.end()) acc += x * it->second * fock_self_pairing(mu);
    }
    return acc;
}

// diagonal of the inverse pairing: 1 / <mu|mu>
inline RatFunc pairing_inverse_diag(const Partition& mu) {
    return fock_self_pairing(mu).inv();
}

namespace detail {

inline QSeries<RatFunc> to_ratfunc_series(const QSeries<Rational>& f) {
    return f.map([](const Rational& c) { return RatFunc(c); });
}

// ((-q)^k + 1) / ((-q)^k - 1) as a series
inline QSeries<RatFunc> mode_energy_ratio(int k, long T) {
    using QS = QSeries<Rational>;
    QS x = QS::neg_q_pow(k, T);
    return to_ratfunc_series((x + QS::one(T)) * (x - QS::one(T)).inv());
}

// the q-independent splitting/joining cubic: to |nu> add, over ordered pairs
// (k,l) with k,l >= 1,
//   (1/2) [ t1 t2 * alpha_{k+l} alpha_{-k} alpha_{-l}  -  alpha_{-k-l} alpha_k alpha_l ] |nu>
inline FockVec splitting_joining(const Partition& nu) {
    int d = nu.size();
    RatFunc t1t2 = RatFunc::var(1) * RatFunc::var(2);
    RatFunc half(Rational(1, 2));
    FockVec acc;
    FockVec base{{nu, RatFunc(Rational(1))}};
    for (int k = 1; k < d; ++k)
        for (int l = 1; k + l <= d; ++l) {
            FockVec a = apply_alpha(k + l, apply_alpha(-k, apply_alpha(-l, base)));
            FockVec b = apply_alpha(-k - l, apply_alpha(k, apply_alpha(l, base)));
            acc = fock_sum(acc, fock_scale(a, half * t1t2));
            acc = fock_sum(acc, fock_scale(b, -half));
        }
    return acc;
}

} // namespace detail

// classical divisor operator: diagonal -(t1+t2) sum_i mu_i (mu_i - 1)/2 plus
// the splitting/joining cubic
inline OpConst classical_mult_divisor(const FockBasis& B) {
    RatFunc t12 = RatFunc::var(1) + RatFunc::var(2);
    OpConst M(B.dim(), std::vector<RatFunc>(B.dim()));
    for (size_t j = 0; j < B.dim(); ++j) {
        const Partition& nu = B.parts[j];
        Rational diag(0);
        for (int p : nu.parts()) diag += Rational(Integer(p) * (p - 1), 2);
        FockVec col = detail::splitting_joining(nu);
        fock_add(col, nu, t12 * RatFunc(-diag));
        for (const auto& [mu, c] : col) M[B.at(mu)][j] = c;
    }
    return M;
}

// quantum multiplication by the divisor: the energy-weighted diagonal plus the
// same classical cubic
inline OpSeries quantum_mult_divisor(const FockBasis& B, long T) {
    using QF = QSeries<RatFunc>;
    RatFunc t12 = RatFunc::var(1) + RatFunc::var(2);
    OpSeries M(B.dim(), std::vector<QF>(B.dim(), QF(T)));
    for (size_t j = 0; j < B.dim(); ++j) {
        const Partition& nu = B.parts[j];
        QF diag(T);
        for (int p : nu.parts())
            diag += detail::mode_energy_ratio(p, T) * RatFunc(Rational(Integer(p) * p, 2));
        M[j][j] = diag * t12;
        FockVec cubic = detail::splitting_joining(nu);
        for (const auto& [mu, c] : cubic)
            M[B.at(mu)][j] += QF::monomial(0, c, T);
    }
    return M;
}

// descendent operator: M minus (t1+t2) * Phi(q) * Id, where Phi is the theta
// logarithm of the sign-twisted MacMahon series
inline OpSeries descendent_operator(const FockBasis& B, long T) {
    OpSeries M = quantum_mult_divisor(B, T);
    QSeries<RatFunc> shift =
        detail::to_ratfunc_series(theta_log_macmahon_neg(T)) *
        (RatFunc::var(1) + RatFunc::var(2));
    for (size_t i = 0; i < B.dim(); ++i) M[i][i] -= shift;
    return M;
}

// bracket of one first-descendent insertion against relative states at both
// ends of the tube: -q^d <mu| Msig |nu> with the pairing written out (the
// operator matrix is in the |.> basis, so pairing against <mu| picks up the
// diagonal norm of |mu>)
inline QSeries<RatFunc> sigma1_f_bracket(const FockBasis& B, const OpSeries& Msig,
                                         const Partition& mu, const Partition& nu) {
    QSeries<RatFunc> e = Msig[B.at(mu)][B.at(nu)] * fock_self_pairing(mu);
    return -(e.shifted(B.d));
}

// relative divisor operator: M minus (t1+t2)/2 * (q-1)/(q+1) * degree * Id
inline OpSeries relative_divisor_operator(const FockBasis& B, long T) {
    using QS = QSeries<Rational>;
    OpSeries M = quantum_mult_divisor(B, T);
    QSeries<RatFunc> ratio = detail::to_ratfunc_series(
        (QS::q_pow(1, T) - QS::one(T)) * (QS::q_pow(1, T) + QS::one(T)).inv());
    QSeries<RatFunc> shift =
        ratio * (RatFunc(Rational(B.d, 2)) * (RatFunc::var(1) + RatFunc::var(2)));
    for (size_t i = 0; i < B.dim(); ++i) M[i][i] -= shift;
    return M;
}

// the energy operator: diagonal with eigenvalue |mu| (so d * Id on a
// fixed-degree basis)
inline OpConst energy_operator(const FockBasis& B) {
    OpConst out(B.dim(), std::vector<RatFunc>(B.dim()));
    for (size_t i = 0; i < B.dim(); ++i) out[i][i] = RatFunc(Rational(B.parts[i].size()));
    return out;
}

// q^0 part of a series operator
inline OpConst op_constant_term(const OpSeries& M) {
    OpConst out(M.size(), std::vector<RatFunc>(M.size()));
    for (size_t i = 0; i < M.size(); ++i)
        for (size_t j = 0; j < M.size(); ++j) out[i][j] = M[i][j].coeff(0);
    return out;
}

inline FockVec apply_op(const OpConst& M, const FockBasis& B, const FockVec& v) {
    FockVec out;
    for (const auto& [nu, c] : v) {
        int j = B.at(nu);
        for (size_t i = 0; i < B.dim(); ++i) fock_add(out, B.parts[i], M[i][j] * c);
    }
    return out;
}

// ----- torus fixed points ------------------------------------------------

// tangent weights of the Hilbert-scheme fixed point: for each cell,
// leg t1 - (arm+1) t2  and  -(leg+1) t1 + arm t2
inline std::vector<MultiPoly> tangent_weights(const Partition& mu) {
    MultiPoly t1 = MultiPoly::var(1), t2 = MultiPoly::var(2);
    std::vector<MultiPoly> ws;
    for (auto [i, j] : mu.cells()) {
        long a = mu.arm(i, j), l = mu.leg(i, j);
        ws.push_back(Rational(l) * t1 - Rational(a + 1) * t2);
        ws.push_back(Rational(-(l + 1)) * t1 + Rational(a) * t2);
    }
    return ws;
}

// product of the tangent weights (the Euler class at the fixed point)
inline RatFunc euler_tangent(const Partition& mu) {
    MultiPoly e(Rational(1));
    for (const auto& w : tangent_weights(mu)) e *= w;
    return RatFunc(e);
}

// All fixed-point classes at degree d, keyed by partition. Constructed by
// Gram-Schmidt against the inner product, seeded by the monomial-basis
// vectors under the identification |mu> ~ t1^{-l(mu)} p_mu / z(mu), processed
// along a linear extension of dominance, labeled by the conjugate partition,
// and scaled so every class has coefficient d! (t1 t2)^d on the fully-split
// state (the restriction of the unit class). Each class's self-pairing is
// checked against the tangent Euler class before being returned.
inline std::map<Partition, FockVec> fixed_point_classes(int d) {
    static std::map<int, std::map<Partition, FockVec>> memo;
    static std::mutex memo_mutex;
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto hit = memo.find(d);
    if (hit != memo.end()) return hit->second;

    RatFunc t1 = RatFunc::var(1), t2 = RatFunc::var(2);
    Partition ones(std::vector<int>(d, 1));
    auto mono = monomial_in_powersums(d);

    std::vector<Partition> order = partitions_of(d);
    std::sort(order.begin(), order.end(), dominance_lex_less);

    std::map<Partition, FockVec> built; // keyed by the m-basis label
    std::vector<Partition> done;
    for (const auto& la : order) {
        // seed: m_la rewritten through p-basis, pulled back to Fock states
        FockVec w;
        for (const auto& [mu, c] : mono[la])
            fock_add(w, mu,
                     RatFunc(c) * RatFunc(Rational(z_factor(mu))) * t1.pow(mu.length()));
        for (const auto& ka : done) {
            const FockVec& prev = built[ka];
            RatFunc proj = fock_pairing(w, prev) / fock_pairing(prev, prev);
            w = fock_sum(w, fock_scale(prev, -proj));
        }
        built[la] = std::move(w);
        done.push_back(la);
    }

    std::map<Partition, FockVec> out;
    for (auto& [la, w] : built) {
        Partition mu = la.conjugate(); // geometric label
        auto it = w.find(ones);
        if (it == w.end())
            throw error("fixed_point_classes: vanishing unit-restriction coefficient");
        Rational dfact(1);
        for (int i = 2; i <= d; ++i) dfact *= i;
        FockVec cls = fock_scale(w, RatFunc(dfact) * (t1 * t2).pow(d) / it->second);
        RatFunc self = fock_pairing(cls, cls);
        if (self != euler_tangent(mu))
            throw error("fixed_point_classes: self-pairing disagrees with tangent weights");
        out[mu] = std::move(cls);
    }
    memo[d] = out;
    return out;
}

} // namespace dt
