#pragma once

// Rubber-side series. Three pieces:
//
//   * operator_S   — the fundamental solution of the divisor quantum
//                    differential equation q dS/dq = M S - S M(0), normalized
//                    to S(0) = Id on each fixed-degree component;
//   * rubber_bracket — the psi-resolvent pairing between two boundary
//                    vectors, M(-q)^{-(t1+t2)} times the bilinear extension
//                    of the S matrix elements;
//   * z_dilate     — the regrading that converts a 1/(1-psi) series into the
//                    1/(z-psi) series the vertex solver consumes, using the
//                    (t1,t2)-homogeneity ladder to separate psi powers.

#include "fock.hpp"
#include "homog.hpp"
#include "linalg.hpp"

namespace dt {

// M(-q)^E for a rational-function exponent E
inline QSeries<RatFunc> macmahon_neg_pow(const RatFunc& E, long T) {
    return series_pow_exponent(detail::to_ratfunc_series(macmahon(T).flip_sign()), E);
}

// Fundamental solution of q dS/dq = M S - S M(0) with S(0) = Id, where M is
// quantum multiplication by the divisor in degree B.d. Solved order by order:
// the q^n layer satisfies (n Id - ad_{M(0)}) S_n = sum_{k=1}^{n} M_k S_{n-k},
// treated as one flat linear system over the coefficient field. M(0) is not
// diagonalized: it has repeated eigenvalues on the anti-diagonal and distinct
// basis labels can share total content, so an eigenbasis would be unsafe.
inline OpSeries operator_S(const FockBasis& B, long T) {
    const size_t P = B.dim();
    const OpSeries M = quantum_mult_divisor(B, T);
    const OpConst M0 = op_constant_term(M);

    std::vector<OpConst> layer(T + 1, OpConst(P, std::vector<RatFunc>(P)));
    for (size_t i = 0; i < P; ++i) layer[0][i][i] = RatFunc(Rational(1));

    for (long n = 1; n <= T; ++n) {
        OpConst rhs(P, std::vector<RatFunc>(P));
        for (long k = 1; k <= n; ++k)
            for (size_t i = 0; i < P; ++i)
                for (size_t l = 0; l < P; ++l) {
                    RatFunc m = M[i][l].coeff(k);
                    if (m.is_zero()) continue;
                    for (size_t j = 0; j < P; ++j)
                        rhs[i][j] = rhs[i][j] + m * layer[n - k][l][j];
                }
        // flatten (n Id - ad_{M(0)}) X = rhs over the P^2 entries of X
        Matrix<RatFunc> A(P * P, std::vector<RatFunc>(P * P));
        std::vector<RatFunc> b(P * P);
        const RatFunc nn((Rational(n)));
        for (size_t i = 0; i < P; ++i)
            for (size_t j = 0; j < P; ++j) {
                const size_t row = i * P + j;
                b[row] = rhs[i][j];
                A[row][row] = A[row][row] + nn;
                for (size_t k = 0; k < P; ++k) {
                    A[row][k * P + j] = A[row][k * P + j] - M0[i][k];
                    A[row][i * P + k] = A[row][i * P + k] + M0[k][j];
                }
            }
        std::vector<RatFunc> x = solve_linear(A, b); // throws if a layer map is singular
        for (size_t i = 0; i < P; ++i)
            for (size_t j = 0; j < P; ++j) layer[n][i][j] = std::move(x[i * P + j]);
    }

    OpSeries S(P, std::vector<QSeries<RatFunc>>(P, QSeries<RatFunc>(T)));
    for (size_t i = 0; i < P; ++i)
        for (size_t j = 0; j < P; ++j)
            for (long n = 0; n <= T; ++n)
                if (!layer[n][i][j].is_zero()) S[i][j].set_coeff(n, layer[n][i][j]);
    return S;
}

// common degree of a Fock vector's support; -1 for the zero vector, throws on
// mixed degrees
inline int fock_degree(const FockVec& v) {
    int d = -1;
    for (const auto& [mu, c] : v) {
        if (c.is_zero()) continue;
        if (d < 0)
            d = mu.size();
        else if (mu.size() != d)
            throw error("fock_degree: mixed degrees");
    }
    return d;
}

// The psi-resolvent bracket with both boundaries in degree B.d, divided by
// q^d: the sign-twisted MacMahon factor to the power -(t1+t2), times the
// S matrix element extended bilinearly to the boundary vectors. The q^0
// coefficient is the plain pairing of the boundaries.
inline QSeries<RatFunc> rubber_bracket(const FockBasis& B, const OpSeries& S,
                                       const FockVec& A, const FockVec& Bv, long T) {
    QSeries<RatFunc> acc(T);
    for (const auto& [mu, ca] : A) {
        const RatFunc weight_row = ca * fock_self_pairing(mu);
        for (const auto& [nu, cb] : Bv) {
            const QSeries<RatFunc>& s = S[B.at(mu)][B.at(nu)];
            if (s.is_zero()) continue;
            acc += s.truncated(std::min(T, s.trunc())) * (weight_row * cb);
        }
    }
    return macmahon_neg_pow(-(RatFunc::var(1) + RatFunc::var(2)), T) * acc;
}

inline QSeries<RatFunc> rubber_bracket(const FockVec& A, const FockVec& Bv, long T) {
    int da = fock_degree(A), db = fock_degree(Bv);
    if (da < 0 || db < 0) return QSeries<RatFunc>(T);
    if (da != db) throw error("rubber_bracket: boundary degrees differ");
    FockBasis B(da);
    return rubber_bracket(B, operator_S(B, T), A, Bv, T);
}

// Regrade a 1/(1-psi) series into the matching 1/(z-psi) series. Each
// q-coefficient splits into (t1,t2)-homogeneous components; the component of
// degree base_degree + b is the psi^b residue and picks up z^{-1-b}. A
// component below the base degree means the claimed base is wrong, and the
// input is rejected.
inline QSeries<RatFunc> z_dilate(const QSeries<RatFunc>& r, int base_degree,
                                 const RatFunc& z) {
    QSeries<RatFunc> out(r.trunc());
    const RatFunc zinv = z.inv();
    for (long n = r.valuation(); n <= r.trunc(); ++n) {
        const RatFunc c = r.coeff(n);
        if (c.is_zero()) continue;
        RatFunc acc;
        for (const auto& [deg, comp] : homogeneous_components(c, kSelT)) {
            int b = deg - base_degree;
            if (b < 0) throw error("z_dilate: component below the base degree");
            acc = acc + comp * zinv.pow(b + 1);
        }
        out.set_coeff(n, acc);
    }
    return out;
}

} // namespace dt
