#pragma once

// Symmetric-function data used by the geometry: symmetric-group characters
// (Murnaghan-Nakayama, memoized), principal specializations of Schur and
// power-sum functions, hook products, and the monomial <-> power-sum change
// of basis in a fixed number of variables.

#include "linalg.hpp"
#include "partition.hpp"
#include "qseries.hpp"

#include <map>
#include <mutex>
#include <utility>

namespace dt {

// chi^la_mu via border-strip removal on beta numbers: la is encoded as the
// strictly decreasing sequence b_i = la_i + (l-1-i); removing a strip of size
// k means replacing some b_i by b_i - k (must stay fresh and nonnegative),
// with sign (-1)^(number of b_j jumped over).
inline Integer mn_character(const Partition& la, const Partition& mu) {
    if (la.size() != mu.size()) throw error("mn_character: sizes differ");
    using Key = std::pair<std::vector<int>, std::vector<int>>;
    static std::map<Key, Integer> memo;
    static std::mutex memo_mutex;
    std::lock_guard<std::mutex> lock(memo_mutex);

    std::function<Integer(const std::vector<int>&, const std::vector<int>&)> rec =
        [&](const std::vector<int>& lam, const std::vector<int>& rest) -> Integer {
        if (rest.empty()) return 1;
        Key key{lam, rest};
        auto hit = memo.find(key);
        if (hit != memo.end()) return hit->second;

        const int k = rest.front();
        const std::vector<int> tail(rest.begin() + 1, rest.end());
        const int l = static_cast<int>(lam.size());
        std::vector<int> beta(l);
        for (int i = 0; i < l; ++i) beta[i] = lam[i] + (l - 1 - i);

        Integer acc(0);
        for (int i = 0; i < l; ++i) {
            int c = beta[i] - k;
            if (c < 0) continue;
            bool clash = false;
            int jumped = 0;
            for (int j = 0; j < l; ++j) {
                if (j == i) continue;
                if (beta[j] == c) clash = true;
                if (beta[j] > c && beta[j] < beta[i]) ++jumped;
            }
            if (clash) continue;
            std::vector<int> nb = beta;
            nb[i] = c;
            std::sort(nb.rbegin(), nb.rend());
            std::vector<int> nl(l);
            for (int j = 0; j < l; ++j) nl[j] = nb[j] - (l - 1 - j);
            while (!nl.empty() && nl.back() == 0) nl.pop_back();
            Integer sub = rec(nl, tail);
            acc += (jumped % 2 == 0) ? sub : -sub;
        }
        memo[key] = acc;
        return acc;
    };
    return rec(la.parts(), mu.parts());
}

// s_mu = sum_la chi^mu_la p_la / z(la)
inline std::map<Partition, Rational> schur_in_powersums(const Partition& mu) {
    std::map<Partition, Rational> out;
    for (const auto& la : partitions_of(mu.size())) {
        Integer chi = mn_character(mu, la);
        if (chi != 0) out[la] = Rational(chi, z_factor(la));
    }
    return out;
}

inline Integer hook_product(const Partition& la) {
    Integer h(1);
    for (auto [i, j] : la.cells()) h *= la.hook(i, j);
    return h;
}

// s_la(1, q, q^2, ...) = q^{n(la)} / prod_cells (1 - q^{hook})
inline QSeries<Rational> schur_principal(const Partition& la, long trunc) {
    QSeries<Rational> denom = QSeries<Rational>::one(trunc);
    for (auto [i, j] : la.cells()) {
        long h = la.hook(i, j);
        denom *= QSeries<Rational>::one(trunc) - QSeries<Rational>::q_pow(h, trunc);
    }
    return denom.inv().shifted(la.weighted_size()).truncated(trunc);
}

// p_k(1, -q, (-q)^2, ...) = 1 / (1 - (-q)^k)
inline QSeries<Rational> powersum_neg_principal(int k, long trunc) {
    return (QSeries<Rational>::one(trunc) - QSeries<Rational>::neg_q_pow(k, trunc)).inv();
}

inline QSeries<Rational> powersum_neg_principal(const Partition& mu, long trunc) {
    QSeries<Rational> f = QSeries<Rational>::one(trunc);
    for (int k : mu.parts()) f *= powersum_neg_principal(k, trunc);
    return f;
}

// Expansion coefficients of p_mu in the monomial basis, computed by brute
// expansion in d = |mu| variables (exact, and cheap at the sizes we use):
// returns R with p_mu = sum_la R[mu][la] m_la.
inline std::map<Partition, std::map<Partition, Rational>> powersum_in_monomials(int d) {
    auto parts = partitions_of(d);
    std::map<Partition, std::map<Partition, Rational>> R;
    for (const auto& mu : parts) {
        // expand prod_i (x_1^{mu_i} + ... + x_d^{mu_i})
        std::map<std::vector<int>, Integer> expansion;
        expansion[std::vector<int>(d, 0)] = 1;
        for (int k : mu.parts()) {
            std::map<std::vector<int>, Integer> next;
            for (const auto& [ev, c] : expansion)
                for (int i = 0; i < d; ++i) {
                    std::vector<int> e2 = ev;
                    e2[i] += k;
                    next[e2] += c;
                }
            expansion = std::move(next);
        }
        for (const auto& la : parts) {
            std::vector<int> key = la.parts();
            key.resize(d, 0);
            auto it = expansion.find(key);
            if (it != expansion.end()) R[mu][la] = Rational(it->second);
        }
    }
    return R;
}

// m_la = sum_mu C[la][mu] p_mu (inverse of the above, over Q)
inline std::map<Partition, std::map<Partition, Rational>> monomial_in_powersums(int d) {
    auto parts = partitions_of(d);
    auto R = powersum_in_monomials(d);
    const size_t n = parts.size();
    Matrix<Rational> M(n, std::vector<Rational>(n, Rational(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            auto it = R[parts[i]].find(parts[j]);
            if (it != R[parts[i]].end()) M[i][j] = it->second;
        }
    // p = M m as basis column vectors, hence m = M^{-1} p
    Matrix<Rational> inv = mat_inverse(M, Rational(1));
    std::map<Partition, std::map<Partition, Rational>> C;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (inv[i][j] != 0) C[parts[i]][parts[j]] = inv[i][j];
    return C;
}

} // namespace dt
