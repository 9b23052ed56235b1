#pragma once

// Homogeneous decomposition of rational functions with respect to a subset of
// the variables. Scaling the selected variables by xi turns f = N/D into a
// univariate problem: N and D split into xi-graded parts, and f decomposes
// into finitely many homogeneous pieces exactly when D divides N as a Laurent
// polynomial in xi (coefficients in the rational-function field of the
// remaining mixed terms). The division is performed from the bottom degree up
// and must terminate with remainder zero, otherwise the function simply is not
// a finite sum of homogeneous components and we refuse loudly.

#include "ratfunc.hpp"

#include <map>

namespace dt {

using VarSel = std::array<bool, kNumVars>;

inline constexpr VarSel kSelT = {false, true, true};  // grade by (t1, t2)
inline constexpr VarSel kSelAll = {true, true, true}; // grade by (s, t1, t2)

// decompose f = sum_d f_d with f_d homogeneous of degree d in the selected
// variables; throws if no finite decomposition exists
inline std::map<int, RatFunc> homogeneous_components(const RatFunc& f, const VarSel& sel) {
    std::map<int, RatFunc> out;
    if (f.is_zero()) return out;

    auto N = f.num().graded_parts(sel);
    auto D = f.den().graded_parts(sel);
    const int dmin = D.begin()->first;
    const RatFunc dlow(D.begin()->second);

    // exact division N / D in the grading variable, lowest degree first; the
    // running remainder lives in the fraction field
    std::map<int, RatFunc> R;
    for (const auto& [a, p] : N) R.emplace(a, RatFunc(p));
    const int qmax_bound = N.rbegin()->first - dmin;
    while (!R.empty()) {
        int a = R.begin()->first;
        int c = a - dmin;
        if (c > qmax_bound)
            throw error("homogeneous_components: not a finite sum of homogeneous parts");
        RatFunc qc = R.begin()->second / dlow;
        out[c] = qc;
        R.erase(R.begin());
        for (auto itD = std::next(D.begin()); itD != D.end(); ++itD) {
            RatFunc upd = (R.count(c + itD->first) ? R[c + itD->first] : RatFunc()) -
                          qc * RatFunc(itD->second);
            if (upd.is_zero())
                R.erase(c + itD->first);
            else
                R[c + itD->first] = upd;
        }
    }
    return out;
}

// single component (0 if absent) and a homogeneity test
inline RatFunc homogeneous_component(const RatFunc& f, const VarSel& sel, int deg) {
    auto parts = homogeneous_components(f, sel);
    auto it = parts.find(deg);
    return it == parts.end() ? RatFunc() : it->second;
}

inline bool is_homogeneous(const RatFunc& f, const VarSel& sel, int* deg = nullptr) {
    if (f.is_zero()) {
        if (deg) *deg = 0;
        return true;
    }
    int dn = 0, dd = 0;
    if (!f.num().is_homogeneous(sel, &dn) || !f.den().is_homogeneous(sel, &dd)) return false;
    if (deg) *deg = dn - dd;
    return true;
}

} // namespace dt
