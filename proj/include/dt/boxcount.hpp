#pragma once

// Brute-force enumeration of 3d partitions with one infinite leg, used as the
// combinatorial oracle for the Calabi-Yau vertex restriction.
//
// A 3d partition asymptotic to the profile la along its leg is stored as the
// finite chain of slices perpendicular to the leg axis,
//
//   slice_0 >= slice_1 >= ... >= slice_{m-1} > la,   slice_k >= la for all k,
//
// trimmed at the point where the slices stabilize to la (so the stored chain
// is exactly the part with slice != la; an empty chain is the bare cylinder).
// Downward closure along the leg is the chain condition; downward closure in
// the two transverse axes is each slice being a partition. The renormalized
// volume is sum_k (|slice_k| - |la|), which is finite and nonnegative.

#include "partition.hpp"
#include "qseries.hpp"

#include <vector>

namespace dt {

struct PlanePartition {
    Partition profile;
    std::vector<Partition> slices; // trimmed: every stored slice strictly contains profile

    int volume() const { // renormalized
        int v = 0;
        for (const auto& s : slices) v += s.size() - profile.size();
        return v;
    }
};

// order of vanishing at the anti-diagonal torus of the localization weight of
// this fixed point: the total rim-hook rank along the slice chain
inline int ord_van(const PlanePartition& pi) {
    int total = 0;
    for (size_t k = 0; k + 1 < pi.slices.size(); ++k)
        total += skew_rank(pi.slices[k], pi.slices[k + 1]);
    if (!pi.slices.empty()) total += skew_rank(pi.slices.back(), pi.profile);
    return total;
}

namespace detail {

// all partitions nu with inner <= nu and |nu| - |inner| <= extra, grouped by
// excess size; optionally bounded above by *outer
inline std::vector<Partition> partitions_over(const Partition& inner, int extra,
                                              const Partition* outer) {
    std::vector<Partition> out;
    for (int n = inner.size(); n <= inner.size() + extra; ++n)
        for (const auto& nu : partitions_of(n)) {
            if (!contains(nu, inner)) continue;
            if (outer && !contains(*outer, nu)) continue;
            out.push_back(nu);
        }
    return out;
}

} // namespace detail

// every 3d partition with the given profile and renormalized volume <= vmax
inline std::vector<PlanePartition> enumerate_box_configs(const Partition& profile,
                                                         int vmax) {
    std::vector<PlanePartition> out;
    std::vector<Partition> chain;

    auto rec = [&](auto&& self, const Partition& prev, int budget) -> void {
        // close the chain here (all further slices equal the profile)
        out.push_back(PlanePartition{profile, chain});
        for (const auto& nu : detail::partitions_over(profile, budget, &prev)) {
            int cost = nu.size() - profile.size();
            if (cost == 0) continue; // equal to the profile: chain is closed
            chain.push_back(nu);
            self(self, nu, budget - cost);
            chain.pop_back();
        }
    };

    // first slice is unbounded above
    for (const auto& nu : detail::partitions_over(profile, vmax, nullptr)) {
        int cost = nu.size() - profile.size();
        if (cost == 0) continue;
        chain.push_back(nu);
        rec(rec, nu, vmax - cost);
        chain.pop_back();
    }
    out.push_back(PlanePartition{profile, {}});
    return out;
}

// counts by renormalized volume 0..vmax
inline std::vector<long> box_counts(const Partition& profile, int vmax) {
    std::vector<long> counts(static_cast<size_t>(vmax) + 1, 0);
    for (const auto& pi : enumerate_box_configs(profile, vmax))
        ++counts[static_cast<size_t>(pi.volume())];
    return counts;
}

// the Calabi-Yau restriction of the one-leg vertex: sum over box
// configurations of (-q)^{volume}
inline QSeries<Rational> cy_vertex(const Partition& profile, long trunc) {
    auto counts = box_counts(profile, static_cast<int>(trunc));
    QSeries<Rational> f(trunc);
    for (long v = 0; v <= trunc; ++v) {
        Rational c((v % 2 == 0) ? counts[static_cast<size_t>(v)]
                                : -counts[static_cast<size_t>(v)]);
        f.set_coeff(v, c);
    }
    return f;
}

// the reduced form: cy_vertex divided by the degree-zero series (the
// sign-twisted MacMahon function)
inline QSeries<Rational> cy_vertex_reduced(const Partition& profile, long trunc) {
    return cy_vertex(profile, trunc) * macmahon(trunc).flip_sign().inv();
}

// hook-length closed form of the reduced Calabi-Yau vertex:
// prod over cells of 1/(1 - (-q)^hook)
inline QSeries<Rational> cy_vertex_hooks(const Partition& profile, long trunc) {
    QSeries<Rational> f = QSeries<Rational>::one(trunc);
    for (auto [i, j] : profile.cells())
        f *= (QSeries<Rational>::one(trunc) -
              QSeries<Rational>::neg_q_pow(profile.hook(i, j), trunc))
                 .inv();
    return f;
}

} // namespace dt
