#pragma once

// Integer partitions and their combinatorial statistics. Parts are kept
// weakly decreasing and positive; the empty partition is allowed everywhere.

#include "rational.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>
#include <vector>

namespace dt {

class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : parts_(parts) { validate(); }
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) { validate(); }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const {
        int s = 0;
        for (int p : parts_) s += p;
        return s;
    }
    bool empty() const { return parts_.empty(); }
    int part(int i) const { // 0-based, 0 beyond the tail
        return i < length() ? parts_[i] : 0;
    }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return !(*this == o); }
    // canonical total order: by size, then lex descending (so (d) precedes
    // (d-1,1) precedes ... precedes (1^d) among partitions of d)
    bool operator<(const Partition& o) const {
        int sa = size(), sb = o.size();
        if (sa != sb) return sa < sb;
        return parts_ > o.parts_;
    }

    Partition conjugate() const {
        std::vector<int> c;
        for (int j = 0; j < part(0); ++j) {
            int col = 0;
            for (int p : parts_)
                if (p > j) ++col;
            c.push_back(col);
        }
        return Partition(std::move(c));
    }

    // multiplicity of each part value
    std::map<int, int> multiplicities() const {
        std::map<int, int> m;
        for (int p : parts_) ++m[p];
        return m;
    }

    // all cells (row i, col j), 0-based, row i holding parts_[i] cells
    std::vector<std::pair<int, int>> cells() const {
        std::vector<std::pair<int, int>> cs;
        for (int i = 0; i < length(); ++i)
            for (int j = 0; j < parts_[i]; ++j) cs.emplace_back(i, j);
        return cs;
    }

    int arm(int i, int j) const { return part(i) - j - 1; }
    int leg(int i, int j) const {
        int l = 0;
        for (int r = i + 1; r < length(); ++r)
            if (parts_[r] > j) ++l;
        return l;
    }
    int hook(int i, int j) const { return arm(i, j) + leg(i, j) + 1; }
    int content(int i, int j) const { return j - i; }

    // n(lambda) = sum_i (i-1) lambda_i (0-based: sum i * lambda_{i})
    int weighted_size() const {
        int n = 0;
        for (int i = 0; i < length(); ++i) n += i * parts_[i];
        return n;
    }

    // partition with one part removed (first occurrence of value v)
    Partition remove_part(int v) const {
        std::vector<int> p = parts_;
        auto it = std::find(p.begin(), p.end(), v);
        if (it == p.end()) throw error("Partition::remove_part: no such part");
        p.erase(it);
        return Partition(std::move(p));
    }

    Partition add_part(int v) const {
        std::vector<int> p = parts_;
        p.insert(std::upper_bound(p.begin(), p.end(), v, std::greater<int>()), v);
        return Partition(std::move(p));
    }

    std::string str() const {
        std::ostringstream os;
        os << "(";
        for (int i = 0; i < length(); ++i) {
            if (i) os << ",";
            os << parts_[i];
        }
        os << ")";
        return os.str();
    }

private:
    void validate() const {
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0) throw error("Partition: parts must be positive");
            if (i && parts_[i] > parts_[i - 1])
                throw error("Partition: parts must be weakly decreasing");
        }
    }

    std::vector<int> parts_;
};

// z(lambda) = prod_k k^{m_k} m_k!  (order of the centralizer of a permutation
// of cycle type lambda)
inline Integer z_factor(const Partition& la) {
    Integer z(1);
    for (const auto& [k, m] : la.multiplicities()) {
        for (int i = 0; i < m; ++i) z *= k;
        for (int i = 2; i <= m; ++i) z *= i;
    }
    return z;
}

// all partitions of d, in the canonical order ((d) first, (1^d) last)
inline std::vector<Partition> partitions_of(int d) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rem, int maxp) -> void {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rem, maxp); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    rec(rec, d, d);
    return out;
}

// linear extension of dominance: compare partial sums lexicographically.
// Sorting with this puts (1^d) first and (d) last, and never places mu before
// nu when mu strictly dominates nu.
inline bool dominance_lex_less(const Partition& a, const Partition& b) {
    int n = std::max(a.length(), b.length());
    int sa = 0, sb = 0;
    for (int i = 0; i < n; ++i) {
        sa += a.part(i);
        sb += b.part(i);
        if (sa != sb) return sa < sb;
    }
    return false;
}

// true if every row of inner fits inside outer
inline bool contains(const Partition& outer, const Partition& inner) {
    for (int i = 0; i < inner.length(); ++i)
        if (inner.part(i) > outer.part(i)) return false;
    return true;
}

// Rank of the skew diagram outer/inner: the minimal number of rim hooks
// (connected skew diagrams with pairwise distinct contents) needed to build
// outer from inner. Counted here through contents: with a_k the number of
// skew cells of content k, the rank is (1/2) sum_k |a_k - a_{k+1}|, each
// summand being 0 or 1 (a hook contributes at its two ends).
inline int skew_rank(const Partition& outer, const Partition& inner) {
    if (!contains(outer, inner)) throw error("skew_rank: inner not contained");
    std::map<int, int> a;
    for (int i = 0; i < outer.length(); ++i)
        for (int j = inner.part(i); j < outer.parts()[i]; ++j) ++a[j - i];
    if (a.empty()) return 0;
    int lo = a.begin()->first, hi = a.rbegin()->first;
    int total = 0;
    auto at = [&](int k) {
        auto it = a.find(k);
        return it == a.end() ? 0 : it->second;
    };
    for (int k = lo - 1; k <= hi; ++k) total += std::abs(at(k) - at(k + 1));
    if (total % 2) throw error("skew_rank: odd boundary sum");
    return total / 2;
}

// Same rank by direct peeling: each pass removes the outer rim of the skew
// diagram (the cells (i,j) of outer/inner with (i+1,j+1) outside outer).
// The rim meets each diagonal at most once, so each of its edge-connected
// components is a rim hook, and removing the whole rim leaves a partition
// still containing inner. Intended as an independent cross-check of
// skew_rank on small shapes; works on explicit cell sets.
inline int skew_rank_peel(const Partition& outer, const Partition& inner) {
    if (!contains(outer, inner)) throw error("skew_rank_peel: inner not contained");
    Partition cur = outer;
    int rank = 0;
    while (!(cur == inner)) {
        std::vector<std::pair<int, int>> rim;
        for (int i = 0; i < cur.length(); ++i)
            for (int j = inner.part(i); j < cur.parts()[i]; ++j)
                if (cur.part(i + 1) <= j + 1) rim.emplace_back(i, j);
        if (rim.empty()) throw error("skew_rank_peel: stuck"); // unreachable
        // count edge-connected components of the rim cell set
        std::vector<int> comp(rim.size(), -1);
        auto find_cell = [&](int i, int j) -> int {
            for (size_t k = 0; k < rim.size(); ++k)
                if (rim[k] == std::make_pair(i, j)) return static_cast<int>(k);
            return -1;
        };
        int components = 0;
        for (size_t seed = 0; seed < rim.size(); ++seed) {
            if (comp[seed] >= 0) continue;
            ++components;
            std::vector<size_t> stack{seed};
            comp[seed] = components;
            const std::pair<int, int> steps[4] = {{0, 1}, {0, -1}, {1, 0}, {-1, 0}};
            while (!stack.empty()) {
                auto [i, j] = rim[stack.back()];
                stack.pop_back();
                for (auto [di, dj] : steps) {
                    int k = find_cell(i + di, j + dj);
                    if (k >= 0 && comp[k] < 0) {
                        comp[k] = components;
                        stack.push_back(static_cast<size_t>(k));
                    }
                }
            }
        }
        rank += components;
        std::vector<int> next(cur.parts());
        for (const auto& [i, j] : rim) next[i] = std::min(next[i], j);
        while (!next.empty() && next.back() == 0) next.pop_back();
        cur = Partition(std::move(next));
    }
    return rank;
}

} // namespace dt
