#pragma once

/**
 * Interval models of the associahedron and cyclohedron face posets:
 *
 *  - P(n): proper subintervals [i,j] of [1, n-1]; I(n): pairwise-compatible
 *    subsets (compatible = nested, or union not an interval).
 *  - PC(n): cyclic subintervals of [1,n] — normal [i,j] or wrap i][j meaning
 *    {1..i} ∪ {j..n}; the full interval [1,n] and the degenerate wraps
 *    i][i+1 are excluded. IC(n): subsets whose members pairwise fit together
 *    (nested, or union not a cyclic interval).
 *
 * Note on IC(n): two members may also be disjoint with non-adjacent
 * supports (e.g. {[1,1],[3,3],[1,3]} ⊂ PC(4), matching the cyclohedron
 * vertex ((12)(34))); pure pairwise nesting would undercount the faces.
 */

#include <algorithm>
#include <cassert>
#include <compare>
#include <vector>

#include "poset.hpp"

namespace hedra {

// ---------------------------------------------------------------- linear side

struct Interval {
    int lo = 0, hi = 0;  // [lo, hi] inside [1, n-1]

    bool operator==(const Interval&) const = default;
    auto operator<=>(const Interval&) const = default;

    int size() const { return hi - lo + 1; }
    bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
};

/** All proper subintervals of [1, n-1]. */
inline std::vector<Interval> proper_intervals(int n) {
    std::vector<Interval> out;
    for (int i = 1; i <= n - 1; ++i)
        for (int j = i; j <= n - 1; ++j)
            if (!(i == 1 && j == n - 1)) out.push_back({i, j});
    return out;
}

/** Compatible: I∪J is not an interval properly containing both I and J. */
inline bool compatible(const Interval& a, const Interval& b) {
    if (a.contains(b) || b.contains(a)) return true;
    // union of the two supports is an interval iff they overlap or are adjacent
    bool union_is_interval = (b.lo <= a.hi + 1) && (a.lo <= b.hi + 1);
    return !union_is_interval;
}

// ---------------------------------------------------------------- cyclic side

struct CInterval {
    bool wrap = false;
    int i = 0, j = 0;  // normal: [i,j]; wrap: {1..i} ∪ {j..n}

    bool operator==(const CInterval&) const = default;
    auto operator<=>(const CInterval&) const = default;

    std::vector<int> members(int n) const {
        std::vector<int> m;
        if (!wrap) {
            for (int k = i; k <= j; ++k) m.push_back(k);
        } else {
            for (int k = 1; k <= i; ++k) m.push_back(k);
            for (int k = j; k <= n; ++k) m.push_back(k);
        }
        return m;
    }

    int size(int n) const { return wrap ? i + (n - j + 1) : (j - i + 1); }

    bool subset_of(const CInterval& o, int n) const {
        auto a = members(n), b = o.members(n);
        return std::includes(b.begin(), b.end(), a.begin(), a.end());
    }
};

/** All cyclic subintervals of [1,n] (excluding [1,n] and i][i+1). */
inline std::vector<CInterval> cyclic_intervals(int n) {
    std::vector<CInterval> out;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j)
            if (!(i == 1 && j == n)) out.push_back({false, i, j});
    for (int i = 1; i < n; ++i)
        for (int j = i + 2; j <= n; ++j) out.push_back({true, i, j});
    return out;
}

/** Is the subset (bitmask over letters 1..n) a nonempty cyclic arc? */
inline bool is_cyclic_arc(unsigned mask, int n) {
    if (mask == 0) return false;
    unsigned full = (n == 32) ? ~0u : ((1u << n) - 1);
    if (mask == full) return true;
    // rotate so that a gap sits at the top, then test contiguity
    int r = 0;
    while ((mask >> ((2 * n - 1 - r) % n)) & 1u) ++r;  // top bit after +r rotation
    unsigned rot = 0;
    for (int k = 0; k < n; ++k)
        if ((mask >> k) & 1u) rot |= 1u << ((k + r) % n);
    // contiguity: rot+lowbit is a power of two times ...
    unsigned low = rot & (~rot + 1);
    return ((rot + low) & rot) == 0;
}

/**
 * Cyclic compatibility: nested, or the union of supports is not a cyclic
 * interval (the full circle counts as one).
 */
inline bool cyclic_compatible(const CInterval& a, const CInterval& b, int n) {
    if (a.subset_of(b, n) || b.subset_of(a, n)) return true;
    unsigned mask = 0;
    for (int k : a.members(n)) mask |= 1u << (k - 1);
    for (int k : b.members(n)) mask |= 1u << (k - 1);
    return !is_cyclic_arc(mask, n);
}

// ------------------------------------------------------- families and posets

/** All subsets of `items` whose pairs satisfy `ok`; returned as index sets. */
template <class T, class F>
std::vector<std::vector<int>> pairwise_families(const std::vector<T>& items, F ok) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int next) -> void {
        out.push_back(cur);
        for (int k = next; k < static_cast<int>(items.size()); ++k) {
            bool good = true;
            for (int c : cur)
                if (!ok(items[c], items[k])) { good = false; break; }
            if (good) {
                cur.push_back(k);
                self(self, k + 1);
                cur.pop_back();
            }
        }
    };
    rec(rec, 0);
    return out;
}

/** I(n): pairwise-compatible subsets of P(n), ordered by inclusion. */
inline std::vector<std::vector<Interval>> enumerate_I(int n) {
    auto p = proper_intervals(n);
    std::vector<std::vector<Interval>> out;
    for (const auto& idx : pairwise_families(p, [](const Interval& a, const Interval& b) {
             return compatible(a, b);
         })) {
        std::vector<Interval> fam;
        for (int k : idx) fam.push_back(p[k]);
        out.push_back(fam);
    }
    return out;
}

/** IC(n): pairwise cyclically-compatible subsets of PC(n). */
inline std::vector<std::vector<CInterval>> enumerate_IC(int n) {
    auto p = cyclic_intervals(n);
    std::vector<std::vector<CInterval>> out;
    for (const auto& idx :
         pairwise_families(p, [n](const CInterval& a, const CInterval& b) {
             return cyclic_compatible(a, b, n);
         })) {
        std::vector<CInterval> fam;
        for (int k : idx) fam.push_back(p[k]);
        out.push_back(fam);
    }
    return out;
}

/** Poset ordered by reverse inclusion of families (more members = smaller). */
template <class T>
Poset family_poset(const std::vector<std::vector<T>>& fams) {
    Poset p(fams.size());
    for (size_t a = 0; a < fams.size(); ++a)
        for (size_t b = 0; b < fams.size(); ++b)
            p.leq[a][b] = std::includes(fams[a].begin(), fams[a].end(),
                                        fams[b].begin(), fams[b].end());
    return p;
}

}  // namespace hedra
