#pragma once

/**
 * Bracketings of the word 1..n (faces of the associahedron K_n) and cyclic
 * bracketings of the cyclic word 1..n (faces of the cyclohedron W_n).
 *
 * A bracketing is stored as a planar tree over n ordered leaves; the bracket
 * pairs are the non-root internal vertices (so the top face, with no
 * brackets, is the corolla). The order b' < b'' holds iff b'' is obtained
 * from b' by deleting bracket pairs.
 *
 * A cyclic bracketing is stored as its canonical symbol: a set of "arcs"
 * (start letter, length) on the circle of letters 1..n, 2 <= length <= n;
 * an arc of length n is an all-embracing bracket and carries its cut
 * position (so (1234) and 1)(234 are different faces of W_4). Arcs must be
 * pairwise non-crossing as parenthesis pairs of the cyclic word.
 */

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "intervals.hpp"
#include "poset.hpp"
#include "trees.hpp"

namespace hedra {

// ------------------------------------------------------------- linear case

using Bracketing = PTree;

/** Letter spans [a,b] (1-based, inclusive) of the non-root vertices. */
inline std::vector<std::pair<int, int>> bracket_spans(const Bracketing& b) {
    std::vector<std::pair<int, int>> out;
    int pos = 0;
    auto rec = [&](auto&& self, const PTree& t, bool root) -> std::pair<int, int> {
        if (t.is_leaf()) {
            ++pos;
            return {pos, pos};
        }
        int lo = pos + 1, hi = lo;
        for (const auto& c : t.ch) hi = self(self, c, false).second;
        if (!root) out.emplace_back(lo, hi);
        return {lo, hi};
    };
    rec(rec, b, true);
    std::sort(out.begin(), out.end());
    return out;
}

/** Rebuild the tree from a nested family of letter spans over 1..n. */
inline Bracketing bracketing_from_spans(int n,
                                        std::vector<std::pair<int, int>> spans) {
    // sort outer-first: by (lo asc, hi desc)
    std::sort(spans.begin(), spans.end(), [](const auto& a, const auto& b) {
        return a.first != b.first ? a.first < b.first : a.second > b.second;
    });
    auto build = [&](auto&& self, int lo, int hi, size_t& idx) -> std::vector<PTree> {
        std::vector<PTree> kids;
        int at = lo;
        while (at <= hi) {
            if (idx < spans.size() && spans[idx].first == at && spans[idx].second <= hi) {
                auto [a, b] = spans[idx++];
                PTree v;
                v.ch = self(self, a, b, idx);
                kids.push_back(v);
                at = b + 1;
            } else {
                kids.push_back(leaf());
                ++at;
            }
        }
        return kids;
    };
    size_t idx = 0;
    PTree root;
    root.ch = build(build, 1, n, idx);
    if (root.ch.size() == 1 && !root.ch[0].is_leaf())
        // a span covering all letters would make the root unary; callers
        // must not pass the all-embracing span for a linear bracketing
        assert(false);
    return root;
}

inline std::string bracketing_string(const Bracketing& b) {
    int pos = 0;
    auto rec = [&](auto&& self, const PTree& t, bool root) -> std::string {
        if (t.is_leaf()) {
            ++pos;
            return std::to_string(pos);
        }
        std::string s;
        for (const auto& c : t.ch) s += self(self, c, false);
        return root ? s : "(" + s + ")";
    };
    return rec(rec, b, true);
}

/** All bracketings of 1..n = all planar trees with n leaves. */
inline std::vector<Bracketing> enumerate_B(int n) {
    assert(n >= 2);
    return enumerate_planar_trees(n);
}

/** b' <= b'' iff b'' is obtained from b' by deleting bracket pairs. */
inline bool bracketing_leq(const Bracketing& a, const Bracketing& b) {
    auto sa = bracket_spans(a), sb = bracket_spans(b);
    return std::includes(sa.begin(), sa.end(), sb.begin(), sb.end());
}

inline Poset poset_B(const std::vector<Bracketing>& bs) {
    Poset p(bs.size());
    for (size_t a = 0; a < bs.size(); ++a)
        for (size_t b = 0; b < bs.size(); ++b)
            p.leq[a][b] = bracketing_leq(bs[a], bs[b]);
    return p;
}

/** The bracketing b(I) for I = [i,j] in P(n): one bracket on letters i..j+1. */
inline Bracketing interval_to_bracketing(int n, const Interval& iv) {
    return bracketing_from_spans(n, {{iv.lo, iv.hi + 1}});
}

/** Family in I(n) -> bracketing: one bracket per interval. */
inline Bracketing interval_family_to_bracketing(int n,
                                                const std::vector<Interval>& fam) {
    std::vector<std::pair<int, int>> spans;
    for (const auto& iv : fam) spans.emplace_back(iv.lo, iv.hi + 1);
    return bracketing_from_spans(n, spans);
}

// ------------------------------------------------------------- cyclic case

/** An arc (start letter s, length len) on the circle 1..n, 2<=len<=n. */
struct Arc {
    int s = 1, len = 2;
    bool operator==(const Arc&) const = default;
    auto operator<=>(const Arc&) const = default;
};

namespace detail {
/** gap g (1..n) = the slot between letter g and letter g+1 (gap n wraps). */
inline int open_gap(const Arc& a, int n) { return (a.s - 2 + n) % n + 1; }
inline int close_gap(const Arc& a, int n) { return (a.s + a.len - 2) % n + 1; }
inline bool gap_interior(const Arc& a, int g, int n) {
    // interior gaps of (s,len): s, s+1, ..., s+len-2 (mod n)
    for (int k = 0; k <= a.len - 2; ++k)
        if ((a.s + k - 1) % n + 1 == g) return true;
    return false;
}
inline unsigned letters_mask(const Arc& a, int n) {
    unsigned m = 0;
    for (int k = 0; k < a.len; ++k) m |= 1u << ((a.s - 1 + k) % n);
    return m;
}
}  // namespace detail

/** Can two distinct arcs coexist in one cyclic bracketing? */
inline bool arcs_compatible(const Arc& a, const Arc& b, int n) {
    if (a == b) return false;
    unsigned la = detail::letters_mask(a, n), lb = detail::letters_mask(b, n);
    if ((la & lb) == 0) return true;
    auto inside = [&](const Arc& inner, const Arc& outer) {
        if (outer.len < n) return true;  // letter containment is enough
        // outer is all-embracing: inner must avoid the cut gap
        return !detail::gap_interior(inner, detail::open_gap(outer, n), n);
    };
    if ((la | lb) == lb && a.len <= b.len) return inside(a, b);
    if ((la | lb) == la && b.len <= a.len) return inside(b, a);
    return false;
}

struct CyclicBracketing {
    int n = 0;
    std::set<Arc> arcs;

    bool operator==(const CyclicBracketing&) const = default;
    auto operator<=>(const CyclicBracketing&) const = default;

    bool valid() const {
        for (const Arc& a : arcs) {
            if (a.s < 1 || a.s > n || a.len < 2 || a.len > n) return false;
            for (const Arc& b : arcs)
                if (a < b && !arcs_compatible(a, b, n)) return false;
        }
        return true;
    }
};

/** b' <= b'' iff b'' is obtained from b' by deleting bracket pairs. */
inline bool cyclic_bracketing_leq(const CyclicBracketing& a,
                                  const CyclicBracketing& b) {
    return std::includes(a.arcs.begin(), a.arcs.end(), b.arcs.begin(),
                         b.arcs.end());
}

/** The paper-style symbol, e.g. "1)((23)" or "((12)(34))". */
inline std::string cyclic_bracketing_string(const CyclicBracketing& b) {
    int n = b.n;
    // parens at gap g: closers (inner first = shorter first), then openers
    // (outer first = longer first). The gap between letters n and 1 renders
    // openers at the string start and closers at the string end.
    std::vector<const Arc*> sorted;
    for (const Arc& a : b.arcs) sorted.push_back(&a);
    std::sort(sorted.begin(), sorted.end(),
              [](const Arc* x, const Arc* y) { return x->len < y->len; });
    std::string out;
    std::vector<std::string> opens(n + 1), closes(n + 1);
    for (const Arc* a : sorted) {  // shorter first
        int og = detail::open_gap(*a, n);   // arc opens just after gap og
        int cg = detail::close_gap(*a, n);  // arc closes at gap cg
        // opener printed before letter og+1 (gap n -> before letter 1);
        // outer-first ordering: longer arcs added later end up leftmost
        opens[og % n + 1] = "(" + opens[og % n + 1];
        // closer printed after letter cg (gap n -> after letter n);
        // inner-first: shorter arcs close first
        closes[(cg - 1) % n + 1] += ")";
    }
    for (int i = 1; i <= n; ++i) {
        if (i > 1) out += closes[i - 1];
        out += opens[i];
        out += std::to_string(i);
    }
    out += closes[n];
    return out;
}

/**
 * Definition-faithful enumeration of BC(n): bracketings (outer pair allowed)
 * of every rotation of the word 1..n, identified by rotating top-level
 * blocks, i.e. collected as canonical arc sets.
 */
inline std::vector<CyclicBracketing> enumerate_BC(int n) {
    assert(n >= 1);
    std::set<CyclicBracketing> seen;
    // linear position spans [a,b], 1<=a<b<=n, including the full span
    std::vector<std::pair<int, int>> spans;
    for (int a = 1; a <= n; ++a)
        for (int bb = a + 1; bb <= n; ++bb) spans.emplace_back(a, bb);
    auto nested_or_disjoint = [](const std::pair<int, int>& x,
                                 const std::pair<int, int>& y) {
        if (x.first <= y.first && y.second <= x.second) return true;
        if (y.first <= x.first && x.second <= y.second) return true;
        return x.second < y.first || y.second < x.first;
    };
    for (const auto& fam : pairwise_families(spans, nested_or_disjoint)) {
        for (int r = 0; r < n; ++r) {
            // word w: position p holds letter ((p-1+r) mod n)+1
            CyclicBracketing cb;
            cb.n = n;
            bool ok = true;
            for (int idx : fam) {
                auto [a, bb] = spans[idx];
                Arc arc{(a - 1 + r) % n + 1, bb - a + 1};
                cb.arcs.insert(arc);
            }
            if (cb.arcs.size() != fam.size()) ok = false;  // collision guard
            if (ok) seen.insert(cb);
            if (n == 1) break;
        }
    }
    return {seen.begin(), seen.end()};
}

inline Poset poset_BC(const std::vector<CyclicBracketing>& bs) {
    Poset p(bs.size());
    for (size_t a = 0; a < bs.size(); ++a)
        for (size_t b = 0; b < bs.size(); ++b)
            p.leq[a][b] = cyclic_bracketing_leq(bs[a], bs[b]);
    return p;
}

// --------------------------------------------- interval <-> arc dictionaries

/** PC(n) -> arc: the bracket of b(I) encloses I plus the next letter. */
inline Arc cyclic_interval_to_arc(int n, const CInterval& iv) {
    if (!iv.wrap) {
        if (iv.j < n) return Arc{iv.i, iv.j - iv.i + 2};
        return Arc{iv.i, n - iv.i + 2};  // [i,n], i>=2: letters {i..n,1}
    }
    return Arc{iv.j, n - iv.j + iv.i + 2};  // i][j: letters {j..n, 1..i+1}
}

inline CInterval arc_to_cyclic_interval(int n, const Arc& a) {
    int end = a.s + a.len - 1;  // last letter, un-normalized
    if (end <= n) return CInterval{false, a.s, end - 1};
    int e = end - n;  // wrapped end letter
    if (e == 1) return CInterval{false, a.s, n};
    return CInterval{true, e - 1, a.s};
}

inline CyclicBracketing cyclic_interval_to_bracketing(int n, const CInterval& iv) {
    CyclicBracketing b;
    b.n = n;
    b.arcs.insert(cyclic_interval_to_arc(n, iv));
    return b;
}

inline CyclicBracketing cyclic_family_to_bracketing(int n,
                                                    const std::vector<CInterval>& fam) {
    CyclicBracketing b;
    b.n = n;
    for (const auto& iv : fam) b.arcs.insert(cyclic_interval_to_arc(n, iv));
    return b;
}

// ----------------------------------------------------------- compositions

/** Operadic substitution: plug b_i into slot i of b, shifting letters. */
inline Bracketing compose_B(const Bracketing& b,
                            const std::vector<Bracketing>& parts) {
    assert(static_cast<int>(parts.size()) == b.n_leaves());
    int next = 0;
    auto rec = [&](auto&& self, const PTree& t) -> std::vector<PTree> {
        // returns the child list replacing t in its parent
        if (t.is_leaf()) return parts[next++].ch.empty()
                                    ? std::vector<PTree>{leaf()}
                                    : parts[next - 1].ch;
        PTree v;
        for (const auto& c : t.ch) {
            auto rep = self(self, c);
            if (c.is_leaf())
                v.ch.insert(v.ch.end(), rep.begin(), rep.end());
            else
                v.ch.push_back(rep[0]);
        }
        return {v};
    };
    // top level: splice replacements of the root's children
    PTree root;
    for (const auto& c : b.ch) {
        auto rep = rec(rec, c);
        if (c.is_leaf())
            root.ch.insert(root.ch.end(), rep.begin(), rep.end());
        else
            root.ch.push_back(rep[0]);
    }
    return root;
}

/** Module substitution: plug linear bracketings into the cyclic slots. */
inline CyclicBracketing compose_BC(const CyclicBracketing& b,
                                   const std::vector<Bracketing>& parts) {
    int l = b.n;
    assert(static_cast<int>(parts.size()) == l);
    std::vector<int> m(l), off(l + 1, 0);
    for (int i = 0; i < l; ++i) {
        m[i] = parts[i].n_leaves();
        off[i + 1] = off[i] + m[i];
    }
    int N = off[l];
    CyclicBracketing out;
    out.n = N;
    for (const Arc& a : b.arcs) {
        int len = 0;
        for (int k = 0; k < a.len; ++k) len += m[(a.s - 1 + k) % l];
        out.arcs.insert(Arc{off[a.s - 1] + 1, len});
    }
    for (int i = 0; i < l; ++i)
        for (auto [lo, hi] : bracket_spans(parts[i]))
            out.arcs.insert(Arc{off[i] + lo, hi - lo + 1});
    return out;
}

}  // namespace hedra
