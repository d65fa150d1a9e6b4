#pragma once
// Exact convex realizations: associahedron, cyclohedron, simplex.
//
// Polytopes are built as H-representations (one equality + tagged
// inequalities) with rational coefficients.  Vertices come from exhaustive
// active-set solving; faces are vertex-set intersections of facets.

#include <hedra/bracketings.hpp>
#include <hedra/poset.hpp>
#include <hedra/qlin.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace hedra {

struct Hyperplane {
    std::string tag;  // constraint label, e.g. "[2,3]" or "1][3" or "t3"
    QVec a;           // inequality  a . t >= rhs
    Q rhs;
};

struct HRepPolytope {
    char family = '?';  // 'K', 'W' or 'S'
    int n = 0;          // family parameter
    int dim = 0;        // ambient dimension
    QVec eq_a;          // equality  eq_a . t == eq_rhs
    Q eq_rhs;
    std::vector<Hyperplane> ineqs;
};

/** Cost function for the truncation construction, as a function of #I. */
using CostFn = std::function<Q(int)>;

inline CostFn power_cost(int base) {
    return [base](int sz) { return Q(boost::multiprecision::pow(Z(base), sz)); };
}

/**
 * Admissibility: c(#I) + c(#J) < c(#(I u J)) whenever the union of two
 * intervals is again an interval properly containing both.  Checked over
 * proper subintervals of [1,m] (the linear case covers the cyclic one,
 * where sizes behave the same way).
 */
inline bool admissible_cost(int m, const CostFn& c) {
    auto ivs = proper_intervals(m + 1);  // subintervals of [1,m]
    for (const auto& I : ivs)
        for (const auto& J : ivs) {
            int lo = std::min(I.lo, J.lo), hi = std::max(I.hi, J.hi);
            bool is_interval = (I.lo <= J.hi + 1 && J.lo <= I.hi + 1);
            if (!is_interval) continue;
            bool proper = !(lo == I.lo && hi == I.hi) && !(lo == J.lo && hi == J.hi);
            if (!proper) continue;
            if (!(c(I.size()) + c(J.size()) < c(hi - lo + 1))) return false;
        }
    return true;
}

inline std::string interval_tag(const Interval& I) {
    return "[" + std::to_string(I.lo) + "," + std::to_string(I.hi) + "]";
}

inline std::string cyclic_interval_tag(const CInterval& I) {
    if (I.wrap) return std::to_string(I.i) + "][" + std::to_string(I.j);
    return "[" + std::to_string(I.i) + "," + std::to_string(I.j) + "]";
}

/** K_n in R^{n-1}: sum t = c(n-1), and sum_{k in I} t_k >= c(#I), I in P(n). */
inline HRepPolytope build_K(int n, const CostFn& c = power_cost(3)) {
    if (n < 2) throw std::invalid_argument("build_K: n >= 2 required");
    if (!admissible_cost(n - 1, c)) throw std::invalid_argument("build_K: inadmissible cost");
    HRepPolytope p;
    p.family = 'K';
    p.n = n;
    p.dim = n - 1;
    p.eq_a.assign(p.dim, Q(1));
    p.eq_rhs = c(n - 1);
    for (const auto& I : proper_intervals(n)) {
        Hyperplane h{interval_tag(I), QVec(p.dim, Q(0)), c(I.size())};
        for (int k = I.lo; k <= I.hi; ++k) h.a[k - 1] = 1;
        p.ineqs.push_back(std::move(h));
    }
    return p;
}

/** W_n in R^n: sum t = c(n), and sum_{k in I} t_k >= c(#I), I in PC(n). */
inline HRepPolytope build_W(int n, const CostFn& c = power_cost(3)) {
    if (n < 1) throw std::invalid_argument("build_W: n >= 1 required");
    if (!admissible_cost(n, c)) throw std::invalid_argument("build_W: inadmissible cost");
    HRepPolytope p;
    p.family = 'W';
    p.n = n;
    p.dim = n;
    p.eq_a.assign(p.dim, Q(1));
    p.eq_rhs = c(n);
    for (const auto& I : cyclic_intervals(n)) {
        Hyperplane h{cyclic_interval_tag(I), QVec(p.dim, Q(0)), c(I.size(n))};
        for (int k : I.members(n)) h.a[k - 1] = 1;
        p.ineqs.push_back(std::move(h));
    }
    return p;
}

/** The standard (n-1)-simplex in R^n: sum t = 1, t_k >= 0. */
inline HRepPolytope build_simplex(int n) {
    if (n < 1) throw std::invalid_argument("build_simplex: n >= 1 required");
    HRepPolytope p;
    p.family = 'S';
    p.n = n;
    p.dim = n;
    p.eq_a.assign(p.dim, Q(1));
    p.eq_rhs = 1;
    for (int k = 1; k <= n; ++k) {
        Hyperplane h{"t" + std::to_string(k), QVec(p.dim, Q(0)), Q(0)};
        h.a[k - 1] = 1;
        p.ineqs.push_back(std::move(h));
    }
    return p;
}

// --------------------------------------------------------------- vertices

namespace detail {

/** Unique solution of the square system (rows, rhs), or nullopt. */
inline std::optional<QVec> solve_unique(const std::vector<QVec>& rows, const QVec& rhs) {
    auto copy = rows;
    if (rref(copy).size() != rows[0].size()) return std::nullopt;
    QMat a(rows.size(), rows[0].size());
    a.m = rows;
    return solve(a, rhs);
}

}  // namespace detail

/** All vertices, by exhaustive active-set solving.  Sorted, deduplicated. */
inline std::vector<QVec> enumerate_vertices(const HRepPolytope& p) {
    const int d = p.dim;
    const int need = d - 1;  // with the equality this squares the system
    const int m = static_cast<int>(p.ineqs.size());
    std::set<QVec> found;
    std::vector<int> pick(need);
    auto feasible = [&](const QVec& x) {
        for (const auto& h : p.ineqs) {
            Q lhs = 0;
            for (int k = 0; k < d; ++k) lhs += h.a[k] * x[k];
            if (lhs < h.rhs) return false;
        }
        return true;
    };
    auto rec = [&](auto&& self, int pos, int next) -> void {
        if (pos == need) {
            std::vector<QVec> rows{p.eq_a};
            QVec rhs{p.eq_rhs};
            for (int idx : pick) {
                rows.push_back(p.ineqs[idx].a);
                rhs.push_back(p.ineqs[idx].rhs);
            }
            auto x = detail::solve_unique(rows, rhs);
            if (x && feasible(*x)) found.insert(*x);
            return;
        }
        for (int k = next; k <= m - (need - pos); ++k) {
            pick[pos] = k;
            self(self, pos + 1, k + 1);
        }
    };
    if (need == 0) {
        // 0-dimensional case: the equality alone determines the point
        if (d == 1) found.insert(QVec{p.eq_rhs / p.eq_a[0]});
    } else {
        rec(rec, 0, 0);
    }
    return {found.begin(), found.end()};
}

/** Affine dimension of a point set (-1 for empty). */
inline int affine_dim(const std::vector<QVec>& pts, const std::vector<int>& idx) {
    if (idx.empty()) return -1;
    std::vector<QVec> diffs;
    for (size_t k = 1; k < idx.size(); ++k) {
        QVec d = pts[idx[k]];
        for (size_t j = 0; j < d.size(); ++j) d[j] -= pts[idx[0]][j];
        diffs.push_back(std::move(d));
    }
    if (diffs.empty()) return 0;
    return static_cast<int>(rank(diffs));
}

// ------------------------------------------------------------ face lattice

struct GeometricFace {
    std::vector<int> vset;    // sorted vertex indices
    std::vector<int> active;  // indices of inequalities tight on all of vset
    int dim = -1;
};

struct FaceLattice {
    std::vector<QVec> verts;
    std::vector<GeometricFace> faces;  // sorted by vset
    Poset poset;                       // by vset inclusion (top face = whole polytope)

    int top_dim() const {
        int d = -1;
        for (const auto& f : faces) d = std::max(d, f.dim);
        return d;
    }
    /** f-vector (f_0, f_1, ..., f_topdim). */
    std::vector<long> f_vector() const {
        std::vector<long> f(top_dim() + 1, 0);
        for (const auto& fc : faces) ++f[fc.dim];
        return f;
    }
    int find(const std::vector<int>& vset) const {
        auto cmp = [](const GeometricFace& f, const std::vector<int>& v) { return f.vset < v; };
        auto it = std::lower_bound(faces.begin(), faces.end(), vset, cmp);
        if (it == faces.end() || it->vset != vset) return -1;
        return static_cast<int>(it - faces.begin());
    }
};

/** Nonempty faces as intersections of facet vertex sets, closed under meet. */
inline FaceLattice enumerate_faces(const HRepPolytope& p) {
    FaceLattice L;
    L.verts = enumerate_vertices(p);
    const int nv = static_cast<int>(L.verts.size());
    std::vector<std::vector<int>> facet_vs(p.ineqs.size());
    for (size_t f = 0; f < p.ineqs.size(); ++f)
        for (int v = 0; v < nv; ++v) {
            Q lhs = 0;
            for (int k = 0; k < p.dim; ++k) lhs += p.ineqs[f].a[k] * L.verts[v][k];
            if (lhs == p.ineqs[f].rhs) facet_vs[f].push_back(v);
        }
    std::set<std::vector<int>> seen;
    std::vector<int> all(nv);
    for (int v = 0; v < nv; ++v) all[v] = v;
    std::vector<std::vector<int>> queue{all};
    seen.insert(all);
    while (!queue.empty()) {
        auto cur = queue.back();
        queue.pop_back();
        for (const auto& fv : facet_vs) {
            std::vector<int> meet;
            std::set_intersection(cur.begin(), cur.end(), fv.begin(), fv.end(),
                                  std::back_inserter(meet));
            if (!meet.empty() && seen.insert(meet).second) queue.push_back(meet);
        }
    }
    for (const auto& vs : seen) {
        GeometricFace f;
        f.vset = vs;
        for (size_t k = 0; k < facet_vs.size(); ++k)
            if (std::includes(facet_vs[k].begin(), facet_vs[k].end(), vs.begin(), vs.end()))
                f.active.push_back(static_cast<int>(k));
        f.dim = affine_dim(L.verts, vs);
        L.faces.push_back(std::move(f));
    }
    std::sort(L.faces.begin(), L.faces.end(),
              [](const GeometricFace& a, const GeometricFace& b) { return a.vset < b.vset; });
    const size_t nf = L.faces.size();
    L.poset = Poset(nf);
    for (size_t a = 0; a < nf; ++a)
        for (size_t b = 0; b < nf; ++b)
            L.poset.leq[a][b] = std::includes(L.faces[b].vset.begin(), L.faces[b].vset.end(),
                                              L.faces[a].vset.begin(), L.faces[a].vset.end());
    return L;
}

/** Euler characteristic of the boundary complex (all proper faces). */
inline long boundary_euler(const FaceLattice& L) {
    long chi = 0;
    int top = L.top_dim();
    for (const auto& f : L.faces)
        if (f.dim < top) chi += (f.dim % 2 == 0) ? 1 : -1;
    return chi;
}

// ------------------------------------------------- lattice identification

struct LatticeMatch {
    bool ok = false;
    std::string detail;            // first mismatch, if any
    std::vector<size_t> face_of;   // family index -> face index
};

/**
 * Match the geometric face lattice of K_n against the interval-family poset
 * I(n): family iota |-> intersection of its facets.  Verifies bijectivity,
 * the order isomorphism, and the dimension formula dim = n - #iota - 2.
 */
inline LatticeMatch match_lattice_K(int n, const FaceLattice& L) {
    LatticeMatch r;
    auto items = proper_intervals(n);
    auto fams = enumerate_I(n);
    const GeometricFace* top = nullptr;
    for (const auto& f : L.faces)
        if (f.active.empty()) top = &f;
    if (!top) {
        // every facet active on everything only happens for a point
        top = &L.faces[0];
    }
    std::vector<std::vector<int>> facet_vs(items.size());
    for (const auto& f : L.faces)
        if (f.dim == L.top_dim() - 1 && f.active.size() == 1) facet_vs[f.active[0]] = f.vset;
    std::map<std::string, size_t> idx_of_tag;
    for (size_t k = 0; k < items.size(); ++k) idx_of_tag[interval_tag(items[k])] = k;
    r.face_of.resize(fams.size());
    std::set<size_t> hit;
    for (size_t fi = 0; fi < fams.size(); ++fi) {
        std::vector<int> vs = top->vset;
        for (const auto& item : fams[fi]) {
            std::vector<int> meet;
            const auto& fv = facet_vs[idx_of_tag.at(interval_tag(item))];
            std::set_intersection(vs.begin(), vs.end(), fv.begin(), fv.end(),
                                  std::back_inserter(meet));
            vs = std::move(meet);
        }
        int id = L.find(vs);
        if (id < 0) {
            r.detail = "family has empty/unlisted intersection";
            return r;
        }
        if (L.faces[id].dim != n - static_cast<int>(fams[fi].size()) - 2) {
            r.detail = "dimension formula fails";
            return r;
        }
        r.face_of[fi] = id;
        hit.insert(id);
    }
    if (hit.size() != L.faces.size() || hit.size() != fams.size()) {
        r.detail = "not a bijection";
        return r;
    }
    Poset fp = family_poset(fams);
    std::pair<size_t, size_t> w;
    if (!is_order_iso(fp, L.poset, r.face_of, &w)) {
        r.detail = "order mismatch at pair (" + std::to_string(w.first) + "," +
                   std::to_string(w.second) + ")";
        return r;
    }
    r.ok = true;
    return r;
}

/** Same for W_n against IC(n), with dimension formula n - #iota - 1. */
inline LatticeMatch match_lattice_W(int n, const FaceLattice& L) {
    LatticeMatch r;
    auto items = cyclic_intervals(n);
    auto fams = enumerate_IC(n);
    const GeometricFace* top = nullptr;
    for (const auto& f : L.faces)
        if (f.active.empty()) top = &f;
    if (!top) top = &L.faces[0];
    std::vector<std::vector<int>> facet_vs(items.size());
    for (const auto& f : L.faces)
        if (f.dim == L.top_dim() - 1 && f.active.size() == 1) facet_vs[f.active[0]] = f.vset;
    std::map<std::string, size_t> idx_of_tag;
    for (size_t k = 0; k < items.size(); ++k) idx_of_tag[cyclic_interval_tag(items[k])] = k;
    r.face_of.resize(fams.size());
    std::set<size_t> hit;
    for (size_t fi = 0; fi < fams.size(); ++fi) {
        std::vector<int> vs = top->vset;
        for (const auto& item : fams[fi]) {
            std::vector<int> meet;
            const auto& fv = facet_vs[idx_of_tag.at(cyclic_interval_tag(item))];
            std::set_intersection(vs.begin(), vs.end(), fv.begin(), fv.end(),
                                  std::back_inserter(meet));
            vs = std::move(meet);
        }
        int id = L.find(vs);
        if (id < 0) {
            r.detail = "family has empty/unlisted intersection";
            return r;
        }
        if (L.faces[id].dim != n - static_cast<int>(fams[fi].size()) - 1) {
            r.detail = "dimension formula fails";
            return r;
        }
        r.face_of[fi] = id;
        hit.insert(id);
    }
    if (hit.size() != L.faces.size() || hit.size() != fams.size()) {
        r.detail = "not a bijection";
        return r;
    }
    Poset fp = family_poset(fams);
    std::pair<size_t, size_t> w;
    if (!is_order_iso(fp, L.poset, r.face_of, &w)) {
        r.detail = "order mismatch at pair (" + std::to_string(w.first) + "," +
                   std::to_string(w.second) + ")";
        return r;
    }
    r.ok = true;
    return r;
}

// ------------------------------------------------------ facets as products

/**
 * Split a cyclic bracketing containing the bracket (1...k) into the inside
 * part (a bracketing of k letters) and the outside part (a cyclic
 * bracketing of n-k+1 letters, the block collapsed to letter 1).
 */
inline std::pair<Bracketing, CyclicBracketing> split_at_block(const CyclicBracketing& b, int k) {
    const int n = b.n;
    const Arc block{1, k};
    unsigned block_mask = detail::letters_mask(block, n);
    std::vector<std::pair<int, int>> inner_spans;
    CyclicBracketing outer;
    outer.n = n - k + 1;
    for (const auto& a : b.arcs) {
        if (a == block) continue;
        unsigned m = detail::letters_mask(a, n);
        if ((m & ~block_mask) == 0) {
            // inside the block: a plain subinterval of 1..k
            inner_spans.emplace_back(a.s, a.s + a.len - 1);
        } else {
            // outside or containing the block; collapse letters 1..k
            bool contains = (m & block_mask) == block_mask;
            int s = a.s <= k ? 1 : a.s - k + 1;
            int len = contains ? a.len - k + 1 : a.len;
            outer.arcs.insert(Arc{s, len});
        }
    }
    return {bracketing_from_spans(k, std::move(inner_spans)), outer};
}

struct ProductCheck {
    bool ok = false;
    std::string detail;
    size_t below = 0;  // faces below the facet b_{k,n}
};

/**
 * The face poset below the facet of W_n labeled by the bracket (1...k) is
 * the product of the face posets of W_{n-k+1} and K_k.
 */
inline ProductCheck facet_product_check(int n, int k) {
    ProductCheck r;
    if (k < 2 || k > n) {
        r.detail = "need 1 < k <= n";
        return r;
    }
    const Arc block{1, k};
    auto bcn = enumerate_BC(n);
    std::vector<CyclicBracketing> below;
    for (const auto& b : bcn)
        if (b.arcs.count(block)) below.push_back(b);
    auto ws = enumerate_BC(n - k + 1);
    auto ks = enumerate_B(k);
    if (below.size() != ws.size() * ks.size()) {
        r.detail = "size mismatch: " + std::to_string(below.size()) + " vs " +
                   std::to_string(ws.size() * ks.size());
        return r;
    }
    std::map<CyclicBracketing, size_t> wi;
    std::map<Bracketing, size_t> ki;
    for (size_t i = 0; i < ws.size(); ++i) wi[ws[i]] = i;
    for (size_t i = 0; i < ks.size(); ++i) ki[ks[i]] = i;
    std::vector<size_t> f(below.size());
    std::set<size_t> hit;
    for (size_t i = 0; i < below.size(); ++i) {
        auto [in, out] = split_at_block(below[i], k);
        if (!wi.count(out) || !ki.count(in)) {
            r.detail = "split left the target posets";
            return r;
        }
        f[i] = wi[out] * ks.size() + ki[in];
        hit.insert(f[i]);
    }
    if (hit.size() != below.size()) {
        r.detail = "split map not injective";
        return r;
    }
    // order isomorphism onto the product order
    for (size_t a = 0; a < below.size(); ++a)
        for (size_t b = 0; b < below.size(); ++b) {
            bool lhs = cyclic_bracketing_leq(below[a], below[b]);
            bool rhs = cyclic_bracketing_leq(ws[f[a] / ks.size()], ws[f[b] / ks.size()]) &&
                       bracketing_leq(ks[f[a] % ks.size()], ks[f[b] % ks.size()]);
            if (lhs != rhs) {
                r.detail = "order mismatch";
                return r;
            }
        }
    r.below = below.size();
    r.ok = true;
    return r;
}

// ------------------------------------------------------- inscribed simplex

/**
 * The n points P_1..P_n: P_t is the barycenter of the codimension-one face
 * of W_n cut by the all-embracing bracket opened before letter t.
 */
inline std::vector<QVec> inscribed_simplex(int n, const CostFn& c = power_cost(3)) {
    auto p = build_W(n, c);
    auto verts = enumerate_vertices(p);
    std::vector<QVec> out;
    for (int t = 1; t <= n; ++t) {
        // facet tag: the cyclic interval of the arc starting at t of full length
        CInterval iv = arc_to_cyclic_interval(n, Arc{t, n});
        std::string tag = cyclic_interval_tag(iv);
        const Hyperplane* h = nullptr;
        for (const auto& hh : p.ineqs)
            if (hh.tag == tag) h = &hh;
        if (!h) throw std::logic_error("inscribed_simplex: facet not found");
        QVec bary(p.dim, Q(0));
        long cnt = 0;
        for (const auto& v : verts) {
            Q lhs = 0;
            for (int j = 0; j < p.dim; ++j) lhs += h->a[j] * v[j];
            if (lhs == h->rhs) {
                for (int j = 0; j < p.dim; ++j) bary[j] += v[j];
                ++cnt;
            }
        }
        if (cnt == 0) throw std::logic_error("inscribed_simplex: empty facet");
        for (auto& x : bary) x /= cnt;
        out.push_back(std::move(bary));
    }
    return out;
}

}  // namespace hedra
