#pragma once
// Cobar-type chain complexes built from planar trees: the tree complex of
// the associative collection (cells of the symmetrized associahedron), the
// rake complex of the cyclic collection (cells of the symmetrized
// cyclohedron), the block-merge complex of the free module on cyclic
// generators, and the comparison map onto the symmetrized simplex complex.

#include <hedra/bracketings.hpp>
#include <hedra/chain.hpp>
#include <hedra/operad.hpp>
#include <hedra/simplex_module.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace hedra {

/**
 * Sign of expanding an arity-k vertex by grouping q consecutive children
 * starting at child s (1-based).  The exponent is the unique choice (up to
 * global conventions) making the differential square to zero; the tests
 * assert d^2 = 0 on every complex built from it.
 */
inline int expand_sign(int k, int q, int s) {
    int e = k + s * (q + 1);
    return (e & 1) ? -1 : 1;
}

/**
 * Boundary of a planar tree under one-vertex expansion, as (sign, tree)
 * terms: a derivation over the vertices in depth-first order, each vertex
 * of arity a carrying degree a - 2.
 */
inline std::vector<std::pair<int, PTree>> tree_boundary(const PTree& t) {
    std::vector<std::pair<int, PTree>> terms;
    int prefix = 0;  // parity of degrees of vertices already passed
    auto walk = [&](auto&& self, const PTree& u,
                    const std::function<PTree(PTree)>& put) -> void {
        if (u.is_leaf()) return;
        int k = static_cast<int>(u.ch.size());
        int sign_here = (prefix & 1) ? -1 : 1;
        for (int q = 2; q < k; ++q)
            for (int s = 1; s + q - 1 <= k; ++s) {
                PTree v;
                for (int c = 1; c < s; ++c) v.ch.push_back(u.ch[c - 1]);
                PTree inner;
                for (int c = s; c < s + q; ++c) inner.ch.push_back(u.ch[c - 1]);
                v.ch.push_back(std::move(inner));
                for (int c = s + q; c <= k; ++c) v.ch.push_back(u.ch[c - 1]);
                terms.emplace_back(sign_here * expand_sign(k, q, s), put(std::move(v)));
            }
        prefix += k - 2;
        for (size_t ci = 0; ci < u.ch.size(); ++ci) {
            auto put2 = [&put, &u, ci](PTree w) {
                PTree v = u;
                v.ch[ci] = std::move(w);
                return put(std::move(v));
            };
            self(self, u.ch[ci], put2);
        }
    };
    walk(walk, t, [](PTree v) { return v; });
    return terms;
}

/** Word of letters at the leaves: position p carries sigma^{-1}(p). */
inline std::string labeled_tree_string(const PTree& t, const Perm& sigma) {
    Perm inv = sigma.inverse();
    int pos = 0;
    auto rec = [&](auto&& self, const PTree& u, bool root) -> std::string {
        if (u.is_leaf()) return std::to_string(inv(++pos));
        std::string s;
        for (const auto& c : u.ch) s += self(self, c, false);
        return root ? s : "(" + s + ")";
    };
    return rec(rec, t, true);
}

// ----------------------------------------- tree complex of the associative
// collection: basis (planar n-tree, sigma), the cells of n! associahedra

struct OperadCobar {
    int n = 0;
    std::vector<PTree> shapes;
    std::vector<Perm> perms;
    ChainComplex cc;
    std::map<std::pair<std::string, int>, std::pair<int, int>> idx;  // (enc, perm#) -> (d, j)

    std::pair<int, int> find(const PTree& t, int perm_no) const {
        return idx.at({t.encode(), perm_no});
    }
};

inline OperadCobar cobar_operad(int n) {
    OperadCobar o;
    o.n = n;
    o.perms = all_perms(n);
    o.cc.name = "tree-complex(" + std::to_string(n) + ")";
    if (n == 1) {
        o.shapes = {leaf()};
        o.cc.basis = {{"1"}};
        o.cc.bnd = {{SVec{}}};
        o.idx[{leaf().encode(), 0}] = {0, 0};
        return o;
    }
    o.shapes = enumerate_B(n);
    int top = n - 2;
    o.cc.basis.assign(top + 1, {});
    o.cc.bnd.assign(top + 1, {});
    for (size_t si = 0; si < o.shapes.size(); ++si) {
        int d = n - 2 - static_cast<int>(bracket_spans(o.shapes[si]).size());
        for (size_t pi = 0; pi < o.perms.size(); ++pi) {
            o.idx[{o.shapes[si].encode(), static_cast<int>(pi)}] = {
                d, static_cast<int>(o.cc.basis[d].size())};
            o.cc.basis[d].push_back(labeled_tree_string(o.shapes[si], o.perms[pi]));
        }
    }
    for (int d = 0; d <= top; ++d) o.cc.bnd[d].assign(o.cc.basis[d].size(), SVec{});
    for (size_t si = 0; si < o.shapes.size(); ++si) {
        auto terms = tree_boundary(o.shapes[si]);
        for (size_t pi = 0; pi < o.perms.size(); ++pi) {
            auto [d, j] = o.find(o.shapes[si], static_cast<int>(pi));
            SVec& row = o.cc.bnd[d][j];
            for (const auto& [sg, t] : terms) {
                auto [dd, jj] = o.find(t, static_cast<int>(pi));
                (void)dd;
                row[jj] += sg;
            }
        }
    }
    return o;
}

// -------------------------------------------- rake classes: cells of the
// symmetrized cyclohedron.  A representative is a cyclic sequence of
// planar trees grafted on a rake, with leaf positions labeled through a
// permutation; classes are taken modulo signed rotation of the blocks.

struct RakeCell {
    std::vector<PTree> trees;  // l blocks in planar order
    Perm sigma;                // position p carries letter sigma^{-1}(p)

    int l() const { return static_cast<int>(trees.size()); }
    std::vector<int> sizes() const {
        std::vector<int> m;
        for (const auto& t : trees) m.push_back(t.n_leaves());
        return m;
    }
    int n() const { return sigma.n(); }
    int degree() const {
        int v = 0;
        for (const auto& t : trees) v += t.n_vert();
        return n() - 1 - v;
    }
    std::string key() const {
        std::string k;
        for (const auto& t : trees) k += t.encode() + "|";
        for (int i = 1; i <= sigma.n(); ++i) k += std::to_string(sigma(i)) + ",";
        return k;
    }
    bool operator<(const RakeCell& o) const { return key() < o.key(); }
};

/** Rotate the block list by j (block j+1 becomes first), with the signed
 * relabeling of positions; returns the sign of the rewriting. */
inline std::pair<int, RakeCell> rake_rotate(const RakeCell& x, int j) {
    int l = x.l();
    Perm zeta = rotation(l, j);
    RakeCell y;
    Perm zinv = zeta.inverse();
    for (int i = 1; i <= l; ++i) y.trees.push_back(x.trees[zinv(i) - 1]);
    y.sigma = compose(block_perm(zeta, x.sizes()), x.sigma);
    return {zeta.sign(), y};
}

/** Canonical representative of the signed rotation class. */
inline std::pair<int, RakeCell> rake_canon(const RakeCell& x) {
    int best_sign = 1;
    RakeCell best = x;
    std::string best_key = x.key();
    for (int j = 1; j < x.l(); ++j) {
        auto [sg, y] = rake_rotate(x, j);
        std::string k = y.key();
        if (k < best_key) {
            best_key = std::move(k);
            best = y;
            best_sign = sg;
        }
    }
    return {best_sign, best};
}

/** Cyclic-bracketing style label: blocks in round brackets when nontrivial,
 * positions labeled through sigma, block boundaries marked with '/'. */
inline std::string rake_label(const RakeCell& x) {
    Perm inv = x.sigma.inverse();
    int pos = 0;
    std::string s;
    for (const auto& t : x.trees) {
        if (!s.empty()) s += "/";
        auto rec = [&](auto&& self, const PTree& u, bool root) -> std::string {
            if (u.is_leaf()) return std::to_string(inv(++pos));
            std::string r;
            for (const auto& c : u.ch) r += self(self, c, false);
            return root ? r : "(" + r + ")";
        };
        s += rec(rec, t, true);
    }
    return s;
}

/** Boundary terms of a canonical rake cell: internal tree expansions plus
 * signed cyclic merges of consecutive blocks under a fresh root vertex. */
inline std::vector<std::pair<int, RakeCell>> rake_boundary(const RakeCell& x) {
    std::vector<std::pair<int, RakeCell>> out;
    int l = x.l();
    // internal part: derivation past the rake (degree l-1) and earlier trees
    int prefix = (l - 1) & 1;
    for (int i = 0; i < l; ++i) {
        const PTree& t = x.trees[i];
        int sign_here = (prefix & 1) ? -1 : 1;
        if (t.n_leaves() >= 2) {
            // expanding inside t_i, including creating the first bracket
            for (const auto& [sg, u] : tree_boundary(t)) {
                RakeCell y = x;
                y.trees[i] = u;
                out.emplace_back(sign_here * sg, std::move(y));
            }
        }
        prefix += t.n_leaves() >= 2 ? (t.n_leaves() - 2 - static_cast<int>(
                                          bracket_spans(t).size()))
                                   : 0;
    }
    // merge part: for each rotation bring a run to the front, then absorb
    // the first k blocks under a new root vertex
    if (l >= 2)
        for (int j = 0; j < l; ++j) {
            auto [rot_sign, y] = rake_rotate(x, j);
            for (int k = 2; k <= l; ++k) {
                RakeCell z;
                PTree root;
                for (int i = 0; i < k; ++i) root.ch.push_back(y.trees[i]);
                z.trees.push_back(std::move(root));
                for (int i = k; i < l; ++i) z.trees.push_back(y.trees[i]);
                z.sigma = y.sigma;
                int sg = rot_sign * (((l + k) & 1) ? -1 : 1);
                out.emplace_back(sg, std::move(z));
            }
        }
    return out;
}

struct ModuleCobar {
    int n = 0;
    std::vector<std::vector<RakeCell>> cells;  // per degree, canonical reps
    ChainComplex cc;
    std::map<std::string, std::pair<int, int>> idx;  // key -> (d, j)

    /** Index and relative sign of an arbitrary representative. */
    std::pair<int, SVec> locate(const RakeCell& x) const {
        auto [sg, c] = rake_canon(x);
        auto [d, j] = idx.at(c.key());
        return {d, SVec{{j, Q(sg)}}};
    }
};

/** All planar trees with m leaves including the bare leaf for m = 1. */
inline std::vector<PTree> trees_with_unit(int m) {
    if (m == 1) return {leaf()};
    return enumerate_planar_trees(m);
}

inline ModuleCobar cobar_module(int n) {
    ModuleCobar o;
    o.n = n;
    o.cc.name = "rake-complex(" + std::to_string(n) + ")";
    o.cells.assign(n, {});
    auto perms = all_perms(n);
    std::set<std::string> seen;
    // compositions of n
    std::vector<int> comp;
    auto rec = [&](auto&& self, int left) -> void {
        if (left == 0) {
            int l = static_cast<int>(comp.size());
            std::vector<std::vector<PTree>> pools;
            for (int m : comp) pools.push_back(trees_with_unit(m));
            std::vector<size_t> pick(l, 0);
            for (;;) {
                for (const auto& s : perms) {
                    RakeCell x;
                    for (int i = 0; i < l; ++i) x.trees.push_back(pools[i][pick[i]]);
                    x.sigma = s;
                    auto [sg, c] = rake_canon(x);
                    (void)sg;
                    if (seen.insert(c.key()).second) o.cells[c.degree()].push_back(c);
                }
                int i = l - 1;
                while (i >= 0 && ++pick[i] == pools[i].size()) pick[i--] = 0;
                if (i < 0) break;
            }
            return;
        }
        for (int m = 1; m <= left; ++m) {
            comp.push_back(m);
            self(self, left - m);
            comp.pop_back();
        }
    };
    rec(rec, n);
    int top = n - 1;
    o.cc.basis.assign(top + 1, {});
    o.cc.bnd.assign(top + 1, {});
    for (int d = 0; d <= top; ++d) {
        std::sort(o.cells[d].begin(), o.cells[d].end());
        for (size_t j = 0; j < o.cells[d].size(); ++j) {
            o.idx[o.cells[d][j].key()] = {d, static_cast<int>(j)};
            o.cc.basis[d].push_back(rake_label(o.cells[d][j]));
        }
        o.cc.bnd[d].assign(o.cells[d].size(), SVec{});
    }
    for (int d = 1; d <= top; ++d)
        for (size_t j = 0; j < o.cells[d].size(); ++j) {
            SVec& row = o.cc.bnd[d][j];
            for (const auto& [sg, y] : rake_boundary(o.cells[d][j])) {
                auto [dd, v] = o.locate(y);
                (void)dd;
                for (const auto& [k, c] : v) row[k] += Q(sg) * c;
            }
            for (auto it = row.begin(); it != row.end();)
                it = (it->second == 0) ? row.erase(it) : std::next(it);
        }
    return o;
}

/**
 * Cell dictionary: a rake class determines a copy of the cyclohedron (the
 * cyclic coset of its permutation) and a cell of it (one arc per tree
 * vertex, re-based so that letter 1 leads the cyclic word).
 */
inline std::pair<CyclicCoset, CyclicBracketing> rake_to_cell(const RakeCell& x) {
    int n = x.n();
    CyclicBracketing cb;
    cb.n = n;
    int t = x.sigma(1) - 1;  // rotation from the reduced coset representative
    int off = 0;
    for (const auto& tr : x.trees) {
        int m = tr.n_leaves();
        if (m >= 2) {
            int pos = off;
            auto rec = [&](auto&& self, const PTree& u) -> std::pair<int, int> {
                if (u.is_leaf()) {
                    ++pos;
                    return {pos, pos};
                }
                int a = 0, b = 0;
                bool first = true;
                for (const auto& c : u.ch) {
                    auto [ca, cb2] = self(self, c);
                    if (first) {
                        a = ca;
                        first = false;
                    }
                    b = cb2;
                }
                int s = ((a - 1 - t) % n + n) % n + 1;
                cb.arcs.insert(Arc{s, b - a + 1});
                return {a, b};
            };
            rec(rec, tr);
        }
        off += m;
    }
    return {coset_project(x.sigma), cb};
}

// ------------------------------------- control: cobar complex of the free
// module presented without relations.  Same rake shapes but ordered blocks
// (no rotation quotient) and only non-wrapping runs get merged.

/** Boundary for the ordered (non-cyclic) rake complex. */
inline std::vector<std::pair<int, RakeCell>> free_rake_boundary(const RakeCell& x) {
    std::vector<std::pair<int, RakeCell>> out;
    int l = x.l();
    int prefix = (l - 1) & 1;
    for (int i = 0; i < l; ++i) {
        const PTree& t = x.trees[i];
        int sign_here = (prefix & 1) ? -1 : 1;
        if (t.n_leaves() >= 2) {
            for (const auto& [sg, u] : tree_boundary(t)) {
                RakeCell y = x;
                y.trees[i] = u;
                out.emplace_back(sign_here * sg, std::move(y));
            }
            prefix += t.n_leaves() - 2 - static_cast<int>(bracket_spans(t).size());
        }
    }
    for (int b = 0; b < l; ++b)
        for (int k = 2; b + k <= l; ++k) {
            RakeCell z;
            for (int i = 0; i < b; ++i) z.trees.push_back(x.trees[i]);
            PTree root;
            for (int i = b; i < b + k; ++i) root.ch.push_back(x.trees[i]);
            z.trees.push_back(std::move(root));
            for (int i = b + k; i < l; ++i) z.trees.push_back(x.trees[i]);
            z.sigma = x.sigma;
            int e = l + k + b * (k + 1);
            out.emplace_back((e & 1) ? -1 : 1, std::move(z));
        }
    return out;
}

inline ModuleCobar cobar_free_module(int n) {
    ModuleCobar o;
    o.n = n;
    o.cc.name = "ordered-rake-complex(" + std::to_string(n) + ")";
    o.cells.assign(n, {});
    auto perms = all_perms(n);
    std::vector<int> comp;
    auto rec = [&](auto&& self, int left) -> void {
        if (left == 0) {
            int l = static_cast<int>(comp.size());
            std::vector<std::vector<PTree>> pools;
            for (int m : comp) pools.push_back(trees_with_unit(m));
            std::vector<size_t> pick(l, 0);
            for (;;) {
                for (const auto& s : perms) {
                    RakeCell x;
                    for (int i = 0; i < l; ++i) x.trees.push_back(pools[i][pick[i]]);
                    x.sigma = s;
                    o.cells[x.degree()].push_back(x);
                }
                int i = l - 1;
                while (i >= 0 && ++pick[i] == pools[i].size()) pick[i--] = 0;
                if (i < 0) break;
            }
            return;
        }
        for (int m = 1; m <= left; ++m) {
            comp.push_back(m);
            self(self, left - m);
            comp.pop_back();
        }
    };
    rec(rec, n);
    int top = n - 1;
    o.cc.basis.assign(top + 1, {});
    o.cc.bnd.assign(top + 1, {});
    for (int d = 0; d <= top; ++d) {
        std::sort(o.cells[d].begin(), o.cells[d].end());
        for (size_t j = 0; j < o.cells[d].size(); ++j) {
            o.idx[o.cells[d][j].key()] = {d, static_cast<int>(j)};
            o.cc.basis[d].push_back(rake_label(o.cells[d][j]));
        }
        o.cc.bnd[d].assign(o.cells[d].size(), SVec{});
    }
    for (int d = 1; d <= top; ++d)
        for (size_t j = 0; j < o.cells[d].size(); ++j) {
            SVec& row = o.cc.bnd[d][j];
            for (const auto& [sg, y] : free_rake_boundary(o.cells[d][j])) {
                auto [dd, jj] = o.idx.at(y.key());
                (void)dd;
                row[jj] += sg;
            }
            for (auto it = row.begin(); it != row.end();)
                it = (it->second == 0) ? row.erase(it) : std::next(it);
        }
    return o;
}

// ---------------------------------------- block-merge complex of the free
// module on cyclic generators: compositions modulo signed rotation, the
// differential merges cyclically adjacent blocks

struct BlockCell {
    std::vector<int> sizes;  // composition of n, l blocks
    Perm sigma;

    int l() const { return static_cast<int>(sizes.size()); }
    int degree() const { return l() - 1; }
    std::string key() const {
        std::string k;
        for (int m : sizes) k += std::to_string(m) + "|";
        for (int i = 1; i <= sigma.n(); ++i) k += std::to_string(sigma(i)) + ",";
        return k;
    }
    bool operator<(const BlockCell& o) const { return key() < o.key(); }
};

inline std::pair<int, BlockCell> block_rotate(const BlockCell& x, int j) {
    Perm zeta = rotation(x.l(), j);
    BlockCell y;
    Perm zinv = zeta.inverse();
    for (int i = 1; i <= x.l(); ++i) y.sizes.push_back(x.sizes[zinv(i) - 1]);
    y.sigma = compose(block_perm(zeta, x.sizes), x.sigma);
    return {zeta.sign(), y};
}

inline std::pair<int, BlockCell> block_canon(const BlockCell& x) {
    int best_sign = 1;
    BlockCell best = x;
    std::string best_key = x.key();
    for (int j = 1; j < x.l(); ++j) {
        auto [sg, y] = block_rotate(x, j);
        std::string k = y.key();
        if (k < best_key) {
            best_key = std::move(k);
            best = y;
            best_sign = sg;
        }
    }
    return {best_sign, best};
}

/** Boundary: minus the cyclic sum of first-pair merges. */
inline std::vector<std::pair<int, BlockCell>> block_boundary(const BlockCell& x) {
    std::vector<std::pair<int, BlockCell>> out;
    int l = x.l();
    if (l < 2) return out;
    for (int j = 0; j < l; ++j) {
        auto [rot_sign, y] = block_rotate(x, j);
        BlockCell z;
        z.sizes.push_back(y.sizes[0] + y.sizes[1]);
        for (int i = 2; i < l; ++i) z.sizes.push_back(y.sizes[i]);
        z.sigma = y.sigma;
        out.emplace_back(-rot_sign, std::move(z));
    }
    return out;
}

struct FreeModuleComplex {
    int n = 0;
    std::vector<std::vector<BlockCell>> cells;
    ChainComplex cc;
    std::map<std::string, std::pair<int, int>> idx;

    std::pair<int, SVec> locate(const BlockCell& x) const {
        auto [sg, c] = block_canon(x);
        auto [d, j] = idx.at(c.key());
        return {d, SVec{{j, Q(sg)}}};
    }
};

inline FreeModuleComplex free_module_complex(int n) {
    FreeModuleComplex o;
    o.n = n;
    o.cc.name = "block-complex(" + std::to_string(n) + ")";
    o.cells.assign(n, {});
    std::set<std::string> seen;
    auto perms = all_perms(n);
    std::vector<int> comp;
    auto rec = [&](auto&& self, int left) -> void {
        if (left == 0) {
            for (const auto& s : perms) {
                BlockCell x{comp, s};
                auto [sg, c] = block_canon(x);
                (void)sg;
                if (seen.insert(c.key()).second) o.cells[c.degree()].push_back(c);
            }
            return;
        }
        for (int m = 1; m <= left; ++m) {
            comp.push_back(m);
            self(self, left - m);
            comp.pop_back();
        }
    };
    rec(rec, n);
    o.cc.basis.assign(n, {});
    o.cc.bnd.assign(n, {});
    for (int d = 0; d < n; ++d) {
        std::sort(o.cells[d].begin(), o.cells[d].end());
        for (size_t j = 0; j < o.cells[d].size(); ++j) {
            o.idx[o.cells[d][j].key()] = {d, static_cast<int>(j)};
            std::string lab;
            for (int m : o.cells[d][j].sizes) lab += std::to_string(m) + "|";
            Perm inv = o.cells[d][j].sigma.inverse();
            lab += "w=";
            for (int i = 1; i <= n; ++i) lab += std::to_string(inv(i));
            o.cc.basis[d].push_back(lab);
        }
        o.cc.bnd[d].assign(o.cells[d].size(), SVec{});
    }
    for (int d = 1; d < n; ++d)
        for (size_t j = 0; j < o.cells[d].size(); ++j) {
            SVec& row = o.cc.bnd[d][j];
            for (const auto& [sg, y] : block_boundary(o.cells[d][j])) {
                auto [dd, v] = o.locate(y);
                (void)dd;
                for (const auto& [k, c] : v) row[k] += Q(sg) * c;
            }
            for (auto it = row.begin(); it != row.end();)
                it = (it->second == 0) ? row.erase(it) : std::next(it);
        }
    return o;
}

/**
 * The comparison map from the block-merge complex onto the symmetrized
 * simplex complex: the generator of degree l-1 goes to the top cell of the
 * simplex on l vertices composed with identities of the block sizes, then
 * pushed through the group action.
 */
inline ChainMap simplex_comparison(const FreeModuleComplex& f, const DBar& db) {
    ChainMap w;
    w.src = &f.cc;
    w.dst = &db.cc;
    w.mat.assign(f.cc.top() + 1, {});
    for (int d = 0; d <= f.cc.top(); ++d) {
        w.mat[d].assign(f.cc.dim(d), SVec{});
        for (size_t j = 0; j < f.cc.dim(d); ++j) {
            const BlockCell& x = f.cells[d][j];
            int l = x.l();
            DTerm gen;
            gen.sign = 1;
            for (int i = 1; i <= l; ++i) gen.sub.push_back(i);
            gen.sigma = Perm::id(l);
            std::vector<Perm> parts;
            for (int m : x.sizes) parts.push_back(Perm::id(m));
            DTerm t = dbar_nu(gen, parts);
            t = dbar_act(t, x.sigma);
            w.mat[d][j] = db.to_svec(t);
        }
    }
    return w;
}

}  // namespace hedra
