#pragma once
// Free operads on ungraded generator collections: decorated-tree bases,
// grafting composition, relabeling action, operadic ideals by saturation,
// quadratic quotients, evaluation onto the permutation operad, the
// quadratic pairing and annihilators, and submodule quotients of the free
// rank-one module over the permutation operad.

#include <hedra/operad.hpp>
#include <hedra/qlin.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace hedra {

/** One generator space: a basis of some arity with a right action. */
struct GenSpace {
    int arity = 0;
    std::vector<std::string> names;
    // image of each basis element under a permutation, as sparse rows
    std::function<std::vector<SVec>(const Perm&)> act;

    size_t dim() const { return names.size(); }
};

/** The regular representation k[Sigma_2]: basis {m, mS}, S the swap. */
inline GenSpace regular_E2() {
    GenSpace e;
    e.arity = 2;
    e.names = {"m", "mS"};
    e.act = [](const Perm& s) {
        std::vector<SVec> rows(2);
        // basis element j is the permutation with index j; right multiply
        auto ps = all_perms(2);
        for (int j = 0; j < 2; ++j) rows[j] = {{perm_index(compose(ps[j], s)), Q(1)}};
        return rows;
    };
    return e;
}

/** E* tensor sgn for a permutation-basis E: transposed action, sign twist. */
inline GenSpace dual_sgn(const GenSpace& e) {
    GenSpace d;
    d.arity = e.arity;
    for (const auto& n : e.names) d.names.push_back(n + "*");
    auto base = e.act;
    int dim = static_cast<int>(e.dim());
    d.act = [base, dim](const Perm& s) {
        auto m = base(s.inverse());  // transpose of the inverse action
        std::vector<SVec> t(dim);
        for (int j = 0; j < dim; ++j)
            for (const auto& [k, c] : m[j]) t[k][j] = s.sign() < 0 ? -c : c;
        return t;
    };
    return d;
}

// --------------------------------------------------------- decorated trees

/** Abstract rooted tree, leaves labeled; children sorted by least leaf. */
struct DTreeF {
    int leaf = 0;   // > 0: a leaf with this letter (no children, no label)
    int label = 0;  // generator basis index at this vertex
    std::vector<DTreeF> ch;

    bool operator==(const DTreeF& o) const {
        return leaf == o.leaf && label == o.label && ch == o.ch;
    }
    bool operator<(const DTreeF& o) const {
        if (leaf != o.leaf) return leaf < o.leaf;
        if (label != o.label) return label < o.label;
        return std::lexicographical_compare(ch.begin(), ch.end(), o.ch.begin(), o.ch.end());
    }

    bool is_leaf() const { return ch.empty(); }
    int min_leaf() const {
        if (is_leaf()) return leaf;
        return ch.front().min_leaf();  // children sorted by min leaf
    }
    int n_leaves() const {
        if (is_leaf()) return 1;
        int t = 0;
        for (const auto& c : ch) t += c.n_leaves();
        return t;
    }
    std::string str(const std::vector<std::string>& gen_names) const {
        if (is_leaf()) return std::to_string(leaf);
        std::string s = gen_names[label] + "(";
        for (size_t k = 0; k < ch.size(); ++k) s += (k ? "," : "") + ch[k].str(gen_names);
        return s + ")";
    }
};

struct FreeOperad {
    GenSpace e;  // a single generator arity (enough for the quadratic story)
    int cap = 0;
    std::vector<std::vector<DTreeF>> basis;  // [n], sorted
    std::vector<std::map<DTreeF, int>> index;

    FreeOperad(GenSpace gen, int cap_) : e(std::move(gen)), cap(cap_) {
        basis.resize(cap + 1);
        index.resize(cap + 1);
        for (int n = 1; n <= cap; ++n) {
            std::vector<int> leaves(n);
            std::iota(leaves.begin(), leaves.end(), 1);
            basis[n] = trees_on(leaves);
            std::sort(basis[n].begin(), basis[n].end());
            for (size_t j = 0; j < basis[n].size(); ++j) index[n][basis[n][j]] = static_cast<int>(j);
        }
    }

    size_t dim(int n) const { return basis[n].size(); }

    /** All decorated trees on a given sorted leaf set. */
    std::vector<DTreeF> trees_on(const std::vector<int>& s) const {
        std::vector<DTreeF> out;
        if (s.size() == 1) {
            out.push_back(DTreeF{s[0], 0, {}});
            return out;
        }
        // split into e.arity blocks, ordered by least element; block 1 owns s[0]
        std::vector<std::vector<int>> blocks(e.arity);
        auto rec = [&](auto&& self, size_t pos) -> void {
            if (pos == s.size()) {
                for (const auto& b : blocks)
                    if (b.empty()) return;
                std::vector<std::vector<int>> ord = blocks;
                std::sort(ord.begin(), ord.end());
                if (ord != blocks) return;  // enforce min-leaf child order
                std::vector<std::vector<DTreeF>> subs;
                for (const auto& b : blocks) subs.push_back(trees_on(b));
                std::vector<size_t> pick(e.arity, 0);
                for (;;) {
                    for (size_t lab = 0; lab < e.dim(); ++lab) {
                        DTreeF t;
                        t.label = static_cast<int>(lab);
                        for (int k = 0; k < e.arity; ++k) t.ch.push_back(subs[k][pick[k]]);
                        out.push_back(std::move(t));
                    }
                    int k = e.arity - 1;
                    while (k >= 0 && ++pick[k] == subs[k].size()) pick[k--] = 0;
                    if (k < 0) break;
                }
                return;
            }
            for (int b = 0; b < e.arity; ++b) {
                if (pos == 0 && b != 0) break;  // s[0] goes to block 1
                blocks[b].push_back(s[pos]);
                self(self, pos + 1);
                blocks[b].pop_back();
            }
        };
        rec(rec, 0);
        return out;
    }

    /** Graft parts into the leaves of t (parts[i-1] replaces leaf i), with
     * order-preserving relabeling; stays canonical, coefficient 1. */
    DTreeF graft(const DTreeF& t, const std::vector<DTreeF>& parts) const {
        std::vector<int> off(parts.size() + 1, 0);
        for (size_t i = 0; i < parts.size(); ++i) off[i + 1] = off[i] + parts[i].n_leaves();
        auto shift = [&](auto&& self, const DTreeF& u, int d) -> DTreeF {
            if (u.is_leaf()) return DTreeF{u.leaf + d, 0, {}};
            DTreeF v;
            v.label = u.label;
            for (const auto& c : u.ch) v.ch.push_back(self(self, c, d));
            return v;
        };
        auto rec = [&](auto&& self, const DTreeF& u) -> DTreeF {
            if (u.is_leaf()) return shift(shift, parts[u.leaf - 1], off[u.leaf - 1]);
            DTreeF v;
            v.label = u.label;
            for (const auto& c : u.ch) v.ch.push_back(self(self, c));
            return v;
        };
        return rec(rec, t);
    }

    /** Right action of rho on a basis tree: relabel leaves by rho^{-1},
     * re-sort children, acting on decorations by the sorting permutations. */
    SVec act_tree(const DTreeF& t, const Perm& rho) const {
        Perm rinv = rho.inverse();
        // returns a linear combination of canonical trees
        std::function<std::vector<std::pair<Q, DTreeF>>(const DTreeF&)> rec =
            [&](const DTreeF& u) -> std::vector<std::pair<Q, DTreeF>> {
            if (u.is_leaf()) return {{Q(1), DTreeF{rinv(u.leaf), 0, {}}}};
            // process children
            std::vector<std::vector<std::pair<Q, DTreeF>>> kids;
            for (const auto& c : u.ch) kids.push_back(rec(c));
            std::vector<std::pair<Q, DTreeF>> out;
            std::vector<size_t> pick(u.ch.size(), 0);
            for (;;) {
                Q coef = 1;
                std::vector<DTreeF> cs;
                for (size_t k = 0; k < u.ch.size(); ++k) {
                    coef *= kids[k][pick[k]].first;
                    cs.push_back(kids[k][pick[k]].second);
                }
                // sorting permutation pi: new position of child k is pi(k)
                std::vector<int> by_min(cs.size());
                std::iota(by_min.begin(), by_min.end(), 0);
                std::sort(by_min.begin(), by_min.end(),
                          [&](int a, int b) { return cs[a].min_leaf() < cs[b].min_leaf(); });
                std::vector<int> pi(cs.size());
                for (size_t k = 0; k < cs.size(); ++k) pi[by_min[k]] = static_cast<int>(k) + 1;
                std::vector<DTreeF> sorted(cs.size());
                for (size_t k = 0; k < cs.size(); ++k) sorted[pi[k] - 1] = cs[k];
                auto rows = e.act(Perm(pi));
                for (const auto& [lab, c2] : rows[u.label]) {
                    DTreeF v;
                    v.label = lab;
                    v.ch = sorted;
                    out.emplace_back(coef * c2, v);
                }
                int k = static_cast<int>(u.ch.size()) - 1;
                while (k >= 0 && ++pick[k] == kids[k].size()) pick[k--] = 0;
                if (k < 0) break;
            }
            return out;
        };
        SVec v;
        for (const auto& [c, tr] : rec(t)) v[index[tr.n_leaves()].at(tr)] += c;
        for (auto it = v.begin(); it != v.end();)
            it = (it->second == 0) ? v.erase(it) : std::next(it);
        return v;
    }

    std::vector<SVec> act(int n, const Perm& rho) const {
        std::vector<SVec> m;
        for (const auto& t : basis[n]) m.push_back(act_tree(t, rho));
        return m;
    }
};

/**
 * The operadic ideal generated by spanning vectors in arity `agen`,
 * saturated arity by arity under grafting and the group action.
 */
inline std::vector<RowSpace> operad_ideal(const FreeOperad& f, int agen,
                                          const std::vector<QVec>& gens) {
    std::vector<RowSpace> ideal;
    for (int n = 0; n <= f.cap; ++n) ideal.emplace_back(f.dim(n));
    auto close_action = [&](int n) {
        bool grew = true;
        while (grew) {
            grew = false;
            auto rows = ideal[n].basis;
            for (const auto& r : rows)
                for (const auto& s : all_perms(n)) {
                    QVec img(f.dim(n), Q(0));
                    for (size_t j = 0; j < f.dim(n); ++j) {
                        if (r[j] == 0) continue;
                        for (const auto& [k, c] : f.act_tree(f.basis[n][j], s)) img[k] += r[j] * c;
                    }
                    if (ideal[n].add(img)) grew = true;
                }
        }
    };
    for (const auto& g : gens) ideal[agen].add(g);
    close_action(agen);
    for (int n = agen + 1; n <= f.cap; ++n) {
        // graft an ideal element into one slot of a basis tree, or graft
        // basis trees into an ideal element
        for (int l = agen; l < n; ++l) {
            auto vrows = ideal[l].basis;
            if (vrows.empty()) continue;
            // ideal element at the root
            std::vector<std::vector<DTreeF>> parts(l);
            auto for_parts = [&](auto&& emit) {
                std::vector<int> ar(l, 1);
                auto rec = [&](auto&& self, int pos, int left) -> void {
                    if (pos == l) {
                        if (left != 0) return;
                        std::vector<size_t> pick(l, 0);
                        std::vector<const std::vector<DTreeF>*> pools;
                        for (int k = 0; k < l; ++k) pools.push_back(&f.basis[ar[k]]);
                        for (;;) {
                            std::vector<DTreeF> ps;
                            for (int k = 0; k < l; ++k) ps.push_back((*pools[k])[pick[k]]);
                            emit(ps);
                            int k = l - 1;
                            while (k >= 0 && ++pick[k] == pools[k]->size()) pick[k--] = 0;
                            if (k < 0) break;
                        }
                        return;
                    }
                    for (int a = 1; a <= left - (l - pos - 1); ++a) {
                        ar[pos] = a;
                        self(self, pos + 1, left - a);
                    }
                };
                rec(rec, 0, n);
            };
            for_parts([&](const std::vector<DTreeF>& ps) {
                for (const auto& r : vrows) {
                    QVec img(f.dim(n), Q(0));
                    for (size_t j = 0; j < f.dim(l); ++j)
                        if (r[j] != 0) img[f.index[n].at(f.graft(f.basis[l][j], ps))] += r[j];
                    ideal[n].add(img);
                }
            });
        }
        // ideal element inside one slot
        for (int l = 2; l < n; ++l)
            for (const auto& root : f.basis[l])
                for (int slot = 1; slot <= l; ++slot) {
                    int m = n - l + 1;  // arity of the ideal part
                    if (m < agen || ideal[m].dim() == 0) continue;
                    auto vrows = ideal[m].basis;
                    // other slots are single leaves (general fills are then
                    // reachable by further grafting, restored by iteration
                    // order: root trees range over all of f.basis[l])
                    std::vector<DTreeF> ps(l, DTreeF{1, 0, {}});
                    for (const auto& r : vrows) {
                        QVec img(f.dim(n), Q(0));
                        for (size_t j = 0; j < f.dim(m); ++j) {
                            if (r[j] == 0) continue;
                            ps[slot - 1] = f.basis[m][j];
                            img[f.index[n].at(f.graft(root, ps))] += r[j];
                        }
                        ideal[n].add(img);
                    }
                }
        close_action(n);
    }
    return ideal;
}

/** Evaluate a decorated tree onto the permutation operad (generator j of a
 * k[Sigma_2]-type space evaluates to the j-th permutation). */
inline Perm eval_tree_Ass(const DTreeF& t) {
    // word of letters in multiplication order
    std::function<std::vector<int>(const DTreeF&)> word = [&](const DTreeF& u) -> std::vector<int> {
        if (u.is_leaf()) return {u.leaf};
        auto ps = all_perms(static_cast<int>(u.ch.size()));
        const Perm& s = ps[u.label];
        Perm sinv = s.inverse();
        std::vector<int> w;
        for (int k = 1; k <= s.n(); ++k) {
            auto sub = word(u.ch[sinv(k) - 1]);
            w.insert(w.end(), sub.begin(), sub.end());
        }
        return w;
    };
    auto w = word(t);
    std::vector<int> v(w.size());
    for (size_t k = 0; k < w.size(); ++k) v[w[k] - 1] = static_cast<int>(k) + 1;
    return Perm(std::move(v));
}

/** Null space (as row vectors) of the span of `rows`. */
inline std::vector<QVec> null_space(std::vector<QVec> rows, size_t cols) {
    auto pivots = rref(rows);
    std::vector<char> is_pivot(cols, 0);
    for (size_t p : pivots) is_pivot[p] = 1;
    std::vector<QVec> out;
    for (size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        QVec v(cols, Q(0));
        v[fc] = 1;
        for (size_t r = 0; r < rows.size(); ++r) v[pivots[r]] = -rows[r][fc];
        out.push_back(std::move(v));
    }
    return out;
}

/**
 * Right submodule of the free rank-one module over the permutation operad
 * (whose arity-n part is k[Sigma_n]) generated by vectors in arity 2;
 * saturated by composition and the action.
 */
inline std::vector<RowSpace> module_ideal_Ass(int cap, const std::vector<QVec>& gens) {
    auto fct = [](int n) {
        long f = 1;
        for (int i = 2; i <= n; ++i) f *= i;
        return f;
    };
    std::vector<RowSpace> sub;
    for (int n = 0; n <= cap; ++n) sub.emplace_back(fct(n));
    for (const auto& g : gens) sub[2].add(g);
    for (int n = 2; n <= cap; ++n) {
        // close under the action
        bool grew = true;
        while (grew) {
            grew = false;
            auto rows = sub[n].basis;
            auto ps = all_perms(n);
            for (const auto& r : rows)
                for (const auto& s : ps) {
                    QVec img(fct(n), Q(0));
                    for (size_t j = 0; j < ps.size(); ++j)
                        if (r[j] != 0) img[perm_index(compose(ps[j], s))] += r[j];
                    if (sub[n].add(img)) grew = true;
                }
        }
        // push forward by composing with permutation parts
        if (n == cap) break;
        auto rows = sub[n].basis;
        auto ps = all_perms(n);
        for (const auto& r : rows)
            for (int slot = 1; slot <= n; ++slot)
                for (int m = 2; n + m - 1 <= cap; ++m)
                    for (const auto& p : all_perms(m)) {
                        std::vector<Perm> parts(n, Perm::id(1));
                        parts[slot - 1] = p;
                        QVec img(fct(n + m - 1), Q(0));
                        for (size_t j = 0; j < ps.size(); ++j)
                            if (r[j] != 0) img[perm_index(gamma_Ass(ps[j], parts))] += r[j];
                        sub[n + m - 1].add(img);
                    }
    }
    return sub;
}

/**
 * Degeneracy s_i on a binary decorated tree in arity 3: delete leaf i,
 * apply the augmentation weight to the vanished vertex's label.
 */
inline SVec degeneracy_tree(const FreeOperad& f, const DTreeF& t, int i,
                            const std::vector<Q>& s_of_label) {
    // find the parent of leaf i; replace the vertex by the sibling
    std::function<std::pair<bool, std::pair<Q, DTreeF>>(const DTreeF&)> rec =
        [&](const DTreeF& u) -> std::pair<bool, std::pair<Q, DTreeF>> {
        if (u.is_leaf()) return {false, {Q(0), u}};
        for (size_t k = 0; k < u.ch.size(); ++k)
            if (u.ch[k].is_leaf() && u.ch[k].leaf == i) {
                // binary vertex vanishes
                return {true, {s_of_label[u.label], u.ch[1 - k]}};
            }
        for (size_t k = 0; k < u.ch.size(); ++k) {
            auto [hit, res] = rec(u.ch[k]);
            if (hit) {
                DTreeF v = u;
                v.ch[k] = res.second;
                return {true, {res.first, v}};
            }
        }
        return {false, {Q(0), u}};
    };
    auto [hit, res] = rec(t);
    if (!hit) throw std::logic_error("degeneracy_tree: leaf not found");
    // relabel leaves j > i down by one, then re-canonicalize (child sorting
    // acts on decorations; acting by the identity does exactly that)
    DTreeF v = res.second;
    std::function<void(DTreeF&)> relab = [&](DTreeF& u) {
        if (u.is_leaf()) {
            if (u.leaf > i) --u.leaf;
            return;
        }
        for (auto& c : u.ch) relab(c);
    };
    relab(v);
    SVec out = f.act_tree(v, Perm::id(v.n_leaves()));
    for (auto& [k, c] : out) c *= res.first;
    return out;
}

}  // namespace hedra
