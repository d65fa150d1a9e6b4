#pragma once

/**
 * Rooted planar trees with every internal vertex at least binary; leaves are
 * ordered left to right. A leaf is a tree with no children. These index the
 * faces of the associahedron (via bracketings) and the tree bases of free
 * operads and cobar complexes.
 */

#include <cassert>
#include <compare>
#include <map>
#include <string>
#include <vector>

namespace hedra {

struct PTree {
    std::vector<PTree> ch;  // empty = leaf

    bool is_leaf() const { return ch.empty(); }

    int n_leaves() const {
        if (is_leaf()) return 1;
        int s = 0;
        for (const auto& c : ch) s += c.n_leaves();
        return s;
    }

    int n_vert() const {  // internal vertices
        if (is_leaf()) return 0;
        int s = 1;
        for (const auto& c : ch) s += c.n_vert();
        return s;
    }

    bool at_least_binary() const {
        if (is_leaf()) return true;
        if (ch.size() < 2) return false;
        for (const auto& c : ch)
            if (!c.at_least_binary()) return false;
        return true;
    }

    bool is_binary() const {
        if (is_leaf()) return true;
        if (ch.size() != 2) return false;
        return ch[0].is_binary() && ch[1].is_binary();
    }

    /** Structural encoding, e.g. "*" (leaf), "(**)", "((**)*)". */
    std::string encode() const {
        if (is_leaf()) return "*";
        std::string s = "(";
        for (const auto& c : ch) s += c.encode();
        return s + ")";
    }

    bool operator==(const PTree& o) const { return ch == o.ch; }
    std::strong_ordering operator<=>(const PTree& o) const {
        if (auto c = ch.size() <=> o.ch.size(); c != 0) return c;
        for (size_t i = 0; i < ch.size(); ++i)
            if (auto c = ch[i] <=> o.ch[i]; c != 0) return c;
        return std::strong_ordering::equal;
    }
};

inline PTree leaf() { return PTree{}; }

inline PTree corolla(int n) {
    assert(n >= 2);
    PTree t;
    t.ch.assign(n, PTree{});
    return t;
}

/** Replace leaf i (1-based, left to right) of `parent` by `children[i-1]`. */
inline PTree graft(const PTree& parent, const std::vector<PTree>& children) {
    assert(static_cast<int>(children.size()) == parent.n_leaves());
    int next = 0;
    auto rec = [&](auto&& self, const PTree& t) -> PTree {
        if (t.is_leaf()) return children[next++];
        PTree r;
        r.ch.reserve(t.ch.size());
        for (const auto& c : t.ch) r.ch.push_back(self(self, c));
        return r;
    };
    return rec(rec, parent);
}

/** All planar rooted trees with n leaves, internal vertices >= binary. */
inline const std::vector<PTree>& enumerate_planar_trees(int n) {
    static std::map<int, std::vector<PTree>> memo;
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    std::vector<PTree> out;
    assert(n >= 1);
    if (n == 1) {
        out.push_back(leaf());
    } else {
        // root has k >= 2 children holding an ordered composition of n
        std::vector<std::vector<int>> comps;
        std::vector<int> cur;
        auto gen = [&](auto&& self, int rest) -> void {
            if (rest == 0) {
                if (cur.size() >= 2) comps.push_back(cur);
                return;
            }
            for (int m = 1; m <= rest; ++m) {
                if (m == rest && cur.empty()) { /* would be a unary root */ }
                cur.push_back(m);
                self(self, rest - m);
                cur.pop_back();
            }
        };
        gen(gen, n);
        for (const auto& comp : comps) {
            // cartesian product of subtree choices per child
            std::vector<PTree> partial;
            auto build = [&](auto&& self, size_t idx, PTree acc) -> void {
                if (idx == comp.size()) {
                    out.push_back(acc);
                    return;
                }
                for (const PTree& sub : enumerate_planar_trees(comp[idx])) {
                    PTree nxt = acc;
                    nxt.ch.push_back(sub);
                    self(self, idx + 1, nxt);
                }
            };
            build(build, 0, PTree{});
        }
    }
    return memo.emplace(n, std::move(out)).first->second;
}

}  // namespace hedra
