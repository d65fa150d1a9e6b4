#pragma once
// The symmetrized simplex: cellular chains on (n-1)! disjoint simplices,
// with its symmetric-group action and its module structure over the
// associative operad.
//
// A cell is <i_1 ... i_l> x [sigma]: an oriented subset of {1..n} (increasing
// order positive) and a class in Z_n\Sigma_n labeling the copy.

#include <hedra/chain.hpp>
#include <hedra/perm.hpp>

#include <map>
#include <string>
#include <vector>

namespace hedra {

/** One signed basis cell, with the copy label kept as a full permutation. */
struct DTerm {
    int sign = 1;
    std::vector<int> sub;  // strictly increasing subset of 1..n
    Perm sigma;            // in Sigma_n; only its class mod rotations matters
};

namespace detail {

/** Sort ascending in place; return the sign of the sorting permutation. */
inline int sort_sign(std::vector<int>& v) {
    int s = 1;
    for (size_t i = 0; i + 1 < v.size(); ++i)
        for (size_t j = 0; j + 1 < v.size() - i; ++j)
            if (v[j] > v[j + 1]) {
                std::swap(v[j], v[j + 1]);
                s = -s;
            }
    return s;
}

}  // namespace detail

/** Right action: (<i_1..i_l> x [sigma]) . rho = <rho^{-1}(i_*)> x [sigma rho]. */
inline DTerm dbar_act(const DTerm& x, const Perm& rho) {
    DTerm y;
    Perm inv = rho.inverse();
    for (int i : x.sub) y.sub.push_back(inv(i));
    y.sign = x.sign * detail::sort_sign(y.sub);
    y.sigma = compose(x.sigma, rho);
    return y;
}

/**
 * Module action nu(x; rho_1,...,rho_n): substitute the arity-m_i permutation
 * rho_i into slot i.  On the identity-labeled top generator with identity
 * arguments this is the simplicial inclusion sending vertex j to the first
 * position of block j; general values follow from equivariance.
 */
inline DTerm dbar_nu(const DTerm& x, const std::vector<Perm>& parts) {
    const int n = x.sigma.n();
    // split x = s * (x0 . sigma), where x0 carries the identity label
    std::vector<int> s0;
    for (int i : x.sub) s0.push_back(x.sigma(i));
    int sgn = x.sign * detail::sort_sign(s0);
    // slot i of x0 receives the part destined for slot sigma^{-1}... the
    // reordering convention is pinned by the module axioms (see tests)
    Perm inv = x.sigma.inverse();
    std::vector<Perm> q;          // part arriving at slot i of x0
    std::vector<int> sizes_q;     // its size
    std::vector<int> sizes_p;     // part sizes in the given order
    for (int i = 1; i <= n; ++i) {
        q.push_back(parts[inv(i) - 1]);
        sizes_q.push_back(parts[inv(i) - 1].n());
        sizes_p.push_back(parts[i - 1].n());
    }
    // nu(x0; identities): vertex j |-> 1 + sum of the sizes before slot j
    int total = 0;
    std::vector<int> off(n + 1, 0);
    for (int j = 1; j <= n; ++j) {
        off[j] = total;
        total += sizes_q[j - 1];
    }
    DTerm y;
    y.sign = sgn;
    for (int j : s0) y.sub.push_back(off[j] + 1);
    y.sigma = Perm::id(total);
    // other-slot equivariance, then the block version of sigma; the
    // composite (+q_1 ... q_n) . sigma(m_1,...,m_n) equals the usual
    // sigma(m)-first arrangement by naturality of block permutations
    y = dbar_act(y, direct_sum(q));
    y = dbar_act(y, block_perm(x.sigma, sizes_p));
    return y;
}

/** Comp map: insert the identity of arity m into slot i. */
inline DTerm dbar_comp(const DTerm& x, int i, int m) {
    std::vector<Perm> parts(x.sigma.n(), Perm::id(1));
    parts[i - 1] = Perm::id(m);
    return dbar_nu(x, parts);
}

/** The cellular chain complex of the symmetrized simplex, with indexing. */
struct DBar {
    int n = 0;
    ChainComplex cc;
    // per degree: (subset, reduced coset perm) -> basis index
    std::vector<std::map<std::pair<std::vector<int>, Perm>, int>> idx;

    explicit DBar(int n_) : n(n_) {
        cc.name = "simplex_complex(" + std::to_string(n) + ")";
        cc.basis.resize(n);
        cc.bnd.resize(n);
        idx.resize(n);
        auto cosets = all_cosets(n);
        // enumerate subsets by size
        std::vector<std::vector<std::vector<int>>> by_size(n + 1);
        for (unsigned m = 1; m < (1u << n); ++m) {
            std::vector<int> sub;
            for (int i = 1; i <= n; ++i)
                if ((m >> (i - 1)) & 1u) sub.push_back(i);
            by_size[sub.size()].push_back(std::move(sub));
        }
        for (int l = 1; l <= n; ++l)
            for (const auto& c : cosets)
                for (const auto& sub : by_size[l]) {
                    std::string lab = "<";
                    for (size_t k = 0; k < sub.size(); ++k)
                        lab += (k ? " " : "") + std::to_string(sub[k]);
                    lab += ">[";
                    Perm r = c.rep();
                    for (int i = 1; i <= n; ++i) lab += (i > 1 ? " " : "") + std::to_string(r(i));
                    lab += "]";
                    idx[l - 1][{sub, c.reduced}] = static_cast<int>(cc.basis[l - 1].size());
                    cc.basis[l - 1].push_back(lab);
                }
        // boundary: alternating vertex deletion, same copy
        for (int l = 2; l <= n; ++l)
            for (const auto& c : cosets)
                for (const auto& sub : by_size[l]) {
                    SVec b;
                    for (size_t k = 0; k < sub.size(); ++k) {
                        std::vector<int> face = sub;
                        face.erase(face.begin() + k);
                        Q coef = (k % 2 == 0) ? 1 : -1;  // (-1)^{k+1} with 1-based k
                        b[idx[l - 2].at({face, c.reduced})] += coef;
                    }
                    cc.bnd[l - 1].push_back(std::move(b));
                }
    }

    /** Index of a term's cell (degree, position); canonicalizes the copy. */
    std::pair<int, int> index(const DTerm& t) const {
        int d = static_cast<int>(t.sub.size()) - 1;
        return {d, idx[d].at({t.sub, coset_project(t.sigma).reduced})};
    }

    SVec to_svec(const DTerm& t) const { return SVec{{index(t).second, Q(t.sign)}}; }

    /** The action of rho as a chain map (a signed permutation per degree). */
    ChainMap action(const Perm& rho) const {
        ChainMap f;
        f.src = f.dst = &cc;
        f.mat.resize(n);
        for (int d = 0; d < n; ++d)
            for (const auto& [key, j] : idx[d]) {
                DTerm t{1, key.first, CyclicCoset{n, key.second}.rep()};
                f.mat[d].resize(idx[d].size());
                f.mat[d][j] = to_svec(dbar_act(t, rho));
            }
        return f;
    }
};

inline ChainComplex simplex_complex(int n) { return DBar(n).cc; }

}  // namespace hedra
