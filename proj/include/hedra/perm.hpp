#pragma once

/**
 * Permutations (one-indexed, image form), signs and graded Koszul signs,
 * cyclic rotations and cosets Z_n\Sigma_n, block permutations.
 *
 * Composition convention: compose(s, t) = s∘t, i.e. t applied first —
 * (s·t)(i) = s(t(i)).
 */

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace hedra {

struct Perm {
    std::vector<int> img;  // img[i-1] = sigma(i), values 1..n

    Perm() = default;
    explicit Perm(std::vector<int> v) : img(std::move(v)) {}

    static Perm id(int n) {
        std::vector<int> v(n);
        std::iota(v.begin(), v.end(), 1);
        return Perm(std::move(v));
    }

    int n() const { return static_cast<int>(img.size()); }
    int operator()(int i) const { return img[i - 1]; }

    bool operator==(const Perm& o) const = default;
    auto operator<=>(const Perm& o) const = default;

    bool valid() const {
        std::vector<bool> seen(img.size(), false);
        for (int v : img) {
            if (v < 1 || v > n() || seen[v - 1]) return false;
            seen[v - 1] = true;
        }
        return true;
    }

    Perm inverse() const {
        std::vector<int> v(img.size());
        for (int i = 1; i <= n(); ++i) v[img[i - 1] - 1] = i;
        return Perm(std::move(v));
    }

    int sign() const {
        // parity by counting inversions
        int inv = 0;
        for (int i = 0; i < n(); ++i)
            for (int j = i + 1; j < n(); ++j)
                if (img[i] > img[j]) ++inv;
        return (inv % 2 == 0) ? 1 : -1;
    }
};

/** (s·t)(i) = s(t(i)) : t first, then s. */
inline Perm compose(const Perm& s, const Perm& t) {
    assert(s.n() == t.n());
    std::vector<int> v(s.img.size());
    for (int i = 1; i <= s.n(); ++i) v[i - 1] = s(t(i));
    return Perm(std::move(v));
}

inline std::vector<Perm> all_perms(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::vector<Perm> out;
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

/** Cyclic rotation by j: i ↦ ((i-1+j) mod n)+1. rotation(n,1) = (2,3,…,n,1). */
inline Perm rotation(int n, int j) {
    std::vector<int> v(n);
    for (int i = 1; i <= n; ++i) v[i - 1] = ((i - 1 + j) % n + n) % n + 1;
    return Perm(std::move(v));
}

/**
 * Graded Koszul sign ε(σ; degrees): the sign produced by reordering
 * a_1 ∧ ⋯ ∧ a_n into a_{σ(1)} ∧ ⋯ ∧ a_{σ(n)}: product of (-1)^{d_i·d_j}
 * over pairs appearing out of order in the target.
 */
inline int koszul_sign(const Perm& s, const std::vector<int>& degs) {
    if (static_cast<int>(degs.size()) != s.n())
        throw std::invalid_argument("koszul_sign: arity mismatch");
    int sign = 1;
    for (int k = 0; k < s.n(); ++k)
        for (int l = k + 1; l < s.n(); ++l)
            if (s.img[k] > s.img[l] && (degs[s.img[k] - 1] % 2) && (degs[s.img[l] - 1] % 2))
                sign = -sign;
    return sign;
}

/** χ(σ; degrees) = sgn(σ)·ε(σ; degrees). */
inline int chi_sign(const Perm& s, const std::vector<int>& degs) {
    return s.sign() * koszul_sign(s, degs);
}

/**
 * Left coset in Z_n\Σ_n: the canonical representative is the unique rotation
 * ζ·σ with (ζ·σ)(1) = 1; it is stored as the element of Σ_{n-1} obtained by
 * dropping the fixed first column (i ↦ rep(i+1) - 1).
 */
struct CyclicCoset {
    int arity = 0;
    Perm reduced;  // element of Σ_{arity-1} (empty when arity == 1)

    bool operator==(const CyclicCoset& o) const = default;
    auto operator<=>(const CyclicCoset& o) const = default;

    /** The canonical representative in Σ_n (with rep(1)=1). */
    Perm rep() const {
        std::vector<int> v(arity);
        v[0] = 1;
        for (int i = 2; i <= arity; ++i) v[i - 1] = reduced(i - 1) + 1;
        return Perm(std::move(v));
    }
};

inline CyclicCoset coset_project(const Perm& s) {
    int n = s.n();
    int j = 0;
    // find rotation with (rotation(n,j)·s)(1) = s(1)+j ≡ 1 (mod n)
    j = (1 - s(1) % n + n) % n;
    Perm r = compose(rotation(n, j), s);
    assert(r(1) == 1);
    std::vector<int> v(n - 1);
    for (int i = 2; i <= n; ++i) v[i - 2] = r(i) - 1;
    return CyclicCoset{n, Perm(std::move(v))};
}

inline std::vector<CyclicCoset> all_cosets(int n) {
    std::vector<CyclicCoset> out;
    for (const Perm& t : all_perms(n - 1 > 0 ? n - 1 : 0))
        out.push_back(CyclicCoset{n, t});
    return out;
}

/** τ_1 ⊕ ⋯ ⊕ τ_l acting on consecutive blocks. */
inline Perm direct_sum(const std::vector<Perm>& parts) {
    std::vector<int> v;
    int off = 0;
    for (const Perm& p : parts) {
        for (int i = 1; i <= p.n(); ++i) v.push_back(off + p(i));
        off += p.n();
    }
    return Perm(std::move(v));
}

/**
 * Block permutation σ(m_1,…,m_l) ∈ Σ_{m_1+⋯+m_l}: permutes l consecutive
 * blocks of the given sizes the way σ permutes 1..l (block i moves, as a
 * whole and in order, to the slot σ(i) of the target arrangement).
 */
inline Perm block_perm(const Perm& s, const std::vector<int>& sizes) {
    assert(static_cast<int>(sizes.size()) == s.n());
    int l = s.n();
    int total = std::accumulate(sizes.begin(), sizes.end(), 0);
    // offset of block i in the target = sum of sizes of blocks j with σ(j)<σ(i)
    std::vector<int> target_off(l, 0);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j)
            if (s.img[j] < s.img[i]) target_off[i] += sizes[j];
    std::vector<int> v(total);
    int pos = 0;
    for (int i = 0; i < l; ++i)
        for (int k = 0; k < sizes[i]; ++k, ++pos) v[pos] = target_off[i] + k + 1;
    return Perm(std::move(v));
}

/** Composition in the associative operad on its permutation basis. */
inline Perm gamma_Ass(const Perm& s, const std::vector<Perm>& parts) {
    std::vector<int> sizes;
    for (const Perm& p : parts) sizes.push_back(p.n());
    return compose(block_perm(s, sizes), direct_sum(parts));
}

}  // namespace hedra
