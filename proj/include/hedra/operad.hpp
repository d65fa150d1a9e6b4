#pragma once
// The associative operad on its permutation basis, the cyclic-word cyclic
// structure, the module of cyclic words, unital extensions with their
// degeneracies, modules associated to cyclic operads, and suspension of
// graded collections.

#include <hedra/perm.hpp>
#include <hedra/qlin.hpp>

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hedra {

// --------------------------------------------------------------- Ass / Cycl

/** Index of a permutation in the all_perms(n) (lexicographic) basis. */
inline int perm_index(const Perm& s) {
    // Lehmer code
    int n = s.n(), idx = 0;
    std::vector<long> factorial(n + 1, 1);
    for (int i = 1; i <= n; ++i) factorial[i] = factorial[i - 1] * i;
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j)
            if (s.img[j] < s.img[i]) ++smaller;
        idx += smaller * factorial[n - 1 - i];
    }
    return idx;
}

inline int coset_index(const CyclicCoset& c) {
    return c.arity <= 1 ? 0 : perm_index(c.reduced);
}

/** nu for the module of cyclic words over Ass: compose, then project. */
inline CyclicCoset nu_Cycl(const CyclicCoset& x, const std::vector<Perm>& parts) {
    return coset_project(gamma_Ass(x.rep(), parts));
}

// ---------------------------------------------------- cyclic structure on Ass

/**
 * The extended symmetric-group action making Ass cyclic: sigma in Sigma_n
 * is the cyclic word (0, sigma^{-1}(1), ..., sigma^{-1}(n)) on letters 0..n;
 * rho in Sigma_{n+1} (permuting 0..n, with images stored 1-based as
 * rho.img[i] = image of letter i-1, plus 1) relabels letters, then the word
 * is rotated so that 0 leads.
 */
inline Perm cyclic_act_Ass(const Perm& s, const Perm& rho) {
    int n = s.n();
    if (rho.n() != n + 1) throw std::invalid_argument("cyclic_act_Ass: need Sigma_{n+1}");
    Perm sinv = s.inverse(), rinv = rho.inverse();
    std::vector<int> w(n + 1);  // the cyclic word, letters 0..n
    w[0] = 0;
    for (int i = 1; i <= n; ++i) w[i] = sinv(i);
    for (int i = 0; i <= n; ++i) w[i] = rinv(w[i] + 1) - 1;  // relabel
    int z = 0;
    while (w[z] != 0) ++z;  // rotate so 0 leads
    std::vector<int> v(n);
    for (int i = 1; i <= n; ++i) v[w[(z + i) % (n + 1)] - 1] = i;  // invert back
    return Perm(std::move(v));
}

/** The cycle tau_n = (0 1 ... n) in Sigma_{n+1}, letter i -> i+1 mod n+1. */
inline Perm tau_cycle(int n) {
    std::vector<int> v(n + 1);
    for (int i = 0; i <= n; ++i) v[i] = (i + 1) % (n + 1) + 1;
    return Perm(std::move(v));
}

/** Embed sigma in Sigma_n as the element of Sigma_{n+1} fixing letter 0. */
inline Perm fix_zero(const Perm& s) {
    std::vector<int> v(s.n() + 1);
    v[0] = 1;
    for (int i = 1; i <= s.n(); ++i) v[i] = s(i) + 1;
    return Perm(std::move(v));
}

/** p . tau_n through the cyclic structure. */
inline Perm tau_act(const Perm& p) { return cyclic_act_Ass(p, tau_cycle(p.n())); }

/**
 * Check both cyclic-operad axioms for the cyclic-word structure on Ass:
 * the extension property, tau_1(1) = 1, and
 * gamma(p; q, 1,...,1).tau = gamma(q.tau; 1,...,1, p.tau) (degree 0).
 */
inline bool verify_cyclic_Ass(int cap, std::string* witness = nullptr) {
    // tau_1 fixes the unit
    if (tau_act(Perm::id(1)) != Perm::id(1)) {
        if (witness) *witness = "tau_1 moves the unit";
        return false;
    }
    // extension: restriction to Sigma_n is the regular right action
    for (int n = 1; n <= cap; ++n)
        for (const auto& s : all_perms(n))
            for (const auto& r : all_perms(n))
                if (cyclic_act_Ass(s, fix_zero(r)) != compose(s, r)) {
                    if (witness) *witness = "restriction differs at arity " + std::to_string(n);
                    return false;
                }
    // action property
    for (int n = 1; n <= 3; ++n) {
        auto big = all_perms(n + 1);
        for (const auto& s : all_perms(n))
            for (const auto& r1 : big)
                for (const auto& r2 : big)
                    if (cyclic_act_Ass(cyclic_act_Ass(s, r1), r2) !=
                        cyclic_act_Ass(s, compose(r1, r2))) {
                        if (witness) *witness = "not an action at arity " + std::to_string(n);
                        return false;
                    }
    }
    // axiom (ii)
    for (int m = 1; m + 1 <= cap; ++m)
        for (int n = 1; m + n - 1 <= cap; ++n)
            for (const auto& p : all_perms(m))
                for (const auto& q : all_perms(n)) {
                    std::vector<Perm> parts(m, Perm::id(1));
                    parts[0] = q;
                    Perm lhs = tau_act(gamma_Ass(p, parts));
                    std::vector<Perm> parts2(n, Perm::id(1));
                    parts2[n - 1] = tau_act(p);
                    Perm rhs = gamma_Ass(tau_act(q), parts2);
                    if (lhs != rhs) {
                        if (witness)
                            *witness = "axiom (ii) fails at m=" + std::to_string(m) +
                                       " n=" + std::to_string(n);
                        return false;
                    }
                }
    return true;
}

// ----------------------------------------------------- unital Ass and Comm

/**
 * Degeneracy s_i on Ass(n): plug the algebra unit into input i.  On the
 * word model (sigma is the product a_{sigma^{-1}(1)} ... a_{sigma^{-1}(n)})
 * this deletes letter i and standardizes.
 */
inline Perm degeneracy_Ass(const Perm& s, int i) {
    int n = s.n();
    Perm sinv = s.inverse();
    std::vector<int> word;
    for (int k = 1; k <= n; ++k)
        if (sinv(k) != i) word.push_back(sinv(k) > i ? sinv(k) - 1 : sinv(k));
    std::vector<int> v(n - 1);
    for (int pos = 0; pos < n - 1; ++pos) v[word[pos] - 1] = pos + 1;
    return Perm(std::move(v));
}

// -------------------------------------------- module associated to cyclic Ass

/**
 * Elements of the associated module M(n+1) = UAss(n): either a permutation
 * (n >= 1) or the arity-0 generator (n = 0, the empty optional).
 */
using MAss = std::optional<Perm>;

/** psi(n): Ass(n) -> M(n) = UAss(n-1), p |-> gamma(p.tau; 1,...,1, theta). */
inline MAss psi_Ass(const Perm& p) {
    int n = p.n();
    Perm pt = tau_act(p);
    if (n == 1) return std::nullopt;  // s_1 of the arity-1 unit is theta
    return degeneracy_Ass(pt, n);
}

/**
 * The structure map of the associated module: first compose the tail slots
 * through x (which has one slot fewer than the module arity), then feed the
 * head argument through the rotated composition.
 */
inline MAss nu_MAss(const MAss& x, const std::vector<Perm>& parts) {
    // tail composition: slots 2..end act through x
    std::vector<Perm> tail(parts.begin() + 1, parts.end());
    MAss y;
    if (x.has_value()) {
        y = gamma_Ass(*x, tail);
    } else {
        if (!tail.empty()) throw std::invalid_argument("nu_MAss: theta has one slot");
        y = std::nullopt;
    }
    const Perm& p0 = parts[0];
    int m0 = p0.n();
    if (m0 == 1 && p0 == Perm::id(1)) return y;  // unit in the head slot
    // gamma(p0.tau; 1,...,1, y) with y in the last slot; when y is theta this
    // is the top degeneracy
    Perm p0t = tau_act(p0);
    if (!y.has_value()) return degeneracy_Ass(p0t, m0);
    std::vector<Perm> parts2(m0, Perm::id(1));
    parts2[m0 - 1] = *y;
    return gamma_Ass(p0t, parts2);
}

// ------------------------------------------------------------------- Comm

/** Comm(n) is one-dimensional; the module associated to UComm is Comm as a
 * module over itself — each structure map sends basis to basis, so the only
 * content is arity bookkeeping, done inline in the tests. */

// ----------------------------------------------------- graded collections

/** A finite graded collection with explicit right action matrices. */
struct Collection {
    int cap = 0;
    std::vector<std::vector<std::string>> labels;  // per arity 0..cap
    std::vector<std::vector<int>> degs;
    std::function<std::vector<SVec>(int, const Perm&)> act;

    size_t dim(int n) const { return labels[n].size(); }
};

/** Cycl as a collection: cosets, degree 0, right action on representatives. */
inline Collection collection_Cycl(int cap) {
    Collection c;
    c.cap = cap;
    c.labels.resize(cap + 1);
    c.degs.resize(cap + 1);
    for (int n = 1; n <= cap; ++n)
        for (const auto& co : all_cosets(n)) {
            std::string lab = "[";
            Perm r = co.rep();
            for (int i = 1; i <= n; ++i) lab += (i > 1 ? " " : "") + std::to_string(r(i));
            c.labels[n].push_back(lab + "]");
            c.degs[n].push_back(0);
        }
    c.act = [](int n, const Perm& rho) {
        std::vector<SVec> m;
        for (const auto& co : all_cosets(n))
            m.push_back(SVec{{coset_index(coset_project(compose(co.rep(), rho))), Q(1)}});
        return m;
    };
    return c;
}

/** (sE)(n) = sgn tensor E(n), degrees shifted up by n-1. */
inline Collection suspend(const Collection& e) {
    Collection s = e;
    for (int n = 0; n <= e.cap; ++n)
        for (auto& d : s.degs[n]) d += n - 1;
    auto base = e.act;
    s.act = [base](int n, const Perm& rho) {
        auto m = base(n, rho);
        if (rho.sign() < 0)
            for (auto& row : m)
                for (auto& [k, c] : row) c = -c;
        return m;
    };
    return s;
}

/** Inverse of suspend. */
inline Collection desuspend(const Collection& e) {
    Collection s = suspend(e);  // sgn twist is an involution
    for (int n = 0; n <= e.cap; ++n)
        for (auto& d : s.degs[n]) d -= 2 * (n - 1);
    return s;
}

}  // namespace hedra
