#pragma once

/**
 * Finite posets with explicit order relation, covering relations, and
 * order-isomorphism checking via explicit maps.
 */

#include <cassert>
#include <cstddef>
#include <vector>

namespace hedra {

struct Poset {
    size_t n = 0;
    std::vector<std::vector<bool>> leq;  // leq[a][b] : a <= b

    explicit Poset(size_t size = 0)
        : n(size), leq(size, std::vector<bool>(size, false)) {
        for (size_t i = 0; i < n; ++i) leq[i][i] = true;
    }

    /** Covering pairs (a, b) with a < b and nothing strictly between. */
    std::vector<std::pair<size_t, size_t>> covers() const {
        std::vector<std::pair<size_t, size_t>> out;
        for (size_t a = 0; a < n; ++a)
            for (size_t b = 0; b < n; ++b) {
                if (a == b || !leq[a][b]) continue;
                bool cover = true;
                for (size_t c = 0; c < n && cover; ++c)
                    if (c != a && c != b && leq[a][c] && leq[c][b]) cover = false;
                if (cover) out.emplace_back(a, b);
            }
        return out;
    }

    bool antisymmetric() const {
        for (size_t a = 0; a < n; ++a)
            for (size_t b = a + 1; b < n; ++b)
                if (leq[a][b] && leq[b][a]) return false;
        return true;
    }
};

/**
 * Checks that the bijection f (and implicitly its inverse) is an order
 * isomorphism: a <= b in P iff f(a) <= f(b) in Q. On failure, *witness
 * receives the first offending pair.
 */
inline bool is_order_iso(const Poset& p, const Poset& q,
                         const std::vector<size_t>& f,
                         std::pair<size_t, size_t>* witness = nullptr) {
    if (p.n != q.n || f.size() != p.n) return false;
    std::vector<bool> hit(q.n, false);
    for (size_t a = 0; a < p.n; ++a) {
        if (f[a] >= q.n || hit[f[a]]) return false;  // not a bijection
        hit[f[a]] = true;
    }
    for (size_t a = 0; a < p.n; ++a)
        for (size_t b = 0; b < p.n; ++b)
            if (p.leq[a][b] != q.leq[f[a]][f[b]]) {
                if (witness) *witness = {a, b};
                return false;
            }
    return true;
}

}  // namespace hedra
