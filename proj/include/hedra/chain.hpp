#pragma once
// Graded chain complexes over Q with labeled bases, boundary verification,
// homology, chain maps, and cellular incidence checks.

#include <hedra/qlin.hpp>

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace hedra {

/**
 * A nonnegatively graded complex.  `bnd[d][j]` is the boundary of the j-th
 * basis element of degree d, a sparse vector over the degree d-1 basis.
 * Degree 0 boundaries must be empty.
 */
struct ChainComplex {
    std::string name;
    std::vector<std::vector<std::string>> basis;  // basis[d] = labels in degree d
    std::vector<std::vector<SVec>> bnd;           // bnd[d][j] over basis[d-1]

    int top() const { return static_cast<int>(basis.size()) - 1; }
    size_t dim(int d) const {
        return (d >= 0 && d <= top()) ? basis[d].size() : 0;
    }
    long total_dim() const {
        long t = 0;
        for (const auto& b : basis) t += static_cast<long>(b.size());
        return t;
    }

    /** Exact d.d == 0; on failure names the offending basis element. */
    bool d_squared_zero(std::string* witness = nullptr) const {
        for (int d = 2; d <= top(); ++d)
            for (size_t j = 0; j < dim(d); ++j) {
                SVec acc;
                for (const auto& [k, c] : bnd[d][j]) sv_axpy(acc, c, bnd[d - 1][k]);
                if (!acc.empty()) {
                    if (witness) *witness = "d^2 != 0 at deg " + std::to_string(d) + " [" + basis[d][j] + "]";
                    return false;
                }
            }
        return true;
    }

    /** Rank of the boundary matrix leaving degree d. */
    size_t bnd_rank(int d) const {
        if (d < 1 || d > top() || dim(d) == 0 || dim(d - 1) == 0) return 0;
        return sparse_rank(bnd[d], dim(d - 1));
    }

    /** Betti numbers over Q, degrees 0..top. */
    std::vector<long> homology_dims() const {
        std::vector<long> h;
        for (int d = 0; d <= top(); ++d)
            h.push_back(static_cast<long>(dim(d)) - static_cast<long>(bnd_rank(d)) -
                        static_cast<long>(bnd_rank(d + 1)));
        return h;
    }

    int index_of(int d, const std::string& label) const {
        for (size_t j = 0; j < dim(d); ++j)
            if (basis[d][j] == label) return static_cast<int>(j);
        return -1;
    }
};

/**
 * A degreewise linear map between complexes; `mat[d][j]` is the image of
 * source basis element j of degree d, over the target's degree-d basis.
 */
struct ChainMap {
    const ChainComplex* src = nullptr;
    const ChainComplex* dst = nullptr;
    std::vector<std::vector<SVec>> mat;

    SVec apply(int d, const SVec& v) const {
        SVec out;
        for (const auto& [j, c] : v) sv_axpy(out, c, mat[d][j]);
        return out;
    }

    /** Exact commutation with the boundaries. */
    bool verify(std::string* witness = nullptr) const {
        for (int d = 1; d <= src->top(); ++d)
            for (size_t j = 0; j < src->dim(d); ++j) {
                // f(d x)
                SVec fdx;
                for (const auto& [k, c] : src->bnd[d][j]) sv_axpy(fdx, c, mat[d - 1][k]);
                // d f(x)
                SVec dfx;
                for (const auto& [k, c] : mat[d][j]) sv_axpy(dfx, c, dst->bnd[d][k]);
                SVec diff = fdx;
                sv_axpy(diff, Q(-1), dfx);
                if (!diff.empty()) {
                    if (witness)
                        *witness = "not a chain map at deg " + std::to_string(d) + " [" +
                                   src->basis[d][j] + "]";
                    return false;
                }
            }
        return true;
    }

    /** Degreewise bijective with exactly one +-1 entry per row and column. */
    bool is_signed_bijection(std::string* witness = nullptr) const {
        for (int d = 0; d <= src->top(); ++d) {
            if (src->dim(d) != dst->dim(d)) {
                if (witness) *witness = "dimension mismatch at deg " + std::to_string(d);
                return false;
            }
            std::set<int> cols;
            for (size_t j = 0; j < src->dim(d); ++j) {
                if (mat[d][j].size() != 1 || boost::multiprecision::abs(mat[d][j].begin()->second) != 1) {
                    if (witness) *witness = "not one +-1 per row at deg " + std::to_string(d);
                    return false;
                }
                cols.insert(mat[d][j].begin()->first);
            }
            if (cols.size() != src->dim(d)) {
                if (witness) *witness = "columns collide at deg " + std::to_string(d);
                return false;
            }
        }
        return true;
    }

    static ChainMap identity(const ChainComplex& c) {
        ChainMap f;
        f.src = f.dst = &c;
        f.mat.resize(c.top() + 1);
        for (int d = 0; d <= c.top(); ++d)
            for (size_t j = 0; j < c.dim(d); ++j)
                f.mat[d].push_back(SVec{{static_cast<int>(j), Q(1)}});
        return f;
    }
};

/** Compose g after f. */
inline ChainMap compose(const ChainMap& g, const ChainMap& f) {
    ChainMap h;
    h.src = f.src;
    h.dst = g.dst;
    h.mat.resize(f.mat.size());
    for (int d = 0; d < static_cast<int>(f.mat.size()); ++d)
        for (const auto& row : f.mat[d]) h.mat[d].push_back(g.apply(d, row));
    return h;
}

/**
 * Cellular incidence: the boundary of each cell must have coefficient +-1
 * exactly on its prescribed codimension-1 cells and 0 elsewhere.
 * `faces_below[d][j]` is the set of degree d-1 indices geometrically below
 * cell j of degree d.
 */
inline bool incidence_check(const ChainComplex& c,
                            const std::vector<std::vector<std::set<int>>>& faces_below,
                            std::string* witness = nullptr) {
    for (int d = 1; d <= c.top(); ++d)
        for (size_t j = 0; j < c.dim(d); ++j) {
            std::set<int> support;
            for (const auto& [k, coef] : c.bnd[d][j]) {
                if (boost::multiprecision::abs(coef) != 1) {
                    if (witness)
                        *witness = "coefficient not +-1 at deg " + std::to_string(d) + " [" +
                                   c.basis[d][j] + "]";
                    return false;
                }
                support.insert(k);
            }
            if (support != faces_below[d][j]) {
                if (witness)
                    *witness = "support mismatch at deg " + std::to_string(d) + " [" +
                               c.basis[d][j] + "]";
                return false;
            }
        }
    return true;
}

}  // namespace hedra
