#pragma once
// The filtration of the rake complex by the number of blocks, its exact
// spectral sequence pages, and the degeneration report identifying the
// first page row with the block-merge complex of the free module.

#include <hedra/cobar.hpp>

#include <string>
#include <vector>

namespace hedra {

/**
 * The rake complex of arity n filtered by F_p = span of cells with at most
 * p+1 blocks, with exact page computations.  Pages are computed from the
 * classical cycle spaces Z^r_{pq} = {x in F_p, total degree p+q, with
 * boundary in F_{p-r}} via
 *   E^r_{pq} = Z^r_{pq} / (Z^{r-1}_{p-1,q+1} + d Z^{r-1}_{p+r-1,q-r+2}).
 */
struct FilteredRake {
    int n = 0;
    ModuleCobar m;
    std::vector<std::vector<int>> weight;  // weight[d][j] = l-1 of the cell

    explicit FilteredRake(int n_) : n(n_), m(cobar_module(n_)) {
        weight.resize(m.cc.top() + 1);
        for (int d = 0; d <= m.cc.top(); ++d)
            for (const auto& x : m.cells[d]) weight[d].push_back(x.l() - 1);
    }

    /** Every boundary term stays within the filtration level of its cell. */
    bool filtration_closed(std::string* witness = nullptr) const {
        for (int d = 1; d <= m.cc.top(); ++d)
            for (size_t j = 0; j < m.cc.dim(d); ++j)
                for (const auto& [k, c] : m.cc.bnd[d][j])
                    if (weight[d - 1][k] > weight[d][j]) {
                        if (witness)
                            *witness = "filtration violated at deg " + std::to_string(d) +
                                       " [" + m.cc.basis[d][j] + "]";
                        return false;
                    }
        return true;
    }

    /** Basis of Z^r_{pq} as coefficient vectors over the cells of degree
     * p+q with weight <= p (the basis of F_p in that degree). */
    std::vector<QVec> cycle_space(int r, int p, int q) const {
        int d = p + q;
        if (d < 0 || d > m.cc.top() || p < 0) return {};
        std::vector<int> cols;  // cells of F_p in degree d
        for (size_t j = 0; j < m.cc.dim(d); ++j)
            if (weight[d][j] <= p) cols.push_back(static_cast<int>(j));
        if (cols.empty()) return {};
        // constraints: boundary components of weight > p-r must vanish
        std::vector<int> high;
        if (d >= 1)
            for (size_t k = 0; k < m.cc.dim(d - 1); ++k)
                if (weight[d - 1][k] > p - r) high.push_back(static_cast<int>(k));
        std::map<int, size_t> high_row;
        for (size_t i = 0; i < high.size(); ++i) high_row[high[i]] = i;
        std::vector<QVec> constr(high.size(), QVec(cols.size(), Q(0)));
        for (size_t cj = 0; cj < cols.size(); ++cj) {
            if (d < 1) break;
            for (const auto& [k, c] : m.cc.bnd[d][cols[cj]]) {
                auto it = high_row.find(k);
                if (it != high_row.end()) constr[it->second][cj] = c;
            }
        }
        // kernel of the constraint matrix
        auto pivots = rref(constr);
        std::vector<bool> is_pivot(cols.size(), false);
        for (size_t c : pivots) is_pivot[c] = true;
        std::vector<QVec> ker;
        for (size_t fc = 0; fc < cols.size(); ++fc) {
            if (is_pivot[fc]) continue;
            QVec v(m.cc.dim(d), Q(0));
            v[cols[fc]] = 1;
            for (size_t r2 = 0; r2 < pivots.size(); ++r2)
                v[cols[pivots[r2]]] = -constr[r2][fc];
            ker.push_back(std::move(v));
        }
        return ker;
    }

    /** Image of the boundary applied to a list of chains of degree d. */
    std::vector<QVec> boundary_of(const std::vector<QVec>& xs, int d) const {
        std::vector<QVec> out;
        if (d < 1 || d > m.cc.top()) return out;
        for (const auto& x : xs) {
            QVec b(m.cc.dim(d - 1), Q(0));
            for (size_t j = 0; j < x.size(); ++j)
                if (x[j] != 0)
                    for (const auto& [k, c] : m.cc.bnd[d][j]) b[k] += x[j] * c;
            out.push_back(std::move(b));
        }
        return out;
    }

    /** Exact dimension of the page entry E^r_{pq}. */
    long page_dim(int r, int p, int q) const {
        auto z = cycle_space(r, p, q);
        if (z.empty()) return 0;
        RowSpace den(m.cc.dim(p + q));
        for (const auto& v : cycle_space(r - 1, p - 1, q + 1)) den.add(v);
        for (const auto& b : boundary_of(cycle_space(r - 1, p + r - 1, q - r + 2), p + q + 1))
            den.add(b);
        RowSpace num = den;
        long extra = 0;
        for (const auto& v : z)
            if (num.add(v)) ++extra;
        return extra;
    }
};

/** Outcome of the degeneration analysis for one arity. */
struct SpectralReport {
    int n = 0;
    bool filtration_closed = false;
    bool e1_vanishes_above_row_zero = false;  // E^1_{pq} = 0 for q >= 1
    std::vector<long> e1_row;                 // E^1_{p0} dims, p = 0..n-1
    bool e1_row_matches_blocks = false;       // equal to block-complex dims
    bool d1_matches_block_boundary = false;   // transported d^1 = block boundary
    bool e2_concentrated = false;             // E^2 = (n-1)! at (0,0) only
    bool collapsed = false;                   // E^2 = E^3 (hence E^infinity)
    long e2_total = 0;
    std::string witness;

    bool ok() const {
        return filtration_closed && e1_vanishes_above_row_zero &&
               e1_row_matches_blocks && d1_matches_block_boundary &&
               e2_concentrated && collapsed;
    }
};

/** Image of a bottom-row rake cell in the block complex (forget trees).
 * The identification carries the sign (-1)^{l(l-1)/2}: the merge signs of
 * the two complexes differ by (-1)^{l+1} per block lost, and this factor
 * telescopes the difference away. */
inline std::pair<int, SVec> forget_trees(const FreeModuleComplex& f, const RakeCell& x) {
    BlockCell b{x.sizes(), x.sigma};
    auto [d, v] = f.locate(b);
    int l = x.l();
    if ((l * (l - 1) / 2) % 2)
        for (auto& [k, c] : v) c = -c;
    return {d, v};
}

inline SpectralReport spectral_analysis(int n) {
    SpectralReport rep;
    rep.n = n;
    FilteredRake fr(n);
    auto f = free_module_complex(n);
    rep.filtration_closed = fr.filtration_closed(&rep.witness);

    rep.e1_vanishes_above_row_zero = true;
    for (int p = 0; p < n; ++p)
        for (int q = 1; q <= n; ++q)
            if (fr.page_dim(1, p, q) != 0) {
                rep.e1_vanishes_above_row_zero = false;
                rep.witness = "E^1 nonzero at (p,q)=(" + std::to_string(p) + "," +
                              std::to_string(q) + ")";
            }
    rep.e1_row_matches_blocks = true;
    for (int p = 0; p < n; ++p) {
        rep.e1_row.push_back(fr.page_dim(1, p, 0));
        if (rep.e1_row.back() != static_cast<long>(f.cc.dim(p))) {
            rep.e1_row_matches_blocks = false;
            rep.witness = "E^1 bottom row dim mismatch at p=" + std::to_string(p);
        }
    }

    // transported d^1: bottom-row cells are exactly the binary rakes; the
    // weight-(p-1) part of their boundary must forget to the block boundary
    rep.d1_matches_block_boundary = true;
    for (int d = 1; d <= fr.m.cc.top() && rep.d1_matches_block_boundary; ++d)
        for (size_t j = 0; j < fr.m.cc.dim(d); ++j) {
            const RakeCell& x = fr.m.cells[d][j];
            if (x.l() - 1 != d) continue;  // bottom row has weight = degree
            SVec lhs;
            for (const auto& [k, c] : fr.m.cc.bnd[d][j])
                if (fr.weight[d - 1][k] == d - 1) {
                    auto [dd, v] = forget_trees(f, fr.m.cells[d - 1][k]);
                    (void)dd;
                    sv_axpy(lhs, c, v);
                }
            auto [dx, vx] = forget_trees(f, x);
            (void)dx;
            SVec rhs;
            for (const auto& [k, c] : vx) sv_axpy(rhs, c, f.cc.bnd[d][k]);
            if (lhs != rhs) {
                rep.d1_matches_block_boundary = false;
                rep.witness = "d^1 mismatch at [" + fr.m.cc.basis[d][j] + "]";
            }
        }

    rep.e2_concentrated = true;
    rep.collapsed = true;
    for (int p = 0; p < n; ++p)
        for (int q = 0; q <= n; ++q) {
            long e2 = fr.page_dim(2, p, q);
            rep.e2_total += e2;
            long want = (p == 0 && q == 0) ? 1 : 0;
            long f1 = 1;
            for (int i = 2; i < n; ++i) f1 *= i;
            if (e2 != want * f1) rep.e2_concentrated = false;
            if (fr.page_dim(3, p, q) != e2) rep.collapsed = false;
        }
    if (!rep.e2_concentrated && rep.witness.empty()) rep.witness = "E^2 not concentrated";
    return rep;
}

/**
 * Degeneration table: every cell of the symmetrized cyclohedron maps to the
 * cell of the symmetrized simplex given by its block structure; cells with
 * a non-binary tree lose dimension ("collapsed").
 */
struct DeblowRow {
    std::string cell;     // rake cell label
    std::string image;    // simplex cell label
    bool collapsed;       // image has strictly smaller dimension
};

inline std::vector<DeblowRow> deblow_report(int n) {
    std::vector<DeblowRow> rows;
    auto m = cobar_module(n);
    auto f = free_module_complex(n);
    DBar db(n);
    auto cm = simplex_comparison(f, db);
    for (int d = 0; d <= m.cc.top(); ++d)
        for (size_t j = 0; j < m.cc.dim(d); ++j) {
            const RakeCell& x = m.cells[d][j];
            auto [bd, v] = forget_trees(f, x);
            SVec img = cm.apply(bd, v);
            DeblowRow r;
            r.cell = m.cc.basis[d][j];
            r.image = db.cc.basis[bd][img.begin()->first];
            r.collapsed = bd != d;
            rows.push_back(std::move(r));
        }
    return rows;
}

}  // namespace hedra
