// Acceptance gate: one pass/fail line per criterion, exit 0 iff all pass.
// Each block recomputes its claim from the library; nothing is cached.

#include <hedra/bracketings.hpp>
#include <hedra/chain.hpp>
#include <hedra/cobar.hpp>
#include <hedra/free_operad.hpp>
#include <hedra/intervals.hpp>
#include <hedra/operad.hpp>
#include <hedra/polytope.hpp>
#include <hedra/poset.hpp>
#include <hedra/simplex_module.hpp>
#include <hedra/spectral.hpp>
#include <hedra/traces.hpp>

#include <iostream>
#include <map>
#include <set>
#include <sstream>

using namespace hedra;

namespace {

long fact(int n) { return n <= 1 ? 1 : n * fact(n - 1); }

long binom(int n, int k) {
    long b = 1;
    for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
    return b;
}

int failures = 0;

void line(int no, const std::string& what, bool pass, const std::string& witness = "") {
    std::cout << "criterion " << no << " [" << what << "]: " << (pass ? "pass" : "FAIL");
    if (!pass) {
        if (!witness.empty()) std::cout << " -- " << witness;
        ++failures;
    }
    std::cout << "\n";
}

// ---------------------------------------------------------------- criteria

bool c1(std::string& w) {
    for (int n = 2; n <= 7; ++n) {
        auto fams = enumerate_I(n);
        auto bs = enumerate_B(n);
        if (fams.size() != bs.size()) return w = "B/I size at n=" + std::to_string(n), false;
        std::map<Bracketing, size_t> index;
        for (size_t k = 0; k < bs.size(); ++k) index[bs[k]] = k;
        std::vector<size_t> f(fams.size());
        for (size_t k = 0; k < fams.size(); ++k) {
            auto it = index.find(interval_family_to_bracketing(n, fams[k]));
            if (it == index.end()) return w = "non-bracketing image, n=" + std::to_string(n), false;
            f[k] = it->second;
        }
        std::pair<size_t, size_t> bad;
        if (!is_order_iso(family_poset(fams), poset_B(bs), f, &bad))
            return w = "order broken at n=" + std::to_string(n), false;
    }
    for (int n = 1; n <= 6; ++n) {
        auto fams = enumerate_IC(n);
        auto bs = enumerate_BC(n);
        if (fams.size() != bs.size()) return w = "BC/IC size at n=" + std::to_string(n), false;
        std::map<CyclicBracketing, size_t> index;
        for (size_t k = 0; k < bs.size(); ++k) index[bs[k]] = k;
        std::vector<size_t> f(fams.size());
        for (size_t k = 0; k < fams.size(); ++k) {
            auto it = index.find(cyclic_family_to_bracketing(n, fams[k]));
            if (it == index.end())
                return w = "non-cyclic-bracketing image, n=" + std::to_string(n), false;
            f[k] = it->second;
        }
        std::pair<size_t, size_t> bad;
        if (!is_order_iso(family_poset(fams), poset_BC(bs), f, &bad))
            return w = "cyclic order broken at n=" + std::to_string(n), false;
    }
    return true;
}

bool c2(std::string& w) {
    for (int base : {3, 4}) {
        auto cost = power_cost(base);
        for (int n = 2; n <= 5; ++n) {
            auto m = match_lattice_K(n, enumerate_faces(build_K(n, cost)));
            if (!m.ok) return w = "K_" + std::to_string(n) + ": " + m.detail, false;
        }
        for (int n = 1; n <= 4; ++n) {
            auto m = match_lattice_W(n, enumerate_faces(build_W(n, cost)));
            if (!m.ok) return w = "W_" + std::to_string(n) + ": " + m.detail, false;
        }
    }
    return true;
}

bool c3(std::string& w) {
    for (int n = 2; n <= 6; ++n) {
        long c = 0;
        for (const auto& b : enumerate_BC(n))
            if (b.arcs.size() == 1) ++c;
        if (c != n * (n - 1))
            return w = "facet count " + std::to_string(c) + " at n=" + std::to_string(n), false;
    }
    auto L = enumerate_faces(build_W(4));
    std::map<size_t, int> shape;
    for (const auto& f : L.faces)
        if (f.dim == 2) ++shape[f.vset.size()];
    if (shape != std::map<size_t, int>{{4, 4}, {5, 4}, {6, 4}})
        return w = "W_4 facet census differs from 4+4+4", false;
    for (int k = 2; k <= 4; ++k) {
        auto pc = facet_product_check(4, k);
        if (!pc.ok) return w = "product structure at k=" + std::to_string(k), false;
    }
    return true;
}

bool c4(std::string& w) {
    for (int n = 1; n <= 5; ++n) {
        if (!simplex_complex(n).d_squared_zero(&w)) return false;
        if (n >= 2 && !cobar_operad(n).cc.d_squared_zero(&w)) return false;
        if (!cobar_module(n).cc.d_squared_zero(&w)) return false;
    }
    return true;
}

bool c5(std::string& w) {
    for (int n = 1; n <= 6; ++n) {
        auto f = free_module_complex(n);
        DBar db(n);
        auto cm = simplex_comparison(f, db);
        if (!cm.verify(&w)) return false;
        if (!cm.is_signed_bijection(&w)) return false;
        for (int l = 1; l <= n; ++l)
            if (static_cast<long>(f.cc.dim(l - 1)) != binom(n - 1, l - 1) * fact(n) / l)
                return w = "dimension formula at n=" + std::to_string(n), false;
    }
    return true;
}

bool c6(std::string& w) {
    // combinatorial: bijection + incidence against the cyclic-bracketing lattice
    for (int n = 1; n <= 5; ++n) {
        auto m = cobar_module(n);
        std::set<std::pair<Perm, CyclicBracketing>> seen;
        long total = 0;
        std::vector<std::vector<std::pair<Perm, CyclicBracketing>>> cell(m.cc.top() + 1);
        for (int d = 0; d <= m.cc.top(); ++d)
            for (const auto& x : m.cells[d]) {
                auto [coset, cb] = rake_to_cell(x);
                if (!cb.valid() || n - 1 - static_cast<int>(cb.arcs.size()) != d ||
                    !seen.emplace(coset.reduced, cb).second)
                    return w = "dictionary failure at n=" + std::to_string(n), false;
                cell[d].emplace_back(coset.reduced, cb);
                ++total;
            }
        if (total != fact(n - 1) * static_cast<long>(enumerate_BC(n).size()))
            return w = "cell count at n=" + std::to_string(n), false;
        if (n < 2) continue;
        std::vector<std::vector<std::set<int>>> below(m.cc.top() + 1);
        for (int d = 0; d <= m.cc.top(); ++d) {
            below[d].resize(m.cc.dim(d));
            if (d == 0) continue;
            for (size_t j = 0; j < m.cc.dim(d); ++j)
                for (size_t k = 0; k < m.cc.dim(d - 1); ++k)
                    if (cell[d][j].first == cell[d - 1][k].first &&
                        cyclic_bracketing_leq(cell[d - 1][k].second, cell[d][j].second))
                        below[d][j].insert(static_cast<int>(k));
        }
        if (!incidence_check(m.cc, below, &w)) return false;
    }
    // geometric: incidence against the face lattice of W_n
    for (int n = 2; n <= 4; ++n) {
        auto L = enumerate_faces(build_W(n));
        auto match = match_lattice_W(n, L);
        if (!match.ok) return w = match.detail, false;
        auto fams = enumerate_IC(n);
        std::map<std::set<std::string>, size_t> fam_idx;
        for (size_t fi = 0; fi < fams.size(); ++fi) {
            std::set<std::string> key;
            for (const auto& iv : fams[fi]) key.insert(cyclic_interval_tag(iv));
            fam_idx[key] = fi;
        }
        auto m = cobar_module(n);
        std::vector<std::vector<std::pair<Perm, size_t>>> gf(m.cc.top() + 1);
        for (int d = 0; d <= m.cc.top(); ++d)
            for (const auto& x : m.cells[d]) {
                auto [c, cb] = rake_to_cell(x);
                std::set<std::string> key;
                for (const Arc& a : cb.arcs)
                    key.insert(cyclic_interval_tag(arc_to_cyclic_interval(n, a)));
                size_t face = match.face_of.at(fam_idx.at(key));
                if (L.faces[face].dim != d)
                    return w = "geometric dimension at n=" + std::to_string(n), false;
                gf[d].emplace_back(c.reduced, face);
            }
        std::vector<std::vector<std::set<int>>> below(m.cc.top() + 1);
        for (int d = 0; d <= m.cc.top(); ++d) {
            below[d].resize(m.cc.dim(d));
            if (d == 0) continue;
            for (size_t j = 0; j < m.cc.dim(d); ++j)
                for (size_t k = 0; k < m.cc.dim(d - 1); ++k)
                    if (gf[d][j].first == gf[d - 1][k].first &&
                        L.poset.leq[gf[d - 1][k].second][gf[d][j].second])
                        below[d][j].insert(static_cast<int>(k));
        }
        if (!incidence_check(m.cc, below, &w)) return false;
    }
    return true;
}

bool c7(std::string& w) {
    for (int n = 2; n <= 5; ++n) {
        auto ho = cobar_operad(n).cc.homology_dims();
        if (ho[0] != fact(n)) return w = "operad H_0 at n=" + std::to_string(n), false;
        for (size_t d = 1; d < ho.size(); ++d)
            if (ho[d] != 0) return w = "operad H_+ at n=" + std::to_string(n), false;
        auto hm = cobar_module(n).cc.homology_dims();
        if (hm[0] != fact(n - 1)) return w = "module H_0 at n=" + std::to_string(n), false;
        for (size_t d = 1; d < hm.size(); ++d)
            if (hm[d] != 0) return w = "module H_+ at n=" + std::to_string(n), false;
    }
    return true;
}

DTreeF tleaf(int i) { return DTreeF{i, 0, {}}; }
DTreeF tnode(int lab, DTreeF a, DTreeF b) {
    return DTreeF{0, lab, {std::move(a), std::move(b)}};
}

QVec assoc_relation(const FreeOperad& f) {
    DTreeF left = tnode(0, tnode(0, tleaf(1), tleaf(2)), tleaf(3));
    DTreeF right = tnode(0, tleaf(1), tnode(0, tleaf(2), tleaf(3)));
    QVec r(f.dim(3), Q(0));
    r[f.index[3].at(left)] = 1;
    r[f.index[3].at(right)] = -1;
    return r;
}

bool c8(std::string& w) {
    // Operad side: the annihilator of the associativity relations under the
    // sign-twisted pairing is invariant and maps back onto the relations.
    FreeOperad f(regular_E2(), 3);
    FreeOperad fd(dual_sgn(regular_E2()), 3);
    RowSpace r_space(f.dim(3));
    r_space.add(assoc_relation(f));
    for (const auto& s : all_perms(3))
        for (const auto& row : std::vector<QVec>(r_space.basis)) {
            QVec img(f.dim(3), Q(0));
            for (size_t j = 0; j < f.dim(3); ++j)
                if (row[j] != 0)
                    for (const auto& [k, c] : f.act_tree(f.basis[3][j], s)) img[k] += row[j] * c;
            r_space.add(img);
        }
    if (r_space.dim() != 6) return w = "relation-orbit dimension != 6", false;

    auto propagate = [&](std::vector<Q>& d) {
        bool consistent = true;
        for (bool grew = true; grew;) {
            grew = false;
            for (const auto& s : {Perm({2, 1, 3}), Perm({1, 3, 2}), Perm({2, 3, 1})})
                for (size_t j = 0; j < f.dim(3); ++j) {
                    if (d[j] == 0) continue;
                    SVec a = f.act_tree(f.basis[3][j], s);
                    SVec b = fd.act_tree(fd.basis[3][j], s);
                    if (a.size() != 1 || b.size() != 1 || a.begin()->first != b.begin()->first)
                        return false;
                    Q v = d[j] * a.begin()->second * b.begin()->second;
                    int k = a.begin()->first;
                    if (d[k] == 0) {
                        d[k] = v;
                        grew = true;
                    } else if (d[k] != v) {
                        consistent = false;
                    }
                }
        }
        return consistent;
    };
    std::vector<std::vector<Q>> orbit_masks;
    {
        std::vector<char> seen(f.dim(3), 0);
        for (size_t seed = 0; seed < f.dim(3); ++seed) {
            if (seen[seed]) continue;
            std::vector<Q> d(f.dim(3), Q(0));
            d[seed] = 1;
            if (!propagate(d)) return w = "pairing signs inconsistent", false;
            for (size_t j = 0; j < f.dim(3); ++j)
                if (d[j] != 0) seen[j] = 1;
            orbit_masks.push_back(std::move(d));
        }
    }
    bool found = false;
    int norbits = static_cast<int>(orbit_masks.size());
    for (int combo = 0; combo < (1 << norbits) && !found; ++combo) {
        std::vector<Q> d(f.dim(3), Q(0));
        for (int o = 0; o < norbits; ++o) {
            Q sc = (combo >> o) & 1 ? -1 : 1;
            for (size_t j = 0; j < f.dim(3); ++j)
                if (orbit_masks[o][j] != 0) d[j] = sc * orbit_masks[o][j];
        }
        std::vector<QVec> paired;
        for (const auto& row : r_space.basis) {
            QVec v(f.dim(3), Q(0));
            for (size_t j = 0; j < f.dim(3); ++j) v[j] = row[j] * d[j];
            paired.push_back(std::move(v));
        }
        auto perp = null_space(std::move(paired), f.dim(3));
        if (perp.size() != 6) continue;
        RowSpace perp_space(perp);
        bool invariant = true;
        for (const auto& s : all_perms(3))
            for (const auto& row : perp) {
                QVec img(fd.dim(3), Q(0));
                for (size_t j = 0; j < fd.dim(3); ++j)
                    if (row[j] != 0)
                        for (const auto& [k, c] : fd.act_tree(fd.basis[3][j], s))
                            img[k] += row[j] * c;
                if (!perp_space.contains(img)) invariant = false;
            }
        if (!invariant) continue;
        for (int s0 = -1; s0 <= 1 && !found; s0 += 2)
            for (int s1 = -1; s1 <= 1 && !found; s1 += 2) {
                auto transport = [&](const QVec& v) {
                    QVec out(f.dim(3), Q(0));
                    for (size_t j = 0; j < f.dim(3); ++j) {
                        if (v[j] == 0) continue;
                        const DTreeF& t = fd.basis[3][j];
                        int sa = t.label == 0 ? s0 : s1;
                        const DTreeF& inner = t.ch[0].is_leaf() ? t.ch[1] : t.ch[0];
                        int sb = inner.label == 0 ? s0 : s1;
                        out[f.index[3].at(t)] = v[j] * sa * sb;
                    }
                    return out;
                };
                bool ok = true;
                RowSpace image(f.dim(3));
                for (const auto& v : perp) image.add(transport(v));
                if (image.dim() != 6) ok = false;
                for (const auto& row : image.basis)
                    if (!r_space.contains(row)) ok = false;
                if (ok) found = true;
            }
    }
    if (!found) return w = "no sign choice carries the annihilator onto the relations", false;

    // Module side: arity-2 component is the regular rep (trivial + sign);
    // the annihilator of id - swap is id + swap, which the sign-twisted
    // identification carries back onto the rotation relation.
    QVec g(2, Q(0));
    g[0] = 1;
    g[1] = -1;
    auto perp = null_space({g}, 2);
    if (perp.size() != 1 || perp[0][0] != perp[0][1])
        return w = "module annihilator is not the symmetric line", false;
    QVec carried(2, Q(0));
    carried[0] = perp[0][0];
    carried[1] = -perp[0][1];
    RowSpace gs(std::vector<QVec>{g});
    if (!gs.contains(carried)) return w = "module dual does not return the relation", false;
    return true;
}

bool c9(std::string& w) {
    for (int n = 1; n <= 4; ++n) {
        auto rep = spectral_analysis(n);
        if (!rep.ok()) return w = rep.witness.empty() ? "report failed" : rep.witness, false;
        if (rep.e2_total != fact(n - 1))
            return w = "limit dimension at n=" + std::to_string(n), false;
    }
    return true;
}

bool c10(std::string& w) {
    // M(UAss) = rotation classes of permutations, as a module
    auto key = [](const MAss& m) {
        if (!m.has_value()) return std::string("theta");
        std::string k;
        for (int i = 1; i <= m->n(); ++i) k += std::to_string((*m)(i)) + ",";
        return k;
    };
    for (int n = 1; n <= 5; ++n) {
        std::set<std::string> image;
        for (const auto& s : all_perms(n)) {
            image.insert(key(psi_Ass(s)));
            for (const auto& t : all_perms(n))
                if ((psi_Ass(s) == psi_Ass(t)) !=
                    (coset_project(s).rep() == coset_project(t).rep()))
                    return w = "fiber mismatch at arity " + std::to_string(n), false;
        }
        if (static_cast<long>(image.size()) != fact(n - 1))
            return w = "image size at arity " + std::to_string(n), false;
    }
    for (int n = 2; n <= 4; ++n)
        for (const auto& c : all_cosets(n))
            for (int m1 = 1; m1 <= 2; ++m1)
                for (const auto& p1 : all_perms(m1))
                    for (const auto& p2 : all_perms(2)) {
                        std::vector<Perm> parts(n, Perm::id(1));
                        parts[0] = p1;
                        parts[1] = p2;
                        if (psi_Ass(nu_Cycl(c, parts).rep()) !=
                            nu_MAss(psi_Ass(c.rep()), parts))
                            return w = "structure maps disagree at arity " + std::to_string(n),
                                   false;
                    }
    // M(UComm) = Comm: both are one line per arity
    {
        GenSpace triv;
        triv.arity = 2;
        triv.names = {"c"};
        triv.act = [](const Perm&) { return std::vector<SVec>{{{0, Q(1)}}}; };
        FreeOperad f(triv, 5);
        std::vector<QVec> gens;
        for (size_t j = 1; j < f.dim(3); ++j) {
            QVec r(f.dim(3), Q(0));
            r[0] = 1;
            r[j] = -1;
            gens.push_back(std::move(r));
        }
        auto ideal = operad_ideal(f, 3, gens);
        for (int n = 3; n <= 5; ++n)
            if (f.dim(n) - ideal[n].dim() != 1)
                return w = "commutative quotient at arity " + std::to_string(n), false;
    }
    return verify_cyclic_Ass(4, &w);
}

bool c11(std::string& w) {
    // displayed equations, token for token after normalization
    if (render_axiom(1, trace_axiom_reference(1)) != "delta T1(a1) = + T1(m1(a1))")
        return w = "arity-1 display", false;
    TraceEq hand2;
    {
        SignExp s;
        eq_insert(hand2, TraceTerm{{TermArg{2, {1, 2}}}}, s);
    }
    {
        SignExp s;
        s.flip();
        s.add_quad(1, 2);
        eq_insert(hand2, TraceTerm{{TermArg{2, {2, 1}}}}, s);
    }
    {
        SignExp s;
        s.flip();
        eq_insert(hand2, TraceTerm{{TermArg{1, {1}}, TermArg{0, {2}}}}, s);
    }
    {
        SignExp s;
        s.add_quad(1, 2);
        eq_insert(hand2, TraceTerm{{TermArg{1, {2}}, TermArg{0, {1}}}}, s);
    }
    if (!(trace_axiom_reference(2) == hand2)) return w = "arity-2 display", false;
    TraceEq hand3;
    {
        SignExp s;
        eq_insert(hand3, TraceTerm{{TermArg{2, {1, 2}}, TermArg{0, {3}}}}, s);
    }
    {
        SignExp s;
        s.add_quad(1, 2);
        s.add_quad(1, 3);
        eq_insert(hand3, TraceTerm{{TermArg{2, {2, 3}}, TermArg{0, {1}}}}, s);
    }
    {
        SignExp s;
        s.add_quad(3, 1);
        s.add_quad(3, 2);
        eq_insert(hand3, TraceTerm{{TermArg{2, {3, 1}}, TermArg{0, {2}}}}, s);
    }
    if (!(trace_axiom_strict(3) == hand3)) return w = "arity-3 strict display", false;
    for (int n = 1; n <= 5; ++n)
        if (!(trace_axiom_from_cells(n) == trace_axiom_reference(n)))
            return w = "cell transcription at n=" + std::to_string(n), false;

    // the 2x2 matrix trace through the module-map characterization
    AInfinity a = matrix_algebra_2();
    if (!ainfinity_check(a, 4, &w)) return false;
    TraceSystem tr;
    tr.W.basis = {"w"};
    tr.W.deg = {0};
    tr.T.resize(2);
    tr.T[1] = {1, 0, 1, {}};
    Vec t = matrix_trace_functional();
    for (int i = 0; i < 4; ++i)
        if (t[i] != 0) tr.T[1].table[{i}] = Vec{t[i]};
    if (!homotopy_trace_check(a, tr, 4, &w)) return false;
    BForm b = matrix_trace_form();
    ModuleTrace mt = trace_from_form(a, b, matrix_unit_2());
    if (!module_trace_check(a, mt, 4, &w)) return false;

    // the correspondence round-trips exactly
    if (form_from_trace(a, mt).mat != b.mat) return w = "round trip form differs", false;
    ModuleTrace mt2 = trace_from_form(a, form_from_trace(a, mt), matrix_unit_2());
    for (int n = 1; n <= 3; ++n)
        for (const auto& q : all_perms(n)) {
            std::vector<int> xs(n + 1, 0);
            while (true) {
                std::vector<Vec> args;
                for (int i : xs) args.push_back(unit_vec(4, i));
                if (mt.eval(MAss{q}, args) != mt2.eval(MAss{q}, args))
                    return w = "round trip trace differs", false;
                int i = n;
                while (i >= 0 && xs[i] == 3) xs[i--] = 0;
                if (i < 0) break;
                ++xs[i];
            }
        }
    return true;
}

bool c12(std::string& w) {
    // sign-corrupted differential
    {
        auto m = cobar_module(3);
        auto& row = m.cc.bnd[2][0];
        row.begin()->second = -row.begin()->second;
        std::string wit;
        if (m.cc.d_squared_zero(&wit) || wit.empty())
            return w = "corrupted differential not rejected", false;
    }
    // non-invariant form
    {
        AInfinity a = matrix_algebra_2();
        BForm entry;
        entry.mat.assign(4, zero_vec(4));
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) entry.mat[i][j] = a.m[2].on_basis({i, j})[0];
        std::string wit;
        if (invariance_check(a, entry, 2, &wit) || wit.empty())
            return w = "non-invariant form not rejected", false;
    }
    // relation-free presentation: the free-module cobar complex is acyclic,
    // so its degree-0 homology cannot match the claimed dual dimension
    for (int n = 2; n <= 4; ++n) {
        auto o = cobar_free_module(n);
        std::string wit;
        if (!o.cc.d_squared_zero(&wit)) return w = wit, false;
        auto h = o.cc.homology_dims();
        if (h[0] == fact(n - 1))
            return w = "relation-free presentation not rejected at n=" + std::to_string(n),
                   false;
    }
    return true;
}

}  // namespace

int main() {
    std::string w;
    w.clear(); line(1, "bracketing posets = interval-family posets", c1(w), w);
    w.clear(); line(2, "geometric face lattices match, both cost families", c2(w), w);
    w.clear(); line(3, "cyclohedron facet census and product structure", c3(w), w);
    w.clear(); line(4, "all differentials square to zero", c4(w), w);
    w.clear(); line(5, "block complex = symmetrized simplex, bijective chain map", c5(w), w);
    w.clear(); line(6, "module cobar cells = cyclohedron cells with incidence", c6(w), w);
    w.clear(); line(7, "cobar homology concentrated in degree 0", c7(w), w);
    w.clear(); line(8, "quadratic duals: associativity and rotation self-dual", c8(w), w);
    w.clear(); line(9, "filtration spectral sequence degenerates as claimed", c9(w), w);
    w.clear(); line(10, "unital-extension modules and cyclic axioms", c10(w), w);
    w.clear(); line(11, "trace axioms, matrix trace, form correspondence", c11(w), w);
    w.clear(); line(12, "negative controls rejected with witnesses", c12(w), w);
    if (failures == 0) {
        std::cout << "ACCEPTANCE: all 12 criteria pass\n";
        return 0;
    }
    std::cout << "ACCEPTANCE: " << failures << " criteria FAILED\n";
    return 1;
}
