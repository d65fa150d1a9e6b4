// Command-line front end: face-lattice dumps, verification targets with
// machine-readable reports, and exact-artifact exports.  All numeric output
// is in exact fraction form; identical invocations produce identical bytes.

#include <CLI11.hpp>
#include <json.hpp>

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

#include <fstream>
#include <iostream>
#include <sstream>

using namespace hedra;
using nlohmann::json;

namespace {

long fact(int n) { return n <= 1 ? 1 : n * fact(n - 1); }

long binom(int n, int k) {
    long b = 1;
    for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
    return b;
}

// ------------------------------------------------------------- reporting

struct Check {
    std::string name;
    bool pass = false;
    std::string witness;
};

struct Report {
    std::string command;
    std::vector<Check> checks;

    void add(std::string name, bool pass, std::string witness = "") {
        checks.push_back({std::move(name), pass, pass ? "" : std::move(witness)});
    }
    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

std::string render_report(const Report& r, const std::string& format) {
    std::ostringstream os;
    if (format == "json") {
        json j;
        j["command"] = r.command;
        j["pass"] = r.pass();
        j["checks"] = json::array();
        for (const auto& c : r.checks) {
            json jc;
            jc["name"] = c.name;
            jc["pass"] = c.pass;
            if (!c.pass) jc["witness"] = c.witness;
            j["checks"].push_back(jc);
        }
        os << j.dump(2) << "\n";
    } else {
        for (const auto& c : r.checks) {
            os << (c.pass ? "pass  " : "FAIL  ") << c.name;
            if (!c.pass && !c.witness.empty()) os << ": " << c.witness;
            os << "\n";
        }
        os << (r.pass() ? "all checks passed" : "verification FAILED") << " ("
           << r.checks.size() << " checks)\n";
    }
    return os.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw CLI::ValidationError("--out", "cannot open " + out_path);
        f << text;
    }
}

/** Effective arity bound: the user's --max-n clipped to a hard cap unless
 * --unsafe-max-n lifts it. */
int bound(int user_max, int def, int hard, int unsafe_max) {
    if (unsafe_max > 0) return unsafe_max;
    int m = user_max > 0 ? user_max : def;
    return std::min(m, hard);
}

// -------------------------------------------------------------- faces

struct LatticeDump {
    char family;
    int n;
    FaceLattice L;
    std::vector<std::string> label;            // per face
    std::vector<std::vector<std::string>> active_tags;  // per face, sorted
};

LatticeDump make_lattice_dump(char fam, int n, const CostFn& cost) {
    LatticeDump d;
    d.family = fam;
    d.n = n;
    HRepPolytope p;
    if (fam == 'K') {
        p = build_K(n, cost);
    } else if (fam == 'W') {
        p = build_W(n, cost);
    } else {
        p = build_simplex(n);
    }
    d.L = enumerate_faces(p);
    d.label.assign(d.L.faces.size(), "");
    d.active_tags.resize(d.L.faces.size());
    for (size_t f = 0; f < d.L.faces.size(); ++f) {
        std::vector<std::string> tags;
        for (int a : d.L.faces[f].active) tags.push_back(p.ineqs[a].tag);
        std::sort(tags.begin(), tags.end());
        d.active_tags[f] = std::move(tags);
    }
    if (fam == 'K') {
        auto m = match_lattice_K(n, d.L);
        if (!m.ok) throw std::runtime_error("face lattice mismatch: " + m.detail);
        auto fams = enumerate_I(n);
        for (size_t k = 0; k < fams.size(); ++k)
            d.label[m.face_of[k]] = bracketing_string(interval_family_to_bracketing(n, fams[k]));
    } else if (fam == 'W') {
        auto m = match_lattice_W(n, d.L);
        if (!m.ok) throw std::runtime_error("face lattice mismatch: " + m.detail);
        auto fams = enumerate_IC(n);
        for (size_t k = 0; k < fams.size(); ++k)
            d.label[m.face_of[k]] =
                cyclic_bracketing_string(cyclic_family_to_bracketing(n, fams[k]));
    } else {
        // a simplex vertex is a unit vector; a face is the letter set it spans
        for (size_t f = 0; f < d.L.faces.size(); ++f) {
            std::set<int> letters;
            for (int v : d.L.faces[f].vset)
                for (int k = 0; k < n; ++k)
                    if (d.L.verts[v][k] != 0) letters.insert(k + 1);
            std::string lab = "{";
            for (int k : letters) lab += (lab.size() > 1 ? " " : "") + std::to_string(k);
            d.label[f] = lab + "}";
        }
    }
    return d;
}

std::string render_faces(const LatticeDump& d, const std::string& format) {
    std::ostringstream os;
    if (format == "json") {
        json j;
        j["family"] = std::string(1, d.family);
        j["n"] = d.n;
        j["f_vector"] = d.L.f_vector();
        j["faces"] = json::array();
        for (size_t f = 0; f < d.L.faces.size(); ++f) {
            json jf;
            jf["id"] = f;
            jf["dim"] = d.L.faces[f].dim;
            jf["active"] = d.active_tags[f];
            jf["label"] = d.label[f];
            jf["vertices"] = json::array();
            for (int v : d.L.faces[f].vset) {
                json jv = json::array();
                for (const Q& q : d.L.verts[v]) jv.push_back(q_str(q));
                jf["vertices"].push_back(jv);
            }
            j["faces"].push_back(jf);
        }
        j["covers"] = json::array();
        for (auto [a, b] : d.L.poset.covers()) j["covers"].push_back({a, b});
        os << j.dump(2) << "\n";
    } else {
        os << "family: " << d.family << "\nn: " << d.n << "\nfaces: " << d.L.faces.size()
           << "\nf-vector:";
        for (long f : d.L.f_vector()) os << " " << f;
        os << "\n";
        for (size_t f = 0; f < d.L.faces.size(); ++f)
            os << f << " dim=" << d.L.faces[f].dim << " " << d.label[f] << "\n";
    }
    return os.str();
}

// -------------------------------------------------------------- exports

std::string render_hrep(const HRepPolytope& p) {
    std::ostringstream os;
    auto coeffs = [&](const QVec& a) {
        std::string s;
        for (size_t k = 0; k < a.size(); ++k) s += (k ? " " : "") + q_str(a[k]);
        return s;
    };
    os << "= sum : " << q_str(p.eq_rhs) << " <= " << coeffs(p.eq_a) << "\n";
    for (const auto& h : p.ineqs)
        os << h.tag << " : " << q_str(h.rhs) << " <= " << coeffs(h.a) << "\n";
    return os.str();
}

std::string render_complex(const ChainComplex& cc) {
    std::ostringstream os;
    os << cc.name << "\ndims:";
    for (int d = 0; d <= cc.top(); ++d) os << " " << cc.dim(d);
    os << "\n";
    for (int d = 0; d <= cc.top(); ++d)
        for (size_t j = 0; j < cc.dim(d); ++j)
            os << "cell " << d << " " << j << " " << cc.basis[d][j] << "\n";
    for (int d = 1; d <= cc.top(); ++d)
        for (size_t j = 0; j < cc.dim(d); ++j) {
            os << "bnd " << d << " " << j << " :";
            for (const auto& [k, c] : cc.bnd[d][j]) os << " " << q_str(c) << "*" << k;
            os << "\n";
        }
    return os.str();
}

std::string render_deblow(int n) {
    std::ostringstream os;
    os << "cell collapse table, n=" << n << "\n";
    for (const auto& r : deblow_report(n))
        os << r.cell << " -> " << r.image << (r.collapsed ? "  (collapsed)" : "") << "\n";
    return os.str();
}

// ---------------------------------------------------------- verify targets

Report verify_poset_iso(int cap_b, int cap_bc) {
    Report r;
    r.command = "verify poset-iso";
    for (int n = 2; n <= cap_b; ++n) {
        auto fams = enumerate_I(n);
        auto bs = enumerate_B(n);
        bool ok = fams.size() == bs.size();
        std::string w = "size mismatch";
        if (ok) {
            std::map<Bracketing, size_t> index;
            for (size_t k = 0; k < bs.size(); ++k) index[bs[k]] = k;
            std::vector<size_t> f(fams.size());
            for (size_t k = 0; k < fams.size() && ok; ++k) {
                auto b = interval_family_to_bracketing(n, fams[k]);
                auto it = index.find(b);
                if (it == index.end()) {
                    ok = false;
                    w = "image not a valid bracketing";
                } else {
                    f[k] = it->second;
                }
            }
            if (ok) {
                std::pair<size_t, size_t> bad;
                ok = is_order_iso(family_poset(fams), poset_B(bs), f, &bad);
                if (!ok)
                    w = "order not preserved at pair (" + std::to_string(bad.first) + "," +
                        std::to_string(bad.second) + ")";
            }
        }
        r.add("linear bracketings = nested interval families, order iso, n=" +
                  std::to_string(n),
              ok, w);
    }
    for (int n = 1; n <= cap_bc; ++n) {
        auto fams = enumerate_IC(n);
        auto bs = enumerate_BC(n);
        bool ok = fams.size() == bs.size();
        std::string w = "size mismatch";
        if (ok) {
            std::map<CyclicBracketing, size_t> index;
            for (size_t k = 0; k < bs.size(); ++k) index[bs[k]] = k;
            std::vector<size_t> f(fams.size());
            for (size_t k = 0; k < fams.size() && ok; ++k) {
                auto b = cyclic_family_to_bracketing(n, fams[k]);
                auto it = index.find(b);
                if (it == index.end()) {
                    ok = false;
                    w = "image not a valid cyclic bracketing";
                } else {
                    f[k] = it->second;
                }
            }
            if (ok) {
                std::pair<size_t, size_t> bad;
                ok = is_order_iso(family_poset(fams), poset_BC(bs), f, &bad);
                if (!ok)
                    w = "order not preserved at pair (" + std::to_string(bad.first) + "," +
                        std::to_string(bad.second) + ")";
            }
        }
        r.add("cyclic bracketings = nested cyclic families, order iso, n=" +
                  std::to_string(n),
              ok, w);
    }
    return r;
}

Report verify_lattice_match(int cap_k, int cap_w, const std::vector<int>& bases) {
    Report r;
    r.command = "verify lattice-match";
    for (int base : bases) {
        auto cost = power_cost(base);
        std::string tag = ", c=" + std::to_string(base) + "^#I";
        for (int n = 2; n <= cap_k; ++n) {
            auto m = match_lattice_K(n, enumerate_faces(build_K(n, cost)));
            r.add("associahedron lattice and dimension formula, n=" + std::to_string(n) + tag,
                  m.ok, m.detail);
        }
        for (int n = 1; n <= cap_w; ++n) {
            auto m = match_lattice_W(n, enumerate_faces(build_W(n, cost)));
            r.add("cyclohedron lattice and dimension formula, n=" + std::to_string(n) + tag,
                  m.ok, m.detail);
        }
    }
    for (int n = 2; n <= 6; ++n) {
        long c = 0;
        for (const auto& b : enumerate_BC(n))
            if (b.arcs.size() == 1) ++c;
        r.add("cyclohedron facet count n(n-1), n=" + std::to_string(n), c == n * (n - 1),
              "got " + std::to_string(c));
    }
    {
        auto L = enumerate_faces(build_W(4));
        std::map<size_t, int> shape;  // vertex count of each facet
        for (const auto& f : L.faces)
            if (f.dim == 2) ++shape[f.vset.size()];
        bool ok = shape == std::map<size_t, int>{{4, 4}, {5, 4}, {6, 4}};
        std::string got;
        for (auto [v, c] : shape) got += std::to_string(c) + "x" + std::to_string(v) + "-gon ";
        r.add("W_4 facet census: 4 hexagons, 4 squares, 4 pentagons", ok, "got " + got);
    }
    for (int k = 2; k <= 4; ++k) {
        auto pc = facet_product_check(4, k);
        r.add("facet of W_4 at bracket size " + std::to_string(k) + " is a product", pc.ok,
              pc.detail);
    }
    return r;
}

Report verify_module_axioms(int cap) {
    Report r;
    r.command = "verify module-axioms";
    // the quotient map psi is constant on rotation classes and surjective
    for (int n = 1; n <= std::min(cap + 1, 5); ++n) {
        bool ok = true;
        std::set<std::string> image;
        auto key = [](const MAss& m) {
            if (!m.has_value()) return std::string("theta");
            std::string k;
            for (int i = 1; i <= m->n(); ++i) k += std::to_string((*m)(i)) + ",";
            return k;
        };
        for (const auto& s : all_perms(n)) {
            image.insert(key(psi_Ass(s)));
            for (const auto& t : all_perms(n)) {
                bool same = coset_project(s).rep() == coset_project(t).rep();
                if ((psi_Ass(s) == psi_Ass(t)) != same) ok = false;
            }
        }
        if (static_cast<long>(image.size()) != fact(n - 1)) ok = false;
        r.add("rotation classes = module of the unital extension, arity " + std::to_string(n),
              ok, "class/fiber mismatch");
    }
    // unit law of the structure map
    {
        bool ok = nu_MAss(std::nullopt, {Perm::id(1)}) == MAss(std::nullopt);
        for (int k = 1; k <= std::min(cap, 4); ++k)
            for (const auto& s : all_perms(k)) {
                std::vector<Perm> ids(k + 1, Perm::id(1));
                if (nu_MAss(MAss(s), ids) != MAss(s)) ok = false;
            }
        r.add("structure map unit law", ok, "nu(x; 1,...,1) != x");
    }
    // the identification intertwines the two module structures
    {
        bool ok = true;
        for (int n = 2; n <= std::min(cap, 4); ++n)
            for (const auto& c : all_cosets(n))
                for (int m1 = 1; m1 <= 2; ++m1)
                    for (const auto& p1 : all_perms(m1))
                        for (const auto& p2 : all_perms(2)) {
                            std::vector<Perm> parts(n, Perm::id(1));
                            parts[0] = p1;
                            parts[1] = p2;
                            if (psi_Ass(nu_Cycl(c, parts).rep()) !=
                                nu_MAss(psi_Ass(c.rep()), parts))
                                ok = false;
                        }
        r.add("identification intertwines the structure maps", ok, "intertwining fails");
    }
    // associativity of the structure map (head-slot sweep)
    {
        bool ok = true;
        for (const auto& x0 : all_perms(2))
            for (const auto& p0 : all_perms(2))
                for (const auto& p2 : all_perms(2))
                    for (const auto& q0 : all_perms(2)) {
                        std::vector<Perm> ps = {p0, Perm::id(1), p2};
                        MAss mid = nu_MAss(MAss(x0), ps);
                        std::vector<Perm> qs(mid->n() + 1, Perm::id(1));
                        qs[0] = q0;
                        std::vector<Perm> comp = {gamma_Ass(p0, {q0, Perm::id(1)}),
                                                  Perm::id(1), p2};
                        if (nu_MAss(mid, qs) != nu_MAss(MAss(x0), comp)) ok = false;
                    }
        r.add("structure map associativity", ok, "nu(nu(x;p);q) != nu(x;pq)");
    }
    // commutative side: the quotient by commutativity is one line per arity,
    // so its unital-extension module is the operad itself
    {
        GenSpace triv;
        triv.arity = 2;
        triv.names = {"c"};
        triv.act = [](const Perm&) { return std::vector<SVec>{{{0, Q(1)}}}; };
        int cc = std::min(cap + 1, 5);
        FreeOperad f(triv, cc);
        std::vector<QVec> gens;
        for (size_t j = 1; j < f.dim(3); ++j) {
            QVec row(f.dim(3), Q(0));
            row[0] = 1;
            row[j] = -1;
            gens.push_back(std::move(row));
        }
        auto ideal = operad_ideal(f, 3, gens);
        bool ok = true;
        for (int n = 3; n <= cc; ++n)
            if (f.dim(n) - ideal[n].dim() != 1) ok = false;
        r.add("commutative quotient is one-dimensional per arity, arity <= " +
                  std::to_string(cc),
              ok, "dimension != 1");
    }
    return r;
}

Report verify_cyclic_axioms(int cap) {
    Report r;
    r.command = "verify cyclic-axioms";
    std::string w;
    r.add("cyclic-operad axioms on the word model, arity <= " + std::to_string(cap),
          verify_cyclic_Ass(cap, &w), w);
    return r;
}

Report verify_koszul(int cap, const std::string& which) {
    Report r;
    r.command = "verify koszul";
    bool do_ass = which == "ass" || which == "both";
    bool do_cycl = which == "cycl" || which == "both";
    for (int n = 2; n <= cap; ++n) {
        if (do_ass) {
            auto o = cobar_operad(n);
            std::string w;
            r.add("operad cobar d^2 = 0, n=" + std::to_string(n), o.cc.d_squared_zero(&w), w);
            auto h = o.cc.homology_dims();
            bool conc = h[0] == fact(n);
            for (size_t d = 1; d < h.size(); ++d)
                if (h[d] != 0) conc = false;
            std::string got;
            for (long x : h) got += std::to_string(x) + " ";
            r.add("operad cobar homology is n! in degree 0 only, n=" + std::to_string(n), conc,
                  "homology dims " + got);
        }
        if (do_cycl) {
            auto m = cobar_module(n);
            std::string w;
            r.add("module cobar d^2 = 0, n=" + std::to_string(n), m.cc.d_squared_zero(&w), w);
            auto h = m.cc.homology_dims();
            bool conc = h[0] == fact(n - 1);
            for (size_t d = 1; d < h.size(); ++d)
                if (h[d] != 0) conc = false;
            std::string got;
            for (long x : h) got += std::to_string(x) + " ";
            r.add("module cobar homology is (n-1)! in degree 0 only, n=" + std::to_string(n),
                  conc, "homology dims " + got);
        }
    }
    return r;
}

Report verify_simplex_module_iso(int cap) {
    Report r;
    r.command = "verify simplex-module-iso";
    for (int n = 1; n <= cap; ++n) {
        auto f = free_module_complex(n);
        DBar db(n);
        auto cm = simplex_comparison(f, db);
        std::string w;
        r.add("comparison is a chain map, n=" + std::to_string(n), cm.verify(&w), w);
        r.add("comparison is a signed bijection, n=" + std::to_string(n),
              cm.is_signed_bijection(&w), w);
        bool dims = true;
        for (int l = 1; l <= n; ++l) {
            long want = binom(n - 1, l - 1) * fact(n) / l;
            if (static_cast<long>(f.cc.dim(l - 1)) != want) dims = false;
        }
        r.add("free-module dimensions C(n-1,l-1) n!/l, n=" + std::to_string(n), dims,
              "dimension mismatch");
    }
    return r;
}

Report verify_cyclohedron_id(int cap, int geo_cap) {
    Report r;
    r.command = "verify cyclohedron-id";
    for (int n = 1; n <= cap; ++n) {
        auto m = cobar_module(n);
        std::set<std::pair<Perm, CyclicBracketing>> seen;
        bool ok = true;
        long total = 0;
        for (int d = 0; d <= m.cc.top() && ok; ++d)
            for (const auto& x : m.cells[d]) {
                auto [coset, cb] = rake_to_cell(x);
                if (!cb.valid() || n - 1 - static_cast<int>(cb.arcs.size()) != d ||
                    !seen.emplace(coset.reduced, cb).second)
                    ok = false;
                ++total;
            }
        if (total != fact(n - 1) * static_cast<long>(enumerate_BC(n).size())) ok = false;
        r.add("cells biject with labeled cyclic bracketings, n=" + std::to_string(n), ok,
              "dictionary failure");
    }
    for (int n = 2; n <= cap; ++n) {
        auto m = cobar_module(n);
        std::vector<std::vector<std::pair<Perm, CyclicBracketing>>> cell(m.cc.top() + 1);
        for (int d = 0; d <= m.cc.top(); ++d)
            for (const auto& x : m.cells[d]) {
                auto [c, cb] = rake_to_cell(x);
                cell[d].emplace_back(c.reduced, cb);
            }
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
        std::string w;
        r.add("incidence against the cyclic-bracketing lattice, n=" + std::to_string(n),
              incidence_check(m.cc, below, &w), w);
    }
    for (int n = 2; n <= geo_cap; ++n) {
        auto L = enumerate_faces(build_W(n));
        auto match = match_lattice_W(n, L);
        bool ok = match.ok;
        std::string w = match.detail;
        if (ok) {
            auto fams = enumerate_IC(n);
            std::map<std::set<std::string>, size_t> fam_idx;
            for (size_t fi = 0; fi < fams.size(); ++fi) {
                std::set<std::string> key;
                for (const auto& iv : fams[fi]) key.insert(cyclic_interval_tag(iv));
                fam_idx[key] = fi;
            }
            auto m = cobar_module(n);
            std::vector<std::vector<std::pair<Perm, size_t>>> gf(m.cc.top() + 1);
            for (int d = 0; d <= m.cc.top() && ok; ++d)
                for (const auto& x : m.cells[d]) {
                    auto [c, cb] = rake_to_cell(x);
                    std::set<std::string> key;
                    for (const Arc& a : cb.arcs)
                        key.insert(cyclic_interval_tag(arc_to_cyclic_interval(n, a)));
                    size_t face = match.face_of.at(fam_idx.at(key));
                    if (L.faces[face].dim != d) {
                        ok = false;
                        w = "cell dimension differs from its geometric face";
                    }
                    gf[d].emplace_back(c.reduced, face);
                }
            if (ok) {
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
                ok = incidence_check(m.cc, below, &w);
            }
        }
        r.add("incidence against the geometric face lattice, n=" + std::to_string(n), ok, w);
    }
    return r;
}

Report verify_spectral(int cap) {
    Report r;
    r.command = "verify spectral";
    for (int n = 1; n <= cap; ++n) {
        auto rep = spectral_analysis(n);
        r.add("filtration closed and degeneration at the second page, n=" + std::to_string(n),
              rep.ok(), rep.witness.empty() ? "spectral report failed" : rep.witness);
        r.add("total dimension of the limit is (n-1)!, n=" + std::to_string(n),
              rep.e2_total == fact(n - 1), "got " + std::to_string(rep.e2_total));
    }
    return r;
}

Report verify_traces(int cap) {
    Report r;
    r.command = "verify traces";
    for (int n = 1; n <= std::min(cap, 5); ++n)
        r.add("coherence axiom from cells matches the closed form, n=" + std::to_string(n),
              trace_axiom_from_cells(n) == trace_axiom_reference(n), "term/sign mismatch");
    for (int n = 2; n <= std::min(cap + 1, 6); ++n)
        r.add("strict specialization matches the displayed system, n=" + std::to_string(n),
              trace_axiom_strict(n) == trace_axiom_strict_display(n), "term/sign mismatch");
    AInfinity a = matrix_algebra_2();
    std::string w;
    r.add("2x2 matrices satisfy the relations, arity <= 4", ainfinity_check(a, 4, &w), w);
    TraceSystem tr;
    tr.W.basis = {"w"};
    tr.W.deg = {0};
    tr.T.resize(2);
    tr.T[1] = {1, 0, 1, {}};
    Vec t = matrix_trace_functional();
    for (int i = 0; i < 4; ++i)
        if (t[i] != 0) tr.T[1].table[{i}] = Vec{t[i]};
    r.add("matrix trace extends to a homotopy trace", homotopy_trace_check(a, tr, 4, &w), w);
    r.add("matrix trace is a cyclic-word trace", cyclic_word_trace_check(a, t, 4, &w), w);
    r.add("trace form is invariant", invariance_check(a, matrix_trace_form(), 3, &w), w);
    return r;
}

Report verify_appendix(int cap) {
    Report r;
    r.command = "verify appendix";
    AInfinity a = matrix_algebra_2();
    BForm b = matrix_trace_form();
    ModuleTrace t = trace_from_form(a, b, matrix_unit_2());
    std::string w;
    r.add("form-induced trace passes the module-trace axioms",
          module_trace_check(a, t, std::min(cap, 4), &w), w);
    r.add("round trip recovers the form", form_from_trace(a, t).mat == b.mat, "matrix differs");
    {
        ModuleTrace t2 = trace_from_form(a, form_from_trace(a, t), matrix_unit_2());
        bool ok = true;
        for (int n = 1; n <= 3 && ok; ++n)
            for (const auto& q : all_perms(n)) {
                std::vector<int> xs(n + 1, 0);
                while (true) {
                    std::vector<Vec> args;
                    for (int i : xs) args.push_back(unit_vec(4, i));
                    if (t.eval(MAss{q}, args) != t2.eval(MAss{q}, args)) ok = false;
                    int i = n;
                    while (i >= 0 && xs[i] == 3) xs[i--] = 0;
                    if (i < 0) break;
                    ++xs[i];
                }
            }
        r.add("rebuilt trace agrees on all module elements, arity <= 3", ok, "value differs");
    }
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification tool for the simplex, associahedron and cyclohedron "
                 "families: posets, rational polytopes, and operadic chain complexes"};
    app.require_subcommand(1);

    std::string format = "text", out_path;
    int c_base = 3, max_n = 0, unsafe_max = 0;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--out", out_path, "write output to a file instead of stdout");
    app.add_option("--c-base", c_base, "level base for the truncation costs c(I) = base^#I")
        ->check(CLI::PositiveNumber);
    app.add_option("--max-n", max_n, "upper arity bound for verification sweeps");
    app.add_option("--unsafe-max-n", unsafe_max,
                   "lift the hard arity cap (costs grow factorially)");

    app.fallthrough();  // let global flags appear after the subcommand

    auto* faces = app.add_subcommand("faces", "dump a face lattice with labels");
    faces->fallthrough();
    std::string fam_s;
    int faces_n = 0;
    faces->add_option("family", fam_s, "K (associahedron), W (cyclohedron) or D (simplex)")
        ->required()
        ->check(CLI::IsMember({"K", "W", "D"}));
    faces->add_option("n", faces_n, "family parameter")->required()->check(CLI::PositiveNumber);

    auto* verify = app.add_subcommand("verify", "run a verification target");
    verify->fallthrough();
    std::string target, module = "both";
    verify
        ->add_option("target", target, "what to verify")
        ->required()
        ->check(CLI::IsMember({"poset-iso", "lattice-match", "module-axioms", "cyclic-axioms",
                               "koszul", "simplex-module-iso", "cyclohedron-id", "spectral",
                               "traces", "appendix", "all"}));
    verify->add_option("--module", module, "which cobar complex the koszul target inspects")
        ->check(CLI::IsMember({"ass", "cycl", "both"}));

    auto* exp = app.add_subcommand("export", "write an exact artifact");
    exp->fallthrough();
    std::string what, exp_a;
    int exp_b = 0;
    std::string cobar_kind;
    exp->add_option("what", what, "hrep, complex or deblow-report")
        ->required()
        ->check(CLI::IsMember({"hrep", "complex", "deblow-report"}));
    exp->add_option("arg1", exp_a, "family (hrep) or n (complex, deblow-report)");
    exp->add_option("arg2", exp_b, "n (hrep)");
    exp->add_option("--cobar", cobar_kind, "which complex to export")
        ->check(CLI::IsMember({"ass", "cycl", "blocks", "simplex"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*faces) {
            char fam = fam_s[0];
            int hard = fam == 'W' ? 5 : 6;
            if (faces_n < 1 || (faces_n > hard && unsafe_max == 0)) {
                std::cerr << "n out of range for family " << fam << " (hard cap " << hard
                          << ", use --unsafe-max-n)\n";
                return 2;
            }
            auto d = make_lattice_dump(fam, faces_n, power_cost(c_base));
            emit(render_faces(d, format), out_path);
            return 0;
        }
        if (*verify) {
            std::vector<Report> reports;
            auto run = [&](const std::string& t) {
                if (t == "poset-iso")
                    reports.push_back(
                        verify_poset_iso(bound(max_n, 7, 7, unsafe_max),
                                         bound(max_n, 6, 6, unsafe_max)));
                else if (t == "lattice-match")
                    reports.push_back(verify_lattice_match(
                        bound(max_n, 5, 5, unsafe_max), bound(max_n, 4, 4, unsafe_max),
                        c_base == 3 ? std::vector<int>{3, 4} : std::vector<int>{c_base}));
                else if (t == "module-axioms")
                    reports.push_back(verify_module_axioms(bound(max_n, 4, 5, unsafe_max)));
                else if (t == "cyclic-axioms")
                    reports.push_back(verify_cyclic_axioms(bound(max_n, 4, 4, unsafe_max)));
                else if (t == "koszul")
                    reports.push_back(verify_koszul(bound(max_n, 5, 5, unsafe_max), module));
                else if (t == "simplex-module-iso")
                    reports.push_back(
                        verify_simplex_module_iso(bound(max_n, 5, 6, unsafe_max)));
                else if (t == "cyclohedron-id")
                    reports.push_back(verify_cyclohedron_id(bound(max_n, 5, 5, unsafe_max),
                                                            bound(max_n, 4, 4, unsafe_max)));
                else if (t == "spectral")
                    reports.push_back(verify_spectral(bound(max_n, 4, 4, unsafe_max)));
                else if (t == "traces")
                    reports.push_back(verify_traces(bound(max_n, 5, 6, unsafe_max)));
                else if (t == "appendix")
                    reports.push_back(verify_appendix(bound(max_n, 4, 4, unsafe_max)));
            };
            if (target == "all") {
                for (const char* t : {"poset-iso", "lattice-match", "module-axioms",
                                      "cyclic-axioms", "koszul", "simplex-module-iso",
                                      "cyclohedron-id", "spectral", "traces", "appendix"})
                    run(t);
            } else {
                run(target);
            }
            std::string text;
            bool all_pass = true;
            for (const auto& rep : reports) {
                if (reports.size() > 1) text += "# " + rep.command + "\n";
                text += render_report(rep, format);
                all_pass = all_pass && rep.pass();
            }
            emit(text, out_path);
            return all_pass ? 0 : 1;
        }
        if (*exp) {
            if (what == "hrep") {
                if (exp_a != "K" && exp_a != "W" && exp_a != "D") {
                    std::cerr << "export hrep needs a family K, W or D and n\n";
                    return 2;
                }
                int n = exp_b;
                int hard = 7;
                if (n < 1 || (n > hard && unsafe_max == 0)) {
                    std::cerr << "n out of range\n";
                    return 2;
                }
                HRepPolytope p = exp_a == "K"   ? build_K(n, power_cost(c_base))
                                 : exp_a == "W" ? build_W(n, power_cost(c_base))
                                                : build_simplex(n);
                emit(render_hrep(p), out_path);
                return 0;
            }
            int n = 0;
            try {
                n = std::stoi(exp_a);
            } catch (...) {
                std::cerr << "export " << what << " needs an integer n\n";
                return 2;
            }
            if (n < 1 || (n > 5 && unsafe_max == 0)) {
                std::cerr << "n out of range (hard cap 5, use --unsafe-max-n)\n";
                return 2;
            }
            if (what == "deblow-report") {
                emit(render_deblow(n), out_path);
                return 0;
            }
            // complex
            std::string kind = cobar_kind.empty() ? "cycl" : cobar_kind;
            ChainComplex cc;
            if (kind == "ass")
                cc = cobar_operad(n).cc;
            else if (kind == "cycl")
                cc = cobar_module(n).cc;
            else if (kind == "blocks")
                cc = free_module_complex(n).cc;
            else
                cc = simplex_complex(n);
            emit(render_complex(cc), out_path);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
