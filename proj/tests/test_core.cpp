// Unit tests for exact linear algebra, permutations, and planar trees.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hedra/qlin.hpp>
#include <hedra/perm.hpp>
#include <hedra/trees.hpp>

#include <set>

using namespace hedra;

TEST_CASE("rational helpers") {
    CHECK(q_str(Q(3)) == "3");
    CHECK(q_str(Q(3) / 6) == "1/2");
    CHECK(q_str(Q(-3) / 6) == "-1/2");
}

TEST_CASE("rref and rank") {
    std::vector<QVec> rows = {{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
    CHECK(rank(rows) == 2);
    auto piv = rref(rows);
    CHECK(piv == std::vector<size_t>{0, 1});
    RowSpace rs(rows);
    CHECK(rs.contains({1, 2, 3}));
    CHECK(!rs.contains({0, 0, 1}));
}

TEST_CASE("solve") {
    QMat a(2, 2);
    a(0, 0) = 2; a(0, 1) = 1; a(1, 0) = 1; a(1, 1) = 3;
    auto x = solve(a, {Q(5), Q(10)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 1);
    CHECK((*x)[1] == 3);
}

TEST_CASE("quotient space") {
    // Q^3 / span{(1,1,0)}
    QuotientSpace qs(3, {{1, 1, 0}});
    CHECK(qs.dim() == 2);
    QVec a = qs.project({1, 0, 0});
    QVec b = qs.project({0, -1, 0});
    CHECK(a == b);  // equal modulo the subspace
}

TEST_CASE("composition convention s(t(i))") {
    Perm s({2, 1, 3}), t({3, 1, 2});
    Perm st = compose(s, t);
    CHECK(st(1) == s(t(1)));
    CHECK(st.img == std::vector<int>{3, 2, 1});
}

TEST_CASE("associativity and inverse, n<=5 exhaustive spot") {
    for (int n = 1; n <= 4; ++n) {
        auto ps = all_perms(n);
        for (const auto& a : ps) {
            CHECK(compose(a.inverse(), a) == Perm::id(n));
            for (const auto& b : ps)
                for (const auto& c : ps)
                    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
        }
    }
}

TEST_CASE("koszul sign examples") {
    CHECK(koszul_sign(Perm::id(3), {0, 1, 5}) == 1);
    CHECK(koszul_sign(Perm({2, 1}), {1, 1}) == -1);
    CHECK(koszul_sign(Perm({2, 1}), {0, 1}) == 1);
    // 3-cycle on degree-0 entries: sign +1, chi = sgn = +1
    Perm rho = rotation(3, 1);
    CHECK(koszul_sign(rho, {0, 0, 0}) == 1);
    CHECK(chi_sign(rho, {0, 0, 0}) == 1);
    // chi multiplicativity: chi(s∘t) = chi(s; t-permuted degrees)·chi(t)
    for (const auto& s : all_perms(4))
        for (const auto& t : all_perms(4))
            for (int mask = 0; mask < 16; ++mask) {
                std::vector<int> d(4);
                for (int i = 0; i < 4; ++i) d[i] = (mask >> i) & 1;
                std::vector<int> dt(4);
                // degrees seen by s after t has rearranged the inputs:
                // slot i of the t-rearranged list holds a_{t(i)}
                for (int i = 1; i <= 4; ++i) dt[i - 1] = d[t(i) - 1];
                CHECK(chi_sign(compose(t, s), d) ==
                      chi_sign(s, dt) * chi_sign(t, d));
            }
}

TEST_CASE("cyclic cosets") {
    CHECK(coset_project(Perm::id(3)) == coset_project(rotation(3, 1)));
    // brute force: all of Σ_3 falls into exactly 2 cosets
    std::set<Perm> reps;
    for (const auto& s : all_perms(3)) reps.insert(coset_project(s).rep());
    CHECK(reps.size() == 2);
    // both directions: same coset iff rotation-related, n <= 6
    for (int n = 2; n <= 6; ++n) {
        auto ps = all_perms(n);
        for (size_t i = 0; i < ps.size(); i += 7)
            for (size_t j = 0; j < ps.size(); j += 5) {
                bool rot = false;
                for (int r = 0; r < n; ++r)
                    if (compose(rotation(n, r), ps[i]) == ps[j]) rot = true;
                CHECK((coset_project(ps[i]) == coset_project(ps[j])) == rot);
            }
        CHECK(all_cosets(n).size() == all_perms(n).size() / n);
    }
    // canonicalization idempotent
    for (const auto& s : all_perms(4)) {
        auto c = coset_project(s);
        CHECK(coset_project(c.rep()) == c);
    }
}

TEST_CASE("block permutations") {
    // identity outer permutation: identity block permutation
    CHECK(block_perm(Perm::id(3), {2, 1, 3}) == Perm::id(6));
    // swap two blocks of sizes 2,1: (x1 x2 | x3) -> (x3 | x1 x2)
    Perm bp = block_perm(Perm({2, 1}), {2, 1});
    CHECK(bp.img == std::vector<int>{2, 3, 1});
    // compatibility: block_perm(s∘t, m) = block_perm(s, t-rearranged m)∘block_perm(t, m)
    for (const auto& s : all_perms(3))
        for (const auto& t : all_perms(3)) {
            std::vector<int> m = {2, 1, 3};
            // after block_perm(t, m), block j of the result is original
            // block t^{-1}(j), so the outer factor sees sizes m∘t^{-1}
            std::vector<int> mt(3);
            for (int i = 1; i <= 3; ++i) mt[i - 1] = m[t.inverse()(i) - 1];
            CHECK(block_perm(compose(s, t), m) ==
                  compose(block_perm(s, mt), block_perm(t, m)));
        }
}

TEST_CASE("planar trees") {
    CHECK(enumerate_planar_trees(1).size() == 1);
    CHECK(enumerate_planar_trees(2).size() == 1);
    CHECK(enumerate_planar_trees(3).size() == 3);
    CHECK(enumerate_planar_trees(4).size() == 11);  // faces of the pentagon
    // independent oracle: super-Catalan recurrence
    // s(1)=1, s(n) = (3(2n-3)s(n-1) - (n-3)s(n-2)) / n
    std::vector<long> s = {0, 1, 1};
    for (int n = 3; n <= 8; ++n)
        s.push_back((3 * (2 * n - 3) * s[n - 1] - (n - 3) * s[n - 2]) / n);
    for (int n = 1; n <= 8; ++n)
        CHECK(static_cast<long>(enumerate_planar_trees(n).size()) == s[n]);

    CHECK(graft(corolla(2), {leaf(), leaf()}) == corolla(2));
    PTree lcomb = graft(corolla(2), {corolla(2), leaf()});
    CHECK(lcomb.encode() == "((**)*)");
    CHECK(graft(corolla(2), {corolla(2), corolla(2)}).n_vert() == 3);
    // binary tree counts: Catalan
    int cat4 = 0;
    for (const auto& t : enumerate_planar_trees(4))
        if (t.is_binary()) ++cat4;
    CHECK(cat4 == 5);
}
