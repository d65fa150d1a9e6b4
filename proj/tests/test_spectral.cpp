// Filtration of the rake complex by block count: page dimensions, the
// identification of the first-page bottom row with the block-merge
// complex, and degeneration at the second page.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hedra/spectral.hpp>

using namespace hedra;

static long fact(int n) {
    long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

TEST_CASE("filtration is closed and E^0 is the associated graded") {
    for (int n = 2; n <= 4; ++n) {
        FilteredRake fr(n);
        std::string w;
        CHECK_MESSAGE(fr.filtration_closed(&w), w);
        // E^0 total dims per degree equal the complex dims
        for (int d = 0; d <= fr.m.cc.top(); ++d) {
            long total = 0;
            for (int p = 0; p <= d; ++p) total += fr.page_dim(0, p, d - p);
            CHECK(total == static_cast<long>(fr.m.cc.dim(d)));
        }
    }
    // spec example n = 3: associated graded preserves (12, 12, 2)
    FilteredRake f3(3);
    std::vector<long> dims;
    for (int d = 0; d <= 2; ++d) {
        long t = 0;
        for (int p = 0; p <= d; ++p) t += f3.page_dim(0, p, d - p);
        dims.push_back(t);
    }
    CHECK(dims == std::vector<long>{12, 12, 2});
}

TEST_CASE("full degeneration analysis for n <= 4") {
    for (int n = 2; n <= 4; ++n) {
        auto rep = spectral_analysis(n);
        CHECK_MESSAGE(rep.filtration_closed, rep.witness);
        CHECK_MESSAGE(rep.e1_vanishes_above_row_zero, rep.witness);
        CHECK_MESSAGE(rep.e1_row_matches_blocks, rep.witness);
        CHECK_MESSAGE(rep.d1_matches_block_boundary, rep.witness);
        CHECK_MESSAGE(rep.e2_concentrated, rep.witness);
        CHECK_MESSAGE(rep.collapsed, rep.witness);
        CHECK(rep.e2_total == fact(n - 1));
        // bottom row of the first page = cells of the symmetrized simplex
        auto db = DBar(n);
        for (int p = 0; p < n; ++p)
            CHECK(rep.e1_row[p] == static_cast<long>(db.cc.dim(p)));
    }
}

TEST_CASE("degeneration table at n = 3") {
    auto rows = deblow_report(3);
    CHECK(rows.size() == 26);
    long collapsed = 0;
    bool found = false;
    for (const auto& r : rows) {
        if (r.collapsed) ++collapsed;
        if (r.cell == "123") {
            found = true;
            CHECK(r.collapsed);
            CHECK(r.image.substr(0, 3) == "<1>");
        }
    }
    CHECK(found);
    // exactly the six one-block corolla edges lose dimension
    CHECK(collapsed == 6);
}
