#include <doctest.h>

#include <algorithm>

#include "rigidmod/root_system.hpp"

using namespace rigidmod;

namespace {

IntVec sorted(IntVec v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST_CASE("A1 data") {
    RootSystem rs = make_root_system(AdeKind::A, 1);
    CHECK(rs.k == 2);
    CHECK(rs.cartan == IntMat{{2}});
    CHECK(rs.dims == IntVec{1, 1});
    CHECK(affine_cartan(rs) == IntMat{{2, -2}, {-2, 2}});
    CHECK(rs.token() == "A1");
}

TEST_CASE("A2 affine Cartan matrix is the 3-cycle") {
    RootSystem rs = make_root_system(AdeKind::A, 2);
    CHECK(affine_cartan(rs) == IntMat{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}});
}

TEST_CASE("D4 data") {
    RootSystem rs = make_root_system(AdeKind::D, 4);
    CHECK(rs.k == 8);
    CHECK(sorted(rs.dims) == IntVec{1, 1, 1, 1, 2});
    long long sumsq = 0;
    for (long long d : rs.dims) sumsq += d * d;
    CHECK(sumsq == 8);

    // the central node (Bourbaki node 2) is adjacent to all four leaves
    IntMat ac = affine_cartan(rs);
    int center = -1;
    for (int i = 0; i <= 4; ++i) {
        int deg = 0;
        for (int j = 0; j <= 4; ++j)
            if (i != j && ac[i][j] == -1) ++deg;
        if (deg == 4) center = i;
    }
    CHECK(center == 2);
    // kernel check: C_affine annihilates (1,1,2,1,1)
    for (int i = 0; i <= 4; ++i) {
        long long dot = 0;
        for (int j = 0; j <= 4; ++j) dot += ac[i][j] * rs.dims[j];
        CHECK(dot == 0);
    }
}

TEST_CASE("E8 data") {
    RootSystem rs = make_root_system(AdeKind::E, 8);
    CHECK(rs.k == 120);
    CHECK(sorted(rs.dims) == IntVec{1, 2, 2, 3, 3, 4, 4, 5, 6});
}

TEST_CASE("sweep invariants") {
    for (const RootSystem& rs : standard_sweep()) {
        CAPTURE(rs.token());
        long long sumsq = 0;
        for (long long d : rs.dims) sumsq += d * d;
        CHECK(sumsq == rs.k);

        IntMat ac = affine_cartan(rs);
        for (int i = 0; i <= rs.n; ++i) {
            long long dot = 0;
            for (int j = 0; j <= rs.n; ++j) dot += ac[i][j] * rs.dims[j];
            CHECK(dot == 0);
        }
        // finite Cartan matrix = affine with the affine row/column deleted
        for (int i = 1; i <= rs.n; ++i)
            for (int j = 1; j <= rs.n; ++j) CHECK(ac[i][j] == rs.cartan[i - 1][j - 1]);
        // symmetric, diagonal 2, off-diagonal in {0, -1}
        for (int i = 0; i < rs.n; ++i)
            for (int j = 0; j < rs.n; ++j) {
                CHECK(rs.cartan[i][j] == rs.cartan[j][i]);
                if (i == j)
                    CHECK(rs.cartan[i][j] == 2);
                else
                    CHECK((rs.cartan[i][j] == 0 || rs.cartan[i][j] == -1));
            }
    }
}

TEST_CASE("group orders by type") {
    CHECK(make_root_system(AdeKind::A, 7).k == 8);
    CHECK(make_root_system(AdeKind::D, 6).k == 16);
    CHECK(make_root_system(AdeKind::E, 6).k == 24);
    CHECK(make_root_system(AdeKind::E, 7).k == 48);
}

TEST_CASE("invalid ranks") {
    CHECK_THROWS_AS(make_root_system(AdeKind::A, 0), InvalidRank);
    CHECK_THROWS_AS(make_root_system(AdeKind::D, 3), InvalidRank);
    CHECK_THROWS_AS(make_root_system(AdeKind::E, 5), InvalidRank);
    CHECK_THROWS_AS(make_root_system(AdeKind::E, 9), InvalidRank);
    CHECK_THROWS_AS(parse_root_token("Q9"), InvalidRank);
    CHECK_THROWS_AS(parse_root_token("A"), InvalidRank);
    CHECK_THROWS_AS(parse_root_token("Axy"), InvalidRank);
}

TEST_CASE("token round trip") {
    for (const RootSystem& rs : standard_sweep())
        CHECK(parse_root_token(rs.token()).token() == rs.token());
}
