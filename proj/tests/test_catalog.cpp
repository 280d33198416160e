#include <doctest.h>

#include "rigidmod/catalog.hpp"
#include "rigidmod/numeric_eval.hpp"

using namespace rigidmod;

namespace {

using ExpMap = std::map<long long, long long>;

}  // namespace

TEST_CASE("catalog exponent maps") {
    CHECK(catalog_entry(make_root_system(AdeKind::A, 2)).r_eta.exps ==
          ExpMap{{1, -1}, {3, 3}});
    CHECK(catalog_entry(make_root_system(AdeKind::D, 4)).r_eta.exps ==
          ExpMap{{1, -1}, {2, 2}, {4, -3}, {8, 6}});
    CHECK(catalog_entry(make_root_system(AdeKind::D, 5)).r_eta.exps ==
          ExpMap{{1, -1}, {2, 2}, {4, -1}, {6, -2}, {12, 7}});
    CHECK(catalog_entry(make_root_system(AdeKind::E, 6)).r_eta.exps ==
          ExpMap{{1, -1}, {2, 2}, {8, -2}, {12, -1}, {24, 8}});
    CHECK(catalog_entry(make_root_system(AdeKind::E, 7)).r_eta.exps ==
          ExpMap{{1, -1}, {2, 2}, {12, -1}, {16, -1}, {24, -1}, {48, 9}});
    CHECK(catalog_entry(make_root_system(AdeKind::E, 8)).r_eta.exps ==
          ExpMap{{1, -1}, {2, 2}, {24, -1}, {40, -1}, {60, -1}, {120, 10}});
    CHECK(catalog_entry(make_root_system(AdeKind::A, 5)).z_eta.exps == ExpMap{{1, -1}});
}

TEST_CASE("catalog structural invariants for the sweep") {
    for (const RootSystem& rs : standard_sweep()) {
        CAPTURE(rs.token());
        DeltaCatalogEntry ent = catalog_entry(rs);  // ctor asserts the sums
        CHECK(ent.r_eta.level() == rs.k);
        CHECK(ent.r_eta.weight() == Q(rs.n, 2));
        // r_eta is z_eta with the exponent at k raised by n+1
        EtaProduct diff = merge(ent.r_eta, EtaProduct(ExpMap{{rs.k, -(rs.n + 1)}}));
        CHECK(diff.exps == ent.z_eta.exps);
    }
}

TEST_CASE("theta = eta at small truncation for the sweep") {
    for (const RootSystem& rs : standard_sweep()) {
        CAPTURE(rs.token());
        CheckResult r = verify_theta_eta_identity(rs, 40);
        CHECK(r.pass);
    }
}

TEST_CASE("orbifold eta identity at small truncation") {
    for (const RootSystem& rs : standard_sweep()) {
        CAPTURE(rs.token());
        CHECK(verify_z_eta_identity(rs, 30).pass);
    }
}

TEST_CASE("negative control: bumping an exponent breaks theta = eta") {
    RootSystem rs = make_root_system(AdeKind::A, 1);
    DeltaCatalogEntry ent = catalog_entry(rs);
    EtaProduct bumped = merge(ent.r_eta, EtaProduct(ExpMap{{2, 1}}));
    QSeries lhs = mul(QSeries::monomial(Q(1), 3), rigid_series(rs, 30));
    QSeries rhs = eta_product_expansion(bumped, 30);
    CHECK(first_mismatch(lhs, rhs, 24 * 30).has_value());
}

TEST_CASE("order profiles") {
    OrderProfileCheck e6 = verify_order_profile(make_root_system(AdeKind::E, 6));
    CHECK(e6.pass);
    std::vector<std::pair<long long, Q>> expected = {
        {1, Q(0)},      {2, Q(1, 8)},   {3, Q(1, 12)},  {4, Q(1, 8)},
        {6, Q(11, 24)}, {8, Q(7, 24)},  {12, Q(35, 24)}, {24, Q(167, 24)}};
    CHECK(e6.profile.divisor_orders == expected);
    CHECK(e6.profile.order_inf == Q(167, 24));

    OrderProfileCheck e8 = verify_order_profile(make_root_system(AdeKind::E, 8));
    CHECK(e8.pass);
    CHECK(e8.profile.divisor_orders.back() == std::pair<long long, Q>{120, Q(1079, 24)});

    // type A closed form at every divisor
    OrderProfileCheck a3 = verify_order_profile(make_root_system(AdeKind::A, 3));
    CHECK(a3.pass);
    CHECK(cusp_order(catalog_entry(make_root_system(AdeKind::A, 3)).r_eta, 4) == Q(5, 8));

    for (const RootSystem& rs : standard_sweep()) {
        CAPTURE(rs.token());
        CHECK(verify_order_profile(rs).pass);
    }
}

TEST_CASE("chi closed form agrees with the product multiplier") {
    RootSystem a1 = make_root_system(AdeKind::A, 1);
    CHECK(chi_delta(a1, GammaElement(1, 0, 0, 1)) == UnitRoot24(0));
    CHECK(chi_delta(a1, GammaElement(1, 1, 0, 1)) == UnitRoot24(3));
    CHECK_THROWS_AS(chi_delta(a1, GammaElement(1, 0, 1, 1)), NotInGamma0);

    for (int n : {6}) {
        RootSystem rs = make_root_system(AdeKind::E, n);
        DeltaCatalogEntry ent = catalog_entry(rs);
        Gamma0Sampler sampler(rs.k, 31337);
        for (int i = 0; i < 300; ++i) {
            GammaElement A = sampler.next();
            CAPTURE(A.to_string());
            CHECK(chi_delta(rs, A) == product_multiplier(ent.r_eta, A));
        }
    }
}

TEST_CASE("numeric transformation law for small catalog entries") {
    Cplx tau(0.1, 1.0);
    for (auto [kind, n] :
         std::vector<std::pair<AdeKind, int>>{{AdeKind::A, 1}, {AdeKind::A, 2}}) {
        RootSystem rs = make_root_system(kind, n);
        DeltaCatalogEntry ent = catalog_entry(rs);
        Gamma0Sampler sampler(rs.k, 2024, 2, 20, 2);
        for (int i = 0; i < 20; ++i) {
            GammaElement A = sampler.next();
            CAPTURE(A.to_string());
            double resid =
                transformation_residual(ent.r_eta, A, chi_delta(rs, A), ent.r_eta.weight(), tau);
            CHECK(resid < 1e-9);
        }
    }
}

TEST_CASE("E-type order table") {
    std::string csv = e_type_order_table_csv();
    CHECK(csv.find("type,cusp,order\n") == 0);
    CHECK(csv.find("E6,24,167/24") != std::string::npos);
    CHECK(csv.find("E7,48,383/24") != std::string::npos);
    CHECK(csv.find("E8,120,1079/24") != std::string::npos);
    CHECK(csv.find("E8,3,1/120") != std::string::npos);
}
