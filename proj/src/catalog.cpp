#include "rigidmod/catalog.hpp"

#include <sstream>
#include <stdexcept>

#include "rigidmod/errors.hpp"

namespace rigidmod {

namespace {

void check(bool ok, const std::string& msg) {
    if (!ok) throw std::logic_error("catalog: " + msg);
}

std::map<long long, long long> z_eta_map(const RootSystem& rs) {
    std::map<long long, long long> e;
    long long n = rs.n;
    switch (rs.kind) {
        case AdeKind::A:
            e[1] += -1;
            break;
        case AdeKind::D:
            e[1] += -1;
            e[2] += 2;
            e[4] += -1;
            e[2 * n - 4] += -2;  // collides with key 4 when n = 4
            e[4 * n - 8] += 1;
            break;
        case AdeKind::E:
            e[1] += -1;
            e[2] += 2;
            if (n == 6) {
                e[8] += -2;
                e[12] += -1;
                e[24] += 1;
            } else if (n == 7) {
                e[12] += -1;
                e[16] += -1;
                e[24] += -1;
                e[48] += 1;
            } else {
                e[24] += -1;
                e[40] += -1;
                e[60] += -1;
                e[120] += 1;
            }
            break;
    }
    return e;
}

}  // namespace

DeltaCatalogEntry catalog_entry(const RootSystem& rs) {
    DeltaCatalogEntry ent;
    ent.rs = rs;

    auto ze = z_eta_map(rs);
    ent.z_eta = EtaProduct(ze);
    ze[rs.k] += rs.n + 1;
    ent.r_eta = EtaProduct(ze);

    ent.expected_weight = Q(rs.n, 2);
    ent.expected_level = rs.k;
    ent.expected_order_inf = Q((rs.n + 1) * rs.k - 1, 24);
    ent.expected_order_cusp1 = 0;

    check(ent.r_eta.level() == rs.k, "level of the rigid eta product must equal k");
    check(ent.r_eta.weight() == ent.expected_weight, "weight must be n/2");
    check(ent.r_eta.sum_a() == rs.n, "sum of exponents must be n");
    check(ent.r_eta.sum_a_over_m() == 0, "sum of a_m/m must vanish");
    check(ent.r_eta.sum_ma() == (rs.n + 1) * rs.k - 1, "sum of m a_m must be (n+1)k-1");
    return ent;
}

CheckResult verify_theta_eta_identity(const RootSystem& rs, long long trunc_q) {
    DeltaCatalogEntry ent = catalog_entry(rs);
    long long shift = (rs.n + 1) * rs.k - 1;  // exponent index of the prefactor
    // the shifted theta side must be exact through index 24*trunc_q
    long long theta_q = trunc_q - (shift + 23) / 24;
    if (theta_q < 0) theta_q = 0;
    QSeries lhs = mul(QSeries::monomial(Q(1), shift), rigid_series(rs, theta_q));
    QSeries rhs = eta_product_expansion(ent.r_eta, trunc_q);
    auto bad = first_mismatch(lhs, rhs, 24 * trunc_q);
    return CheckResult{!bad.has_value(), bad};
}

CheckResult verify_z_eta_identity(const RootSystem& rs, long long trunc_q) {
    DeltaCatalogEntry ent = catalog_entry(rs);
    QSeries lhs = mul(QSeries::monomial(Q(1), -1), orbifold_series(rs, trunc_q));
    QSeries rhs = eta_product_expansion(ent.z_eta, trunc_q);
    auto bad = first_mismatch(lhs, rhs, 24 * trunc_q - 1);
    return CheckResult{!bad.has_value(), bad};
}

OrderProfileCheck verify_order_profile(const RootSystem& rs) {
    DeltaCatalogEntry ent = catalog_entry(rs);
    OrderProfileCheck out;
    out.profile = order_profile(ent.r_eta);

    auto fail = [&](const std::string& msg) {
        if (out.detail.empty()) out.detail = msg;
    };

    if (ent.r_eta.level() != rs.k) fail("level != k");
    if (ent.r_eta.weight() != ent.expected_weight) fail("weight != n/2");
    if (out.profile.cls != HoloClass::Holomorphic)
        fail(std::string("holomorphy class is ") + to_string(out.profile.cls));
    if (out.profile.order_inf != ent.expected_order_inf) fail("order at infinity is wrong");

    for (auto& [c, o] : out.profile.divisor_orders) {
        if (c == 1) {
            if (o != 0) fail("order at cusp 1 is nonzero");
        } else if (!(o > 0)) {
            fail("order at cusp 1/" + std::to_string(c) + " is not positive");
        }
        if (rs.kind == AdeKind::A && o != Q(c * c - 1, 24))
            fail("type A closed form (c^2-1)/24 fails at c=" + std::to_string(c));
    }
    out.pass = out.detail.empty();
    return out;
}

UnitRoot24 chi_delta(const RootSystem& rs, const GammaElement& A) {
    DeltaCatalogEntry ent = catalog_entry(rs);
    if (!A.in_gamma0(rs.k))
        throw NotInGamma0("matrix (" + A.to_string() + ") is not in Gamma0(" +
                          std::to_string(rs.k) + ")");

    long long s2 = (rs.n + 1) * rs.k - 1;
    long long b = ((A.b % 24) + 24) % 24, d = ((A.d % 24) + 24) % 24;
    long long x;
    int sign = 1;
    if (A.c % 2 != 0) {
        for (auto& [m, am] : ent.r_eta.exps)
            if (am % 2 != 0) sign *= kronecker_star(A.d, A.c / m);
        x = b * d * (s2 % 24);
    } else {
        for (auto& [m, am] : ent.r_eta.exps)
            if (am % 2 != 0) sign *= kronecker_substar(A.c / m, A.d);
        x = b * d * (s2 % 24) + 3 * (d - 1) * rs.n;
    }
    return UnitRoot24(x + (sign < 0 ? 12 : 0));
}

std::string e_type_order_table_csv() {
    std::ostringstream os;
    os << "type,cusp,order\n";
    for (int n : {6, 7, 8}) {
        DeltaCatalogEntry ent = catalog_entry(make_root_system(AdeKind::E, n));
        for (long long c : divisors(ent.rs.k))
            os << ent.rs.token() << "," << c << "," << q_to_string(cusp_order(ent.r_eta, c))
               << "\n";
    }
    return os.str();
}

}  // namespace rigidmod
