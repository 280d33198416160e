#include "rigidmod/global_series.hpp"

#include <stdexcept>

#include "rigidmod/errors.hpp"

namespace rigidmod {

GlobalOrbifold::GlobalOrbifold(long long k_, std::vector<RootSystem> pts)
    : k(k_), points(std::move(pts)) {
    if (k < 1) throw StabilizerNotDividing("group order must be >= 1");
    for (const RootSystem& rs : points)
        if (k % rs.k != 0)
            throw StabilizerNotDividing("stabilizer order " + std::to_string(rs.k) + " of " +
                                        rs.token() + " does not divide the group order " +
                                        std::to_string(k));
}

QSeries global_rigid_series(const GlobalOrbifold& g, long long trunc_q) {
    if (trunc_q < 0) throw std::logic_error("global: trunc must be >= 0");
    QSeries acc = QSeries::one(24 * trunc_q + 23);
    for (const RootSystem& rs : g.points) {
        long long L = g.k / rs.k;
        long long local_q = (trunc_q + L - 1) / L;
        QSeries local = rescale(rigid_series(rs, local_q), L);
        acc = mul(acc, local);
    }
    if (acc.trunc() < 24 * trunc_q)
        throw std::logic_error("global: truncation fell short");
    return truncate(acc, std::min(acc.trunc(), 24 * trunc_q + 23));
}

GlobalModularData global_modular_data(const GlobalOrbifold& g) {
    GlobalModularData out;
    out.prefactor_exp = 0;
    out.weight = 0;
    out.level = g.k;
    for (const RootSystem& rs : g.points) {
        long long L = g.k / rs.k;
        out.prefactor_exp += Q(L * ((rs.n + 1) * rs.k - 1), 24);
        out.weight += Q(rs.n, 2);
        out.eta = merge(out.eta, rescale_level(catalog_entry(rs).r_eta, L));
    }
    out.profile = order_profile(out.eta);
    if (out.profile.cls == HoloClass::Meromorphic)
        throw std::logic_error("global: merged eta product is not holomorphic");
    return out;
}

CheckResult verify_global_identity(const GlobalOrbifold& g, long long trunc_q) {
    GlobalModularData data = global_modular_data(g);
    Q shift24 = data.prefactor_exp * 24;
    if (shift24.get_den() != 1)
        throw std::logic_error("global: prefactor exponent is off the 1/24 grid");
    long long shift = static_cast<long long>(shift24.get_num().get_si());
    QSeries lhs = mul(QSeries::monomial(Q(1), shift), global_rigid_series(g, trunc_q));
    QSeries rhs = eta_product_expansion(data.eta, trunc_q);
    auto bad = first_mismatch(lhs, rhs, 24 * trunc_q);
    return CheckResult{!bad.has_value(), bad};
}

}  // namespace rigidmod
