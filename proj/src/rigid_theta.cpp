#include "rigidmod/rigid_theta.hpp"

#include <stdexcept>

#include "rigidmod/lattice_enum.hpp"

namespace rigidmod {

QSeries rigid_series(const RootSystem& rs, long long trunc_q) {
    if (trunc_q < 0) throw std::logic_error("rigid_series: trunc must be >= 0");
    const int n = rs.n;

    IntMat G(n, IntVec(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) G[i][j] = rs.k * rs.cartan[i][j];
    IntVec b(n);
    for (int i = 0; i < n; ++i) b[i] = rs.dims[i + 1];  // dims of the finite nodes

    std::vector<long long> counts(static_cast<std::size_t>(trunc_q) + 1, 0);
    enumerate_quadratic(G, b, trunc_q, [&](const IntVec&, long long e) {
        if (e < 0)
            throw std::logic_error("rigid_series: negative exponent from the lattice sum");
        ++counts[static_cast<std::size_t>(e)];
    });

    std::vector<std::pair<long long, Q>> terms;
    for (long long e = 0; e <= trunc_q; ++e)
        if (counts[static_cast<std::size_t>(e)] != 0)
            terms.push_back({24 * e, Q(counts[static_cast<std::size_t>(e)])});
    return QSeries(std::move(terms), 24 * trunc_q + 23);
}

QSeries goettsche_factor(const RootSystem& rs, long long trunc_q) {
    return euler_product(rs.k, -(rs.n + 1), 24 * trunc_q + 23);
}

QSeries orbifold_series(const RootSystem& rs, long long trunc_q) {
    return mul(goettsche_factor(rs, trunc_q), rigid_series(rs, trunc_q));
}

CheckResult factorization_check(const RootSystem& rs, long long trunc_q) {
    QSeries lhs = orbifold_series(rs, trunc_q);
    QSeries rhs = mul(rigid_series(rs, trunc_q), goettsche_factor(rs, trunc_q));
    auto bad = first_mismatch(lhs, rhs, 24 * trunc_q);
    return CheckResult{!bad.has_value(), bad};
}

}  // namespace rigidmod
