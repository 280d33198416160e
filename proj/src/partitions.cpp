#include "rigidmod/partitions.hpp"

#include "rigidmod/rigid_theta.hpp"
#include "rigidmod/root_system.hpp"

namespace rigidmod {

namespace {

long long count_rec(long long m, long long max_part) {
    if (m == 0) return 1;
    long long total = 0;
    for (long long p = std::min(m, max_part); p >= 1; --p) total += count_rec(m - p, p);
    return total;
}

void walk(long long m, long long max_part, std::vector<long long>& acc,
          const std::function<void(const std::vector<long long>&)>& visit) {
    if (m == 0) {
        visit(acc);
        return;
    }
    for (long long p = std::min(m, max_part); p >= 1; --p) {
        acc.push_back(p);
        walk(m - p, p, acc, visit);
        acc.pop_back();
    }
}

}  // namespace

long long partition_count(long long m) {
    if (m < 0) return 0;
    return count_rec(m, m == 0 ? 1 : m);
}

void for_each_partition(long long m,
                        const std::function<void(const std::vector<long long>&)>& visit) {
    std::vector<long long> acc;
    walk(m, m == 0 ? 1 : m, acc, visit);
}

std::optional<long long> verify_an_orbifold(int n, long long trunc_q) {
    RootSystem rs = make_root_system(AdeKind::A, n);
    QSeries z = orbifold_series(rs, trunc_q);
    for (long long j = 0; j <= trunc_q; ++j)
        if (z.coeff_q(j) != partition_count(j)) return j;
    return std::nullopt;
}

}  // namespace rigidmod
