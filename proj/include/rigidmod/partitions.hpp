#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "rigidmod/qseries.hpp"

namespace rigidmod {

// Brute-force partition oracle.  Counting is by explicit enumeration of the
// partitions themselves (descending-parts recursion, no memoization and no
// generating functions), so these values are independent of everything in
// qseries and can be used to check it.

// Number of partitions of m (p(0) = 1).
long long partition_count(long long m);

// Calls visit once for every partition of m, parts weakly decreasing.
void for_each_partition(long long m,
                        const std::function<void(const std::vector<long long>&)>& visit);

// Checks that the coefficient of q^j in the orbifold series of A_n equals
// p(j) for all j <= trunc_q.  Returns the first failing exponent, or nullopt
// when the identity holds on the whole range.
std::optional<long long> verify_an_orbifold(int n, long long trunc_q);

}  // namespace rigidmod
