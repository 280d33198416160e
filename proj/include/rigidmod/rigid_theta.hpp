#pragma once

#include <optional>

#include "rigidmod/qseries.hpp"
#include "rigidmod/root_system.hpp"

namespace rigidmod {

struct CheckResult {
    bool pass = false;
    std::optional<Mismatch> mismatch;  // first discrepancy when pass == false
};

// The rigid generating series as a lattice theta sum: summing q^E(m) over all
// m in Z^n with E(m) = sum_i m_i dim(rho_i) + (k/2) m^T C m, truncated at
// q^trunc_q.  All coefficients are lattice-point counts (non-negative
// integers); the constant term is 1.
QSeries rigid_series(const RootSystem& rs, long long trunc_q);

// prod_{j>=1} (1 - q^(k j))^-(n+1): the Hilbert-scheme series of the minimal
// resolution evaluated at q^k.
QSeries goettsche_factor(const RootSystem& rs, long long trunc_q);

// Orbifold series: goettsche_factor * rigid_series.  For type A this equals
// the plain partition generating series for every rank.
QSeries orbifold_series(const RootSystem& rs, long long trunc_q);

// Recomputes both sides of  orbifold = rigid * goettsche  through independent
// calls and compares coefficients exactly to q^trunc_q.
CheckResult factorization_check(const RootSystem& rs, long long trunc_q);

}  // namespace rigidmod
