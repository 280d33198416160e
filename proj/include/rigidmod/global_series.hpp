#pragma once

#include <vector>

#include "rigidmod/catalog.hpp"
#include "rigidmod/eta_product.hpp"
#include "rigidmod/qseries.hpp"
#include "rigidmod/rigid_theta.hpp"
#include "rigidmod/root_system.hpp"

namespace rigidmod {

// A quotient surface presented by its combinatorial data: the group order k
// and the list of singular-point types, each with stabilizer order k_i
// dividing k.  No geometry is modelled and no realizability check is
// attempted; an empty point list is a free action.
struct GlobalOrbifold {
    long long k = 1;
    std::vector<RootSystem> points;

    GlobalOrbifold(long long k_, std::vector<RootSystem> pts);  // validates k_i | k
};

// prod_i rigid_series(Delta_i)(q^(k/k_i)); the empty product is 1.
QSeries global_rigid_series(const GlobalOrbifold& g, long long trunc_q);

struct GlobalModularData {
    Q prefactor_exp;   // sum_i (k/k_i)((n_i+1)k_i - 1)/24, in q units
    Q weight;          // (1/2) sum n_i
    long long level;   // k
    EtaProduct eta;    // merged rescaled local eta products
    OrderProfile profile;  // of the merged product; always holomorphic
};

// Modular bookkeeping of the prefactored global series: q^prefactor_exp times
// the global rigid series is the expansion of `eta`, a holomorphic form of
// the stated weight on Gamma0(k).
GlobalModularData global_modular_data(const GlobalOrbifold& g);

// Checks q^prefactor * global_rigid_series == expansion of the merged eta
// product, coefficient-exact to q^trunc_q.
CheckResult verify_global_identity(const GlobalOrbifold& g, long long trunc_q);

}  // namespace rigidmod
