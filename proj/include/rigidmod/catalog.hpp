#pragma once

#include <string>

#include "rigidmod/eta_product.hpp"
#include "rigidmod/multiplier.hpp"
#include "rigidmod/rigid_theta.hpp"
#include "rigidmod/root_system.hpp"

namespace rigidmod {

// The eta products attached to each ADE type, with the modularity facts the
// verification suite checks against them.
//
//   z_eta:  expansion of q^(-1/24) * orbifold series
//             A_n:  1 / eta(tau)
//             D_n:  eta^2(2t) eta((4n-8)t) / (eta(t) eta(4t) eta^2((2n-4)t))
//             E6 :  eta^2(2t) eta(24t) / (eta(t) eta^2(8t) eta(12t))
//             E7 :  eta^2(2t) eta(48t) / (eta(t) eta(12t) eta(16t) eta(24t))
//             E8 :  eta^2(2t) eta(120t) / (eta(t) eta(24t) eta(40t) eta(60t))
//   r_eta:  z_eta with the exponent of eta(k tau) raised by n+1; equals
//           q^(((n+1)k-1)/24) * rigid series.
//
// Structural facts asserted at construction: level(r_eta) = k,
// weight(r_eta) = n/2, sum a_m = n, sum a_m/m = 0, sum m a_m = (n+1)k-1.
// For D4 the scaled factors collide at key 4 and are stored merged.
struct DeltaCatalogEntry {
    RootSystem rs;
    EtaProduct z_eta;
    EtaProduct r_eta;
    Q expected_weight;       // n/2
    long long expected_level;  // k
    Q expected_order_inf;    // ((n+1)k - 1)/24
    Q expected_order_cusp1;  // 0
};

DeltaCatalogEntry catalog_entry(const RootSystem& rs);

// q^(((n+1)k-1)/24) * rigid_series  ==  expansion of r_eta, exact to q^trunc_q.
CheckResult verify_theta_eta_identity(const RootSystem& rs, long long trunc_q);

// q^(-1/24) * orbifold_series  ==  expansion of z_eta, exact to q^trunc_q.
CheckResult verify_z_eta_identity(const RootSystem& rs, long long trunc_q);

struct OrderProfileCheck {
    bool pass = false;
    OrderProfile profile;     // orders of r_eta at the divisors of k and at infinity
    std::string detail;       // first failed expectation, empty when pass
};

// Order 0 at the cusp 1, ((n+1)k-1)/24 at infinity, strictly positive at
// every other divisor of k; for type A also the closed form (c^2-1)/24.
// Additionally: weight n/2, level k, holomorphic but not cuspidal.
OrderProfileCheck verify_order_profile(const RootSystem& rs);

// Specialized closed form of the multiplier of r_eta on Gamma0(k):
//   c odd:  (r_eta)^*(A) e((1/24) bd((n+1)k-1))
//   c even: (r_eta)_*(A) e((1/24)(bd((n+1)k-1) + 3(d-1)n))
// Must agree with product_multiplier(r_eta, A); the verification suite checks
// this over seeded random samples.
UnitRoot24 chi_delta(const RootSystem& rs, const GammaElement& A);

// CSV table of the cusp orders of the three E-type entries at every divisor
// of the level ("type,cusp,order", orders as reduced fractions).
std::string e_type_order_table_csv();

}  // namespace rigidmod
