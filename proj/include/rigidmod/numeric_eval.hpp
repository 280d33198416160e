#pragma once

#include <complex>

#include "rigidmod/eta_product.hpp"
#include "rigidmod/multiplier.hpp"
#include "rigidmod/rational.hpp"

namespace rigidmod {

using Cplx = std::complex<double>;

// w^k with the branch cut placed so that arg(w) in [-pi, pi): on the negative
// real axis the argument is -pi.  This is the branch under which Petersson's
// even-c formula is consistent at matrices with c = 0, d < 0 (e.g. minus the
// identity); off the cut it is the ordinary principal power.
Cplx principal_pow(Cplx w, double k);

// eta(m tau) summed as q^(m/24) * sum_r (-1)^r q^(m(3r-1)r/2), stopping once
// the geometric tail bound drops below 1e-13 in absolute value.  Throws if
// Im(tau) <= 0 or the certified bound is unreachable within the term cap.
Cplx eta_value(long long m, Cplx tau);

// prod_m eta_value(m, tau)^(a_m); safe for negative exponents since eta never
// vanishes on the upper half plane.
Cplx eta_product_value(const EtaProduct& f, Cplx tau);

Cplx moebius(const GammaElement& A, Cplx tau);

// | f(A tau) - chi * (c tau + d)^weight * f(tau) |, the numeric residual of
// the transformation law.
double transformation_residual(const EtaProduct& f, const GammaElement& A, UnitRoot24 chi,
                               const Q& weight, Cplx tau);

}  // namespace rigidmod
