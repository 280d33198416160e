#pragma once

#include <complex>
#include <random>
#include <string>

#include "rigidmod/eta_product.hpp"

namespace rigidmod {

// An exact 24th root of unity e(j/24) = exp(2 pi i j / 24).  Every multiplier
// value in this library lands in this group (Kronecker signs contribute
// j += 12), so multiplier identities can be checked bit-exactly.
class UnitRoot24 {
public:
    explicit UnitRoot24(long long j = 0) : j_(static_cast<int>(((j % 24) + 24) % 24)) {}

    int j() const { return j_; }
    UnitRoot24 operator*(UnitRoot24 o) const { return UnitRoot24(j_ + o.j_); }
    UnitRoot24 inverse() const { return UnitRoot24(-j_); }
    UnitRoot24 pow(long long e) const { return UnitRoot24(j_ * (((e % 24) + 24) % 24)); }
    bool operator==(const UnitRoot24&) const = default;

    std::complex<double> value() const;
    std::string to_string() const;  // "e(j/24)" reduced, "1" and "-1" spelled out

private:
    int j_;
};

// An element of SL(2,Z); membership in Gamma0(N) means N | c.
struct GammaElement {
    long long a = 1, b = 0, c = 0, d = 1;

    GammaElement() = default;
    GammaElement(long long a_, long long b_, long long c_, long long d_);

    bool in_gamma0(long long N) const { return N != 0 && c % N == 0; }
    std::string to_string() const;
};

// Kronecker-Jacobi-Legendre symbol (c/d), fully extended to Z x Z.
int kronecker_symbol(long long c, long long d);

// The two sign-adjusted symbols used by the Petersson formula, defined for
// d odd, gcd(c,d) = 1 (c = 0 forces d = +-1):
//   (c/d)^* = (c/|d|)
//   (c/d)_* = (c/|d|) * (-1)^((sgn c - 1)(sgn d - 1)/4),
// with the conventions (0/1)^* = (0/-1)^* = (0/1)_* = 1 and (0/-1)_* = -1.
// Throws DomainError outside this domain.
int kronecker_star(long long c, long long d);
int kronecker_substar(long long c, long long d);

// Petersson's multiplier of the Dedekind eta function:
//   c odd:  (d/c)^* e((1/24)((a+d)c - bd(c^2-1) - 3c))
//   c even: (c/d)_* e((1/24)((a+d)c - bd(c^2-1) + 3d - 3 - 3cd))
UnitRoot24 eta_multiplier(const GammaElement& A);

// Multiplier of an eta product on Gamma0(level), two routes:
//  - petersson: the product of eta multipliers of (a, mb; c/m, d) over keys m
//  - closed:    the sign product (f)^*/(f)_* times a single exponential in
//               sum a_m/m, sum m a_m and sum a_m
// Both require level | c (throws NotInGamma0).  product_multiplier computes
// both and insists they agree.
UnitRoot24 product_multiplier_petersson(const EtaProduct& f, const GammaElement& A);
UnitRoot24 product_multiplier_closed(const EtaProduct& f, const GammaElement& A);
UnitRoot24 product_multiplier(const EtaProduct& f, const GammaElement& A);

// Seeded generator of Gamma0(N) elements with bounded entries: c = N*t with
// |t| <= c_range, |d| <= d_range coprime to c, (a,b) completed by the
// extended Euclid identity and shifted by s*(c,d) with |s| <= shift_range.
class Gamma0Sampler {
public:
    Gamma0Sampler(long long N, std::uint64_t seed, long long c_range = 25,
                  long long d_range = 120, long long shift_range = 6);
    GammaElement next();

private:
    long long N_, c_range_, d_range_, shift_range_;
    std::mt19937_64 rng_;
};

}  // namespace rigidmod
