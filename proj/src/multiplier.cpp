#include "rigidmod/multiplier.hpp"

#include <gmpxx.h>

#include <numeric>
#include <stdexcept>

#include "rigidmod/errors.hpp"

namespace rigidmod {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

long long mod24(long long x) { return ((x % 24) + 24) % 24; }

// One factor (-1)^a folded into the exponent as 12*a.
long long sign_exponent(int sign) { return sign < 0 ? 12 : 0; }

void ext_gcd(long long a, long long b, long long& x, long long& y) {
    if (b == 0) {
        x = a >= 0 ? 1 : -1;
        y = 0;
        return;
    }
    long long x1, y1;
    ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
}

}  // namespace

std::complex<double> UnitRoot24::value() const {
    return std::polar(1.0, kTwoPi * static_cast<double>(j_) / 24.0);
}

std::string UnitRoot24::to_string() const {
    if (j_ == 0) return "1";
    if (j_ == 12) return "-1";
    long long g = std::gcd(static_cast<long long>(j_), 24LL);
    return "e(" + std::to_string(j_ / g) + "/" + std::to_string(24 / g) + ")";
}

GammaElement::GammaElement(long long a_, long long b_, long long c_, long long d_)
    : a(a_), b(b_), c(c_), d(d_) {
    if (a * d - b * c != 1)
        throw DomainError("matrix (" + to_string() + ") is not in SL(2,Z)");
}

std::string GammaElement::to_string() const {
    return std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "," +
           std::to_string(d);
}

int kronecker_symbol(long long c, long long d) {
    mpz_class zc(static_cast<long>(c));
    mpz_class zd(static_cast<long>(d));
    return mpz_kronecker(zc.get_mpz_t(), zd.get_mpz_t());
}

int kronecker_star(long long c, long long d) {
    if (d % 2 == 0) throw DomainError("(c/d)^* requires odd d");
    if (std::gcd(c, d) != 1) throw DomainError("(c/d)^* requires gcd(c,d) = 1");
    // c = 0 is covered by the Kronecker symbol itself: (0/1) = 1
    return kronecker_symbol(c, d < 0 ? -d : d);
}

int kronecker_substar(long long c, long long d) {
    if (d % 2 == 0) throw DomainError("(c/d)_* requires odd d");
    if (std::gcd(c, d) != 1) throw DomainError("(c/d)_* requires gcd(c,d) = 1");
    if (c == 0) return d > 0 ? 1 : -1;  // (0/1)_* = 1, (0/-1)_* = -1
    int s = kronecker_symbol(c, d < 0 ? -d : d);
    if (c < 0 && d < 0) s = -s;
    return s;
}

UnitRoot24 eta_multiplier(const GammaElement& A) {
    // exponent arithmetic only depends on the entries mod 24
    long long a = mod24(A.a), b = mod24(A.b), c = mod24(A.c), d = mod24(A.d);
    if (A.c % 2 != 0) {
        int sign = kronecker_star(A.d, A.c);
        long long x = (a + d) * c - b * d * (c * c - 1) - 3 * c;
        return UnitRoot24(x + sign_exponent(sign));
    }
    int sign = kronecker_substar(A.c, A.d);
    long long x = (a + d) * c - b * d * (c * c - 1) + 3 * d - 3 - 3 * c * d;
    return UnitRoot24(x + sign_exponent(sign));
}

UnitRoot24 product_multiplier_petersson(const EtaProduct& f, const GammaElement& A) {
    long long N = f.level();
    if (!A.in_gamma0(N))
        throw NotInGamma0("matrix (" + A.to_string() + ") is not in Gamma0(" +
                          std::to_string(N) + ")");
    UnitRoot24 v(0);
    for (auto& [m, am] : f.exps) {
        if (A.c % m != 0) throw NotInGamma0("eta key does not divide c");
        GammaElement M(A.a, m * A.b, A.c / m, A.d);
        v = v * eta_multiplier(M).pow(am);
    }
    return v;
}

UnitRoot24 product_multiplier_closed(const EtaProduct& f, const GammaElement& A) {
    long long N = f.level();
    if (!A.in_gamma0(N))
        throw NotInGamma0("matrix (" + A.to_string() + ") is not in Gamma0(" +
                          std::to_string(N) + ")");

    long long s1 = 0;  // c * sum a_m/m, an integer because every key divides c
    for (auto& [m, am] : f.exps) s1 += am * (A.c / m);
    long long s2 = f.sum_ma();
    long long s0 = f.sum_a();

    long long a = mod24(A.a), b = mod24(A.b), c = mod24(A.c), d = mod24(A.d);
    long long s1r = mod24(s1), s2r = mod24(s2), s0r = mod24(s0);

    long long x;
    int sign = 1;
    if (A.c % 2 != 0) {
        for (auto& [m, am] : f.exps)
            if (am % 2 != 0) sign *= kronecker_star(A.d, A.c / m);
        x = ((a + d) - b * d * c - 3) * s1r + b * d * s2r;
    } else {
        for (auto& [m, am] : f.exps)
            if (am % 2 != 0) sign *= kronecker_substar(A.c / m, A.d);
        x = ((a + d) - b * d * c - 3 * d) * s1r + b * d * s2r + 3 * (d - 1) * s0r;
    }
    return UnitRoot24(x + sign_exponent(sign));
}

UnitRoot24 product_multiplier(const EtaProduct& f, const GammaElement& A) {
    UnitRoot24 p = product_multiplier_petersson(f, A);
    UnitRoot24 q = product_multiplier_closed(f, A);
    if (!(p == q))
        throw std::logic_error("eta: multiplier routes disagree on (" + A.to_string() +
                               "): " + p.to_string() + " vs " + q.to_string());
    return p;
}

Gamma0Sampler::Gamma0Sampler(long long N, std::uint64_t seed, long long c_range,
                             long long d_range, long long shift_range)
    : N_(N), c_range_(c_range), d_range_(d_range), shift_range_(shift_range), rng_(seed) {
    if (N < 1) throw DomainError("Gamma0 level must be >= 1");
}

GammaElement Gamma0Sampler::next() {
    std::uniform_int_distribution<long long> tdist(-c_range_, c_range_);
    std::uniform_int_distribution<long long> ddist(-d_range_, d_range_);
    std::uniform_int_distribution<long long> sdist(-shift_range_, shift_range_);

    long long c = N_ * tdist(rng_);
    if (c == 0) {
        long long d = (rng_() & 1) ? 1 : -1;
        long long b = ddist(rng_);
        return GammaElement(d, b, 0, d);  // det = d^2 = 1
    }
    long long d = 0;
    do {
        d = ddist(rng_);
    } while (std::gcd(c, d) != 1 || d == 0);
    long long x, y;
    ext_gcd(d, c, x, y);  // x*d + y*c = 1
    long long a0 = x, b0 = -y;
    long long s = sdist(rng_);
    return GammaElement(a0 + s * c, b0 + s * d, c, d);
}

}  // namespace rigidmod
