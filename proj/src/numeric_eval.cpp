#include "rigidmod/numeric_eval.hpp"

#include <cmath>
#include <stdexcept>

namespace rigidmod {

namespace {
constexpr double kPi = 3.14159265358979323846264338328;
}

Cplx principal_pow(Cplx w, double k) {
    double ang = std::arg(w);  // (-pi, pi]
    if (w.imag() == 0.0 && w.real() < 0.0) ang = -kPi;
    double mag = std::abs(w);
    return std::polar(std::pow(mag, k), k * ang);
}

Cplx eta_value(long long m, Cplx tau) {
    if (!(tau.imag() > 0.0))
        throw std::logic_error("eta_value: tau must lie in the upper half plane");
    // w = q^(m/24); the pentagonal exponents in units of 1/24 are 24*g(r)+1
    Cplx w = std::exp(Cplx(0.0, 2.0 * kPi / 24.0) * static_cast<double>(m) * tau);
    double aw = std::abs(w);
    double a24 = std::pow(aw, 24.0);  // |q^m|

    auto term = [&](long long rr) {
        long long g = rr * (3 * rr - 1) / 2;
        Cplx t = std::pow(w, static_cast<double>(24 * g + 1));
        return (rr % 2 != 0) ? -t : t;
    };

    Cplx sum = term(0);
    constexpr long long kMaxR = 200000;
    for (long long r = 1;; ++r) {
        // distinct pentagonal exponents >= g(r) bound the tail geometrically
        long long g = r * (3 * r - 1) / 2;
        double tail = 2.0 * std::pow(aw, static_cast<double>(24 * g + 1)) / (1.0 - a24);
        if (tail < 1e-13) break;
        if (r > kMaxR)
            throw std::logic_error("eta_value: tail bound not certified (Im tau too small)");
        sum += term(r) + term(-r);
    }
    return sum;
}

Cplx eta_product_value(const EtaProduct& f, Cplx tau) {
    Cplx prod = 1.0;
    for (auto& [m, a] : f.exps) {
        Cplx v = eta_value(m, tau);
        Cplx p = 1.0;
        for (long long i = 0; i < (a > 0 ? a : -a); ++i) p *= v;
        prod = a > 0 ? prod * p : prod / p;
    }
    return prod;
}

Cplx moebius(const GammaElement& A, Cplx tau) {
    return (static_cast<double>(A.a) * tau + static_cast<double>(A.b)) /
           (static_cast<double>(A.c) * tau + static_cast<double>(A.d));
}

double transformation_residual(const EtaProduct& f, const GammaElement& A, UnitRoot24 chi,
                               const Q& weight, Cplx tau) {
    Cplx lhs = eta_product_value(f, moebius(A, tau));
    Cplx j = static_cast<double>(A.c) * tau + static_cast<double>(A.d);
    Cplx rhs = chi.value() * principal_pow(j, weight.get_d()) * eta_product_value(f, tau);
    return std::abs(lhs - rhs);
}

}  // namespace rigidmod
