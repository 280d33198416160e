#include "rigidmod/eta_product.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "rigidmod/errors.hpp"

namespace rigidmod {

EtaProduct::EtaProduct(std::map<long long, long long> e) : exps(std::move(e)) {
    for (auto it = exps.begin(); it != exps.end();) {
        if (it->first <= 0) throw DomainError("eta product keys must be positive");
        if (it->second == 0)
            it = exps.erase(it);
        else
            ++it;
    }
}

long long EtaProduct::level() const {
    long long l = 1;
    for (auto& [m, a] : exps) l = std::lcm(l, m);
    return l;
}

Q EtaProduct::weight() const { return Q(sum_a(), 2); }

long long EtaProduct::sum_a() const {
    long long s = 0;
    for (auto& [m, a] : exps) s += a;
    return s;
}

long long EtaProduct::sum_ma() const {
    long long s = 0;
    for (auto& [m, a] : exps) s += m * a;
    return s;
}

Q EtaProduct::sum_a_over_m() const {
    Q s(0);
    for (auto& [m, a] : exps) s += Q(a, m);
    return s;
}

EtaProduct EtaProduct::from_string(const std::string& s) {
    std::map<long long, long long> e;
    if (s.empty()) return EtaProduct{};
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto pos = item.find(':');
        if (pos == std::string::npos)
            throw ParseError("eta product term '" + item + "' is not of the form m:a");
        try {
            long long m = std::stoll(item.substr(0, pos));
            long long a = std::stoll(item.substr(pos + 1));
            e[m] += a;
        } catch (const std::exception&) {
            throw ParseError("eta product term '" + item + "' is not of the form m:a");
        }
    }
    return EtaProduct(std::move(e));
}

std::string EtaProduct::to_string() const {
    std::string out;
    for (auto& [m, a] : exps) {
        if (!out.empty()) out += ",";
        out += std::to_string(m) + ":" + std::to_string(a);
    }
    return out;
}

EtaProduct merge(const EtaProduct& f, const EtaProduct& g) {
    std::map<long long, long long> e = f.exps;
    for (auto& [m, a] : g.exps) e[m] += a;
    return EtaProduct(std::move(e));
}

EtaProduct rescale_level(const EtaProduct& f, long long L) {
    if (L < 1) throw DomainError("rescale factor must be a positive integer");
    std::map<long long, long long> e;
    for (auto& [m, a] : f.exps) e[m * L] = a;
    EtaProduct g(std::move(e));
    if (holo_class(f) != holo_class(g))
        throw std::logic_error("eta: level rescaling changed the holomorphy class");
    return g;
}

Q cusp_order(const EtaProduct& f, long long c) {
    if (c < 1) throw DomainError("cusp denominator must be >= 1");
    Q s(0);
    for (auto& [m, a] : f.exps) {
        long long g = std::gcd(c, m);
        s += Q(g * g * a, m);
    }
    return s / 24;
}

Q cusp_order_inf(const EtaProduct& f) { return Q(f.sum_ma(), 24); }

std::vector<long long> divisors(long long n) {
    std::vector<long long> lo, hi;
    for (long long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            lo.push_back(d);
            if (d != n / d) hi.push_back(n / d);
        }
    }
    lo.insert(lo.end(), hi.rbegin(), hi.rend());
    return lo;
}

OrderProfile order_profile(const EtaProduct& f) {
    OrderProfile p;
    p.order_inf = cusp_order_inf(f);
    bool all_nonneg = p.order_inf >= 0;
    bool all_pos = p.order_inf > 0;
    for (long long c : divisors(f.level())) {
        Q o = cusp_order(f, c);
        all_nonneg = all_nonneg && o >= 0;
        all_pos = all_pos && o > 0;
        p.divisor_orders.push_back({c, o});
    }
    p.cls = all_pos    ? HoloClass::Cuspidal
            : all_nonneg ? HoloClass::Holomorphic
                         : HoloClass::Meromorphic;
    return p;
}

HoloClass holo_class(const EtaProduct& f) { return order_profile(f).cls; }

const char* to_string(HoloClass c) {
    switch (c) {
        case HoloClass::Meromorphic: return "meromorphic";
        case HoloClass::Holomorphic: return "holomorphic";
        case HoloClass::Cuspidal: return "cuspidal";
    }
    return "?";
}

QSeries eta_expansion(long long m, long long trunc_q) {
    if (m < 1) throw DomainError("eta argument multiplier must be >= 1");
    long long t24 = 24 * trunc_q + 23;
    if (t24 < m) return QSeries::zero(t24);
    // q^(m/24) * euler_product(m, 1) without recomputing the truncation:
    // pad so the shifted series is exact through t24.
    QSeries pent = euler_product(m, 1, t24 - m);
    return mul(QSeries::monomial(Q(1), m), pent);
}

QSeries eta_product_expansion(const EtaProduct& f, long long trunc_q) {
    long long t24 = 24 * trunc_q + 23;
    // Inverting a factor with lowest index m*|a_m| costs 2*m*|a_m| of
    // truncation, and multiplying by its negative lowest index costs as much
    // again; pad the working truncation so the final series is exact
    // through t24.
    long long slack = 0;
    for (auto& [m, a] : f.exps)
        if (a < 0) slack += 3 * m * (-a);
    long long w24 = t24 + slack;
    long long wq = w24 / 24;  // eta_expansion takes a q-power truncation

    QSeries acc = QSeries::one();
    for (auto& [m, a] : f.exps) {
        QSeries base = eta_expansion(m, wq);
        QSeries factor = a > 0 ? power(base, a) : inverse(power(base, -a));
        acc = mul(acc, factor);
    }
    if (acc.trunc() < t24)
        throw std::logic_error("eta: truncation slack was insufficient");
    return truncate(acc, t24);
}

}  // namespace rigidmod
