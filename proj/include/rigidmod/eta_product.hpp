#pragma once

#include <map>
#include <string>
#include <vector>

#include "rigidmod/qseries.hpp"

namespace rigidmod {

// A finite product  f(tau) = prod_m eta(m tau)^(a_m)  stored as the exponent
// map {m -> a_m} with positive keys and nonzero values.  The level is the lcm
// of the keys; eta products transform as modular forms of weight
// (1/2) sum a_m on Gamma0(level).
struct EtaProduct {
    std::map<long long, long long> exps;

    EtaProduct() = default;
    explicit EtaProduct(std::map<long long, long long> e);

    long long level() const;  // lcm of keys; 1 for the empty product
    Q weight() const;         // (1/2) sum a_m
    long long sum_a() const;
    long long sum_ma() const;   // 24 * order at infinity
    Q sum_a_over_m() const;     // 24 * order at the cusp 1

    // "1:-1,2:2" <-> {1 -> -1, 2 -> 2}
    static EtaProduct from_string(const std::string& s);
    std::string to_string() const;

    bool operator==(const EtaProduct&) const = default;
};

// Pointwise sum of exponent maps (keys colliding after a rescale are merged;
// zero exponents are dropped).
EtaProduct merge(const EtaProduct& f, const EtaProduct& g);

// f(L tau): every key multiplied by L.  Holomorphy class is preserved when
// the level is raised from N to N*L; this is re-checked on every call.
EtaProduct rescale_level(const EtaProduct& f, long long L);

// Vanishing order of f at the cusp 1/c (c >= 1):
//   ord(f, 1/c) = (1/24) sum_m gcd(c,m)^2 / m * a_m;
// and at the cusp infinity: ord(f, inf) = (1/24) sum_m m a_m.
Q cusp_order(const EtaProduct& f, long long c);
Q cusp_order_inf(const EtaProduct& f);

enum class HoloClass { Meromorphic, Holomorphic, Cuspidal };

struct OrderProfile {
    std::vector<std::pair<long long, Q>> divisor_orders;  // (c, ord(f,1/c)) for c | level
    Q order_inf;
    HoloClass cls;
};

// Evaluates the order at every positive divisor of the level and at infinity.
// Holomorphic iff all orders >= 0, cuspidal iff all > 0 (the divisor cusps
// 1/c exhaust all cusps of Gamma0(level) up to equivalence).
OrderProfile order_profile(const EtaProduct& f);
HoloClass holo_class(const EtaProduct& f);

const char* to_string(HoloClass c);

// q-expansion of eta(m tau) = q^(m/24) prod_j (1 - q^(m j)), exact through
// the index 24*trunc_q + 23.
QSeries eta_expansion(long long m, long long trunc_q);

// q-expansion of the eta product; the lowest exponent index is sum_m m a_m,
// which may be negative.  Exact through index 24*trunc_q + 23.
QSeries eta_product_expansion(const EtaProduct& f, long long trunc_q);

std::vector<long long> divisors(long long n);  // ascending, n >= 1

}  // namespace rigidmod
