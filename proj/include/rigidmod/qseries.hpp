#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rigidmod/rational.hpp"

namespace rigidmod {

// Truncated formal power series in q with exact rational coefficients.
//
// Exponents live on the 1/24 grid: the integer index e stands for q^(e/24).
// Every series carries a truncation index T with the meaning "all
// coefficients with index <= T are exact; nothing is known beyond T".
// Arithmetic propagates T so that no reported coefficient can be polluted by
// unknown terms:
//   mul:      T = min(lowest(a) + T_b, lowest(b) + T_a)
//   inverse:  T = T_a - 2*lowest(a)
//   rescale:  T = L * T_a
// Polynomials and monomials constructed directly are exact everywhere and use
// the sentinel truncation kExactTrunc.
//
// Values are immutable after construction; all operations are pure.
class QSeries {
public:
    static constexpr long long kExactTrunc = 1LL << 60;

    QSeries() : trunc_(kExactTrunc), offset_(kExactTrunc + 1) {}  // exact zero

    // terms: (exponent index, coefficient) pairs, unordered, repeats summed.
    QSeries(std::vector<std::pair<long long, Q>> terms, long long trunc);

    static QSeries zero(long long trunc = kExactTrunc);
    static QSeries one(long long trunc = kExactTrunc);
    static QSeries monomial(const Q& coeff, long long exp24, long long trunc = kExactTrunc);

    long long trunc() const { return trunc_; }
    bool is_zero() const { return c_.empty(); }

    // Lowest nonzero exponent index; trunc()+1 for the zero series (the first
    // unknown slot), which keeps the truncation algebra uniform.
    long long lowest() const { return c_.empty() ? trunc_ + 1 : offset_; }
    long long highest() const;  // highest nonzero index; requires !is_zero()

    // Coefficient of q^(exp24/24).  Throws if exp24 > trunc.
    Q coeff(long long exp24) const;
    // Coefficient of the integral power q^p.
    Q coeff_q(long long p) const { return coeff(24 * p); }

    std::size_t term_count() const;
    std::vector<std::pair<long long, Q>> terms() const;  // nonzero terms, ascending

    bool operator==(const QSeries& other) const;  // same trunc and same terms

private:
    long long trunc_;
    long long offset_;      // index of c_[0]
    std::vector<Q> c_;      // dense; first and last entries nonzero
    void normalize();
    friend QSeries mul(const QSeries&, const QSeries&);
    friend QSeries add(const QSeries&, const QSeries&);
    friend QSeries inverse(const QSeries&);
    friend QSeries rescale(const QSeries&, long long);
    friend QSeries truncate(const QSeries&, long long);
};

QSeries add(const QSeries& a, const QSeries& b);
QSeries sub(const QSeries& a, const QSeries& b);
QSeries mul(const QSeries& a, const QSeries& b);

// Multiplicative inverse.  The lowest term of a must be a nonzero monomial
// visible within the truncation; throws ZeroLeadingTerm otherwise.  Inverting
// an exact polynomial with more than one term requires truncating it first
// (the result would carry infinitely many terms).
QSeries inverse(const QSeries& a);

// Substitution q -> q^L (every exponent index and the truncation scale by L).
QSeries rescale(const QSeries& a, long long L);

// a^e for e >= 0 by repeated multiplication.
QSeries power(const QSeries& a, long long e);

// Restricts knowledge to indices <= trunc (drops higher stored terms).
QSeries truncate(const QSeries& a, long long trunc);

// prod_{j>=1} (1 - q^(m j))^a expanded exactly to the truncation index
// trunc24.  Uses the pentagonal-number expansion for |a| = 1 and repeated
// multiplication / inversion for other powers.
QSeries euler_product(long long m, long long a, long long trunc24);

inline QSeries operator*(const QSeries& a, const QSeries& b) { return mul(a, b); }
inline QSeries operator+(const QSeries& a, const QSeries& b) { return add(a, b); }
inline QSeries operator-(const QSeries& a, const QSeries& b) { return sub(a, b); }

struct Mismatch {
    long long exp24 = 0;
    Q lhs, rhs;
};

// First index <= upto (and within both truncations) where coefficients
// differ; nullopt when the series agree on that whole range.
std::optional<Mismatch> first_mismatch(const QSeries& a, const QSeries& b, long long upto);

}  // namespace rigidmod
