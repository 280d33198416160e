#include "rigidmod/qseries.hpp"

#include <algorithm>
#include <stdexcept>

#include "rigidmod/errors.hpp"

namespace rigidmod {

namespace {

long long sat_add(long long a, long long b) {
    long long s = a + b;
    return s > QSeries::kExactTrunc ? QSeries::kExactTrunc : s;
}

}  // namespace

QSeries::QSeries(std::vector<std::pair<long long, Q>> terms, long long trunc) : trunc_(trunc) {
    long long lo = 0, hi = -1;
    bool any = false;
    for (auto& [e, c] : terms) {
        if (c == 0) continue;
        if (e > trunc_)
            throw std::logic_error("qseries: term beyond the truncation index");
        if (!any) {
            lo = hi = e;
            any = true;
        } else {
            lo = std::min(lo, e);
            hi = std::max(hi, e);
        }
    }
    if (!any) {
        offset_ = trunc_ + 1;
        return;
    }
    offset_ = lo;
    c_.assign(static_cast<std::size_t>(hi - lo + 1), Q(0));
    for (auto& [e, c] : terms)
        if (c != 0) c_[static_cast<std::size_t>(e - offset_)] += c;
    normalize();
}

void QSeries::normalize() {
    std::size_t b = 0, e = c_.size();
    while (b < e && c_[b] == 0) ++b;
    while (e > b && c_[e - 1] == 0) --e;
    if (b == e) {
        c_.clear();
        offset_ = trunc_ + 1;
        return;
    }
    if (b > 0 || e < c_.size()) {
        std::vector<Q> t(c_.begin() + static_cast<long>(b), c_.begin() + static_cast<long>(e));
        c_ = std::move(t);
        offset_ += static_cast<long long>(b);
    }
}

QSeries QSeries::zero(long long trunc) {
    QSeries s;
    s.trunc_ = trunc;
    s.offset_ = trunc + 1;
    return s;
}

QSeries QSeries::one(long long trunc) { return monomial(Q(1), 0, trunc); }

QSeries QSeries::monomial(const Q& coeff, long long exp24, long long trunc) {
    if (coeff == 0) return zero(trunc);
    QSeries s;
    s.trunc_ = trunc;
    s.offset_ = exp24;
    s.c_ = {coeff};
    if (exp24 > trunc) throw std::logic_error("qseries: monomial beyond truncation");
    return s;
}

long long QSeries::highest() const {
    if (c_.empty()) throw std::logic_error("qseries: highest() of zero series");
    return offset_ + static_cast<long long>(c_.size()) - 1;
}

Q QSeries::coeff(long long exp24) const {
    if (exp24 > trunc_)
        throw std::logic_error("qseries: coefficient beyond the truncation index");
    if (c_.empty() || exp24 < offset_ || exp24 > highest()) return Q(0);
    return c_[static_cast<std::size_t>(exp24 - offset_)];
}

std::size_t QSeries::term_count() const {
    std::size_t n = 0;
    for (const Q& c : c_)
        if (c != 0) ++n;
    return n;
}

std::vector<std::pair<long long, Q>> QSeries::terms() const {
    std::vector<std::pair<long long, Q>> out;
    out.reserve(term_count());
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) out.push_back({offset_ + static_cast<long long>(i), c_[i]});
    return out;
}

bool QSeries::operator==(const QSeries& other) const {
    return trunc_ == other.trunc_ && terms() == other.terms();
}

QSeries add(const QSeries& a, const QSeries& b) {
    long long t = std::min(a.trunc(), b.trunc());
    std::vector<std::pair<long long, Q>> terms;
    for (auto& [e, c] : a.terms())
        if (e <= t) terms.push_back({e, c});
    for (auto& [e, c] : b.terms())
        if (e <= t) terms.push_back({e, c});
    return QSeries(std::move(terms), t);
}

QSeries sub(const QSeries& a, const QSeries& b) {
    long long t = std::min(a.trunc(), b.trunc());
    std::vector<std::pair<long long, Q>> terms;
    for (auto& [e, c] : a.terms())
        if (e <= t) terms.push_back({e, c});
    for (auto& [e, c] : b.terms())
        if (e <= t) terms.push_back({e, -c});
    return QSeries(std::move(terms), t);
}

QSeries mul(const QSeries& a, const QSeries& b) {
    long long t = std::min(sat_add(a.lowest(), b.trunc()), sat_add(b.lowest(), a.trunc()));
    if (a.is_zero() || b.is_zero()) return QSeries::zero(t);

    long long lo = a.lowest() + b.lowest();
    long long hi = std::min(t, a.highest() + b.highest());
    if (hi < lo) return QSeries::zero(t);

    QSeries out;
    out.trunc_ = t;
    out.offset_ = lo;
    out.c_.assign(static_cast<std::size_t>(hi - lo + 1), Q(0));

    auto ta = a.terms();
    auto tb = b.terms();
    // convolve nonzero terms only; the operands here are typically sparse
    for (auto& [ea, ca] : ta) {
        if (ea + tb.front().first > hi) break;
        for (auto& [eb, cb] : tb) {
            long long e = ea + eb;
            if (e > hi) break;
            out.c_[static_cast<std::size_t>(e - lo)] += ca * cb;
        }
    }
    out.normalize();
    return out;
}

QSeries inverse(const QSeries& a) {
    if (a.is_zero())
        throw ZeroLeadingTerm("cannot invert a series with no visible nonzero term");
    long long lo = a.lowest();
    if (a.trunc() == QSeries::kExactTrunc && a.term_count() > 1)
        throw std::logic_error(
            "qseries: inverse of an exact multi-term polynomial is an infinite series; "
            "truncate the argument first");

    long long rel = a.trunc() == QSeries::kExactTrunc ? 0 : a.trunc() - lo;
    // relative coefficients of a: a0 + a1 x + ... (x = q^(1/24), shifted by lo)
    std::vector<Q> inv(static_cast<std::size_t>(rel + 1), Q(0));
    const Q a0 = a.coeff(lo);
    std::vector<std::pair<long long, Q>> arel;  // nonzero a_i, i >= 1
    for (auto& [e, c] : a.terms())
        if (e > lo) arel.push_back({e - lo, c});

    inv[0] = 1 / a0;
    for (long long i = 1; i <= rel; ++i) {
        Q s(0);
        for (auto& [j, c] : arel) {
            if (j > i) break;
            s += c * inv[static_cast<std::size_t>(i - j)];
        }
        if (s != 0) inv[static_cast<std::size_t>(i)] = -s / a0;
    }

    std::vector<std::pair<long long, Q>> terms;
    for (long long i = 0; i <= rel; ++i)
        if (inv[static_cast<std::size_t>(i)] != 0)
            terms.push_back({i - lo, inv[static_cast<std::size_t>(i)]});
    long long t = a.trunc() == QSeries::kExactTrunc ? QSeries::kExactTrunc : a.trunc() - 2 * lo;
    return QSeries(std::move(terms), t);
}

QSeries rescale(const QSeries& a, long long L) {
    if (L <= 0) throw std::logic_error("qseries: rescale factor must be positive");
    long long t = a.trunc() >= QSeries::kExactTrunc / L ? QSeries::kExactTrunc : a.trunc() * L;
    std::vector<std::pair<long long, Q>> terms;
    for (auto& [e, c] : a.terms()) terms.push_back({e * L, c});
    return QSeries(std::move(terms), t);
}

QSeries power(const QSeries& a, long long e) {
    if (e < 0) throw std::logic_error("qseries: power() requires a nonnegative exponent");
    QSeries r = QSeries::one();
    for (long long i = 0; i < e; ++i) r = mul(r, a);
    return r;
}

QSeries truncate(const QSeries& a, long long trunc) {
    if (trunc > a.trunc())
        throw std::logic_error("qseries: cannot extend knowledge by truncating");
    std::vector<std::pair<long long, Q>> terms;
    for (auto& [e, c] : a.terms())
        if (e <= trunc) terms.push_back({e, c});
    return QSeries(std::move(terms), trunc);
}

QSeries euler_product(long long m, long long a, long long trunc24) {
    if (m <= 0) throw std::logic_error("qseries: euler_product needs m >= 1");
    if (trunc24 < 0) throw std::logic_error("qseries: euler_product needs trunc >= 0");
    if (a == 0) return QSeries::one(trunc24);

    // pentagonal number expansion of prod (1 - x^j) at x = q^m
    std::vector<std::pair<long long, Q>> terms;
    terms.push_back({0, Q(1)});
    for (long long r = 1;; ++r) {
        long long g1 = r * (3 * r - 1) / 2;  // generalized pentagonal numbers
        long long g2 = r * (3 * r + 1) / 2;
        Q sign = (r % 2 == 1) ? Q(-1) : Q(1);
        bool any = false;
        if (24 * m * g1 <= trunc24) {
            terms.push_back({24 * m * g1, sign});
            any = true;
        }
        if (24 * m * g2 <= trunc24) {
            terms.push_back({24 * m * g2, sign});
            any = true;
        }
        if (!any) break;
    }
    QSeries base(std::move(terms), trunc24);
    if (a == 1) return base;
    if (a > 1) return power(base, a);
    return inverse(power(base, -a));  // lowest index 0, so the truncation survives
}

std::optional<Mismatch> first_mismatch(const QSeries& a, const QSeries& b, long long upto) {
    long long hi = std::min({upto, a.trunc(), b.trunc()});
    long long lo = std::min(a.lowest(), b.lowest());
    for (long long e = lo; e <= hi; ++e) {
        Q ca = a.coeff(e), cb = b.coeff(e);
        if (ca != cb) return Mismatch{e, ca, cb};
    }
    return std::nullopt;
}

}  // namespace rigidmod
