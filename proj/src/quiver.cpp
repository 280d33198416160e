#include "rigidmod/quiver.hpp"

#include <stdexcept>

#include "rigidmod/errors.hpp"
#include "rigidmod/lattice_enum.hpp"

namespace rigidmod {

namespace {

void expect_len(const IntVec& v, std::size_t len, const char* what) {
    if (v.size() != len)
        throw std::logic_error(std::string("quiver: ") + what + " has the wrong length");
}

}  // namespace

long long affine_pairing(const RootSystem& rs, const IntVec& x, const IntVec& y) {
    std::size_t len = static_cast<std::size_t>(rs.n) + 1;
    expect_len(x, len, "affine vector");
    expect_len(y, len, "affine vector");
    IntMat ac = affine_cartan(rs);
    long long s = 0;
    for (std::size_t i = 0; i < len; ++i)
        for (std::size_t j = 0; j < len; ++j) s += x[i] * ac[i][j] * y[j];
    return s;
}

long long finite_pairing(const RootSystem& rs, const IntVec& mx, const IntVec& my) {
    std::size_t len = static_cast<std::size_t>(rs.n);
    expect_len(mx, len, "finite vector");
    expect_len(my, len, "finite vector");
    long long s = 0;
    for (std::size_t i = 0; i < len; ++i)
        for (std::size_t j = 0; j < len; ++j) s += mx[i] * rs.cartan[i][j] * my[j];
    return s;
}

DeltaDecomposition decompose(const RootSystem& rs, const IntVec& v) {
    expect_len(v, static_cast<std::size_t>(rs.n) + 1, "dimension vector");
    DeltaDecomposition d;
    d.m.resize(static_cast<std::size_t>(rs.n));
    // v - v_0 delta has first coordinate 0 because delta_0 = 1
    for (int i = 0; i < rs.n; ++i)
        d.m[static_cast<std::size_t>(i)] =
            v[static_cast<std::size_t>(i) + 1] - v[0] * rs.dims[static_cast<std::size_t>(i) + 1];
    long long norm = finite_pairing(rs, d.m, d.m);
    if (norm % 2 != 0) throw ParityError("(m|m) is odd on an even lattice");
    d.level_k = v[0] - norm / 2;
    return d;
}

IntVec recompose(const RootSystem& rs, const DeltaDecomposition& d) {
    long long norm = finite_pairing(rs, d.m, d.m);
    long long scale = d.level_k + norm / 2;
    IntVec v(static_cast<std::size_t>(rs.n) + 1);
    v[0] = scale;
    for (int i = 0; i < rs.n; ++i)
        v[static_cast<std::size_t>(i) + 1] =
            scale * rs.dims[static_cast<std::size_t>(i) + 1] + d.m[static_cast<std::size_t>(i)];
    return v;
}

long long quiver_dimension(const RootSystem& rs, const IntVec& v) {
    return 2 * v[0] - affine_pairing(rs, v, v);
}

bool verify_dim_is_2k(const RootSystem& rs, long long bound) {
    if (bound < 1) throw std::logic_error("quiver: bound must be >= 1");
    IntVec v(static_cast<std::size_t>(rs.n) + 1, 0);
    while (true) {
        DeltaDecomposition d = decompose(rs, v);
        if (quiver_dimension(rs, v) != 2 * d.level_k) return false;
        if (recompose(rs, d) != v) return false;
        std::size_t i = 0;
        while (i < v.size() && v[i] == bound) v[i++] = 0;
        if (i == v.size()) break;
        ++v[i];
    }
    return true;
}

QSeries zero_dim_support(const RootSystem& rs, long long trunc_q) {
    if (trunc_q < 0) throw std::logic_error("quiver: trunc must be >= 0");
    const int n = rs.n;

    IntMat G(n, IntVec(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) G[i][j] = rs.k * rs.cartan[i][j];
    IntVec b(n);
    for (int i = 0; i < n; ++i) b[i] = rs.dims[static_cast<std::size_t>(i) + 1];

    std::vector<long long> counts(static_cast<std::size_t>(trunc_q) + 1, 0);
    enumerate_quadratic(G, b, trunc_q, [&](const IntVec& m, long long) {
        // exponent through the dimension-vector route, ignoring the
        // enumerator's own value of the form
        long long norm = finite_pairing(rs, m, m);
        if (norm % 2 != 0) throw ParityError("(m|m) is odd on an even lattice");
        DeltaDecomposition d{0, m};
        IntVec v = recompose(rs, d);
        long long length = 0;
        for (int i = 0; i <= n; ++i) {
            if (v[static_cast<std::size_t>(i)] < 0)
                throw std::logic_error("quiver: negative dimension vector entry");
            length += v[static_cast<std::size_t>(i)] * rs.dims[static_cast<std::size_t>(i)];
        }
        if (length < 0 || length > trunc_q)
            throw std::logic_error("quiver: length escapes the truncation window");
        ++counts[static_cast<std::size_t>(length)];
    });

    std::vector<std::pair<long long, Q>> terms;
    for (long long e = 0; e <= trunc_q; ++e)
        if (counts[static_cast<std::size_t>(e)] != 0)
            terms.push_back({24 * e, Q(counts[static_cast<std::size_t>(e)])});
    return QSeries(std::move(terms), 24 * trunc_q + 23);
}

}  // namespace rigidmod
