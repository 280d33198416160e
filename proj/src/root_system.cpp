#include "rigidmod/root_system.hpp"

#include <cstdlib>
#include <stdexcept>

#include "rigidmod/rational.hpp"

namespace rigidmod {

namespace {

// Edges of the extended (affine) Dynkin diagram, node 0 affine, 1..n Bourbaki.
// Simple edges only except affine A1, which carries a double bond.
std::vector<std::pair<int, int>> affine_edges(AdeKind kind, int n) {
    std::vector<std::pair<int, int>> e;
    switch (kind) {
        case AdeKind::A:
            for (int i = 1; i < n; ++i) e.push_back({i, i + 1});
            if (n >= 2) {
                e.push_back({0, 1});
                e.push_back({0, n});
            }
            // n == 1: the double bond is handled directly in affine_cartan
            break;
        case AdeKind::D:
            for (int i = 1; i + 1 <= n - 2; ++i) e.push_back({i, i + 1});
            e.push_back({n - 2, n - 1});
            e.push_back({n - 2, n});
            e.push_back({0, 2});
            break;
        case AdeKind::E:
            // chain 1-3-4-5-...-n with node 2 hanging off node 4
            e.push_back({1, 3});
            for (int i = 3; i < n; ++i) e.push_back({i, i + 1});
            e.push_back({2, 4});
            if (n == 6) e.push_back({0, 2});
            if (n == 7) e.push_back({0, 1});
            if (n == 8) e.push_back({0, 8});
            break;
    }
    return e;
}

IntVec affine_marks(AdeKind kind, int n) {
    IntVec d(n + 1, 1);
    switch (kind) {
        case AdeKind::A:
            break;  // all ones
        case AdeKind::D:
            for (int i = 2; i <= n - 2; ++i) d[i] = 2;
            break;
        case AdeKind::E:
            if (n == 6) d = {1, 1, 2, 2, 3, 2, 1};
            if (n == 7) d = {1, 2, 2, 3, 4, 3, 2, 1};
            if (n == 8) d = {1, 2, 3, 4, 6, 5, 4, 3, 2};
            break;
    }
    return d;
}

long long group_order(AdeKind kind, int n) {
    switch (kind) {
        case AdeKind::A: return n + 1;
        case AdeKind::D: return 4LL * n - 8;
        case AdeKind::E: return n == 6 ? 24 : n == 7 ? 48 : 120;
    }
    std::abort();
}

// Exact positive-definiteness check: all leading principal minors > 0.
// Fraction-free Gaussian elimination (Bareiss) over Z.
bool positive_definite(const IntMat& c) {
    int n = static_cast<int>(c.size());
    std::vector<std::vector<Z>> a(n, std::vector<Z>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = c[i][j];
    Z prev = 1;
    for (int p = 0; p < n; ++p) {
        if (a[p][p] <= 0) return false;
        for (int i = p + 1; i < n; ++i)
            for (int j = p + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[p][p] - a[i][p] * a[p][j]) / prev;
        prev = a[p][p];  // = p-th leading principal minor
    }
    return true;
}

void check(bool ok, const char* msg) {
    if (!ok) throw std::logic_error(std::string("root_data: ") + msg);
}

void validate(const RootSystem& rs) {
    long long sumsq = 0;
    for (long long d : rs.dims) sumsq += d * d;
    check(sumsq == rs.k, "sum of irrep dimension squares must equal the group order");
    check(rs.dims[0] == 1, "affine node must carry the trivial representation");

    IntMat ac = affine_cartan(rs);
    for (int i = 0; i <= rs.n; ++i) {
        long long dot = 0;
        for (int j = 0; j <= rs.n; ++j) dot += ac[i][j] * rs.dims[j];
        check(dot == 0, "affine Cartan matrix must annihilate delta");
    }
    for (int i = 1; i <= rs.n; ++i)
        for (int j = 1; j <= rs.n; ++j)
            check(ac[i][j] == rs.cartan[i - 1][j - 1],
                  "finite Cartan matrix must be the affine one with node 0 deleted");

    check(positive_definite(rs.cartan), "finite Cartan matrix must be positive definite");
}

}  // namespace

RootSystem make_root_system(AdeKind kind, int n) {
    switch (kind) {
        case AdeKind::A:
            if (n < 1) throw InvalidRank("type A requires rank >= 1");
            break;
        case AdeKind::D:
            if (n < 4) throw InvalidRank("type D requires rank >= 4");
            break;
        case AdeKind::E:
            if (n < 6 || n > 8) throw InvalidRank("type E requires rank 6, 7 or 8");
            break;
    }

    RootSystem rs;
    rs.kind = kind;
    rs.n = n;
    rs.k = group_order(kind, n);
    rs.dims = affine_marks(kind, n);

    rs.cartan.assign(n, IntVec(n, 0));
    for (int i = 0; i < n; ++i) rs.cartan[i][i] = 2;
    for (auto [u, v] : affine_edges(kind, n)) {
        if (u == 0 || v == 0) continue;  // finite part only
        rs.cartan[u - 1][v - 1] = -1;
        rs.cartan[v - 1][u - 1] = -1;
    }

    validate(rs);
    return rs;
}

IntMat affine_cartan(const RootSystem& rs) {
    int n = rs.n;
    IntMat ac(n + 1, IntVec(n + 1, 0));
    for (int i = 0; i <= n; ++i) ac[i][i] = 2;
    if (rs.kind == AdeKind::A && n == 1) {
        ac[0][1] = ac[1][0] = -2;  // double bond
        return ac;
    }
    for (auto [u, v] : affine_edges(rs.kind, n)) {
        ac[u][v] = -1;
        ac[v][u] = -1;
    }
    return ac;
}

std::string RootSystem::token() const {
    switch (kind) {
        case AdeKind::A: return "A" + std::to_string(n);
        case AdeKind::D: return "D" + std::to_string(n);
        case AdeKind::E: return "E" + std::to_string(n);
    }
    std::abort();
}

RootSystem parse_root_token(const std::string& token) {
    if (token.size() < 2) throw InvalidRank("unknown root system '" + token + "'");
    char t = token[0];
    int n = 0;
    for (size_t i = 1; i < token.size(); ++i) {
        if (token[i] < '0' || token[i] > '9')
            throw InvalidRank("unknown root system '" + token + "'");
        n = n * 10 + (token[i] - '0');
        if (n > 1000000) throw InvalidRank("rank out of range in '" + token + "'");
    }
    switch (t) {
        case 'A': case 'a': return make_root_system(AdeKind::A, n);
        case 'D': case 'd': return make_root_system(AdeKind::D, n);
        case 'E': case 'e': return make_root_system(AdeKind::E, n);
        default: throw InvalidRank("unknown root system '" + token + "'");
    }
}

std::vector<RootSystem> standard_sweep() {
    std::vector<RootSystem> out;
    for (int n = 1; n <= 10; ++n) out.push_back(make_root_system(AdeKind::A, n));
    for (int n = 4; n <= 8; ++n) out.push_back(make_root_system(AdeKind::D, n));
    for (int n = 6; n <= 8; ++n) out.push_back(make_root_system(AdeKind::E, n));
    return out;
}

}  // namespace rigidmod
