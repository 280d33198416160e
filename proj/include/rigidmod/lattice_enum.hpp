#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "rigidmod/root_system.hpp"

namespace rigidmod {

// Enumerates every integer vector m with
//
//     E(m) = (1/2) m^T G m + b . m <= bound
//
// where G is a symmetric positive definite integer matrix with even diagonal
// (so E is always an integer).  visit(m, E) is called exactly once per
// solution; m is reused between calls and must be copied if retained.
//
// Strategy: the solution set is an ellipsoid, traversed coordinate by
// coordinate from the last to the first.  Interval bounds per coordinate come
// from a floating-point LDL^T factorization of G/2 widened by a fixed safety
// margin, and every emitted point is confirmed with an exact int64 evaluation
// of E, so floating-point error can only cost a few wasted candidates, never
// a wrong point.  Pruning keeps a margin of 0.5 on the remaining radius,
// orders of magnitude above the attainable rounding error for the matrix
// sizes involved (entries and bound below ~2^40).
template <typename Visit>
void enumerate_quadratic(const IntMat& G, const IntVec& b, long long bound, Visit&& visit) {
    const int n = static_cast<int>(G.size());
    if (n == 0) throw std::logic_error("lattice: empty quadratic form");
    for (int i = 0; i < n; ++i)
        if (G[i][i] % 2 != 0)
            throw std::logic_error("lattice: Gram matrix must have even diagonal");

    // LDL^T of M = G/2 in doubles
    std::vector<std::vector<double>> L(n, std::vector<double>(n, 0.0));
    std::vector<double> D(n, 0.0);
    for (int i = 0; i < n; ++i) {
        double d = 0.5 * static_cast<double>(G[i][i]);
        for (int t = 0; t < i; ++t) d -= L[i][t] * L[i][t] * D[t];
        if (!(d > 0))
            throw std::logic_error("lattice: Gram matrix is not positive definite");
        D[i] = d;
        L[i][i] = 1.0;
        for (int j = i + 1; j < n; ++j) {
            double s = 0.5 * static_cast<double>(G[j][i]);
            for (int t = 0; t < i; ++t) s -= L[j][t] * L[i][t] * D[t];
            L[j][i] = s / d;
        }
    }

    // center: h with (G/2) h = b/2, i.e. E(x) = (x+h)^T (G/2) (x+h) - E0
    std::vector<double> h(n, 0.0);
    {
        std::vector<double> y(n, 0.0);
        for (int i = 0; i < n; ++i) {  // forward solve L y = b/2
            double s = 0.5 * static_cast<double>(b[i]);
            for (int t = 0; t < i; ++t) s -= L[i][t] * y[t];
            y[i] = s;
        }
        for (int i = n - 1; i >= 0; --i) {  // back solve D L^T h = y
            double s = y[i] / D[i];
            for (int t = i + 1; t < n; ++t) s -= L[t][i] * h[t];
            h[i] = s;
        }
    }
    double e0 = 0.0;  // h^T (G/2) h = (1/2) b . h
    for (int i = 0; i < n; ++i) e0 += 0.5 * static_cast<double>(b[i]) * h[i];
    const double radius_total = static_cast<double>(bound) + e0;

    constexpr double kMargin = 0.5;

    std::vector<long long> m(n, 0);
    std::vector<double> rem(n + 1, 0.0);   // remaining squared radius below level i
    std::vector<double> center(n, 0.0);    // -h_i - sum_{j>i} L_ji (m_j + h_j)
    std::vector<long long> exact(n + 1, 0);  // exact partial value of E over fixed coords
    rem[n] = radius_total;
    exact[n] = 0;

    // Iterative depth-first traversal over levels n-1 .. 0.
    struct Frame {
        long long cur, hi;
        long long sfx;     // sum_{j>i} G_ij m_j
        double term_base;  // m_i + h_i + c_i offset: cached center
    };
    std::vector<Frame> st(n);

    int lvl = n - 1;
    bool descending = true;
    while (true) {
        if (descending) {
            // entering level lvl: compute center and candidate range
            double c = -h[lvl];
            for (int j = lvl + 1; j < n; ++j)
                c -= L[j][lvl] * (static_cast<double>(m[j]) + h[j]);
            center[lvl] = c;
            double r2 = rem[lvl + 1];
            double r = r2 > 0 ? std::sqrt(r2 / D[lvl]) : 0.0;
            long long lo = static_cast<long long>(std::floor(c - r - kMargin));
            long long hi = static_cast<long long>(std::ceil(c + r + kMargin));
            long long sfx = 0;
            for (int j = lvl + 1; j < n; ++j) sfx += G[lvl][j] * m[j];
            st[lvl] = Frame{lo, hi, sfx, 0.0};
        }
        Frame& f = st[lvl];
        bool moved = false;
        while (f.cur <= f.hi) {
            long long x = f.cur++;
            double dy = static_cast<double>(x) - center[lvl];
            double nrem = rem[lvl + 1] - D[lvl] * dy * dy;
            if (nrem < -kMargin) continue;
            long long nexact =
                exact[lvl + 1] + (G[lvl][lvl] / 2) * x * x + (f.sfx + b[lvl]) * x;
            m[lvl] = x;
            if (lvl == 0) {
                if (nexact <= bound) visit(static_cast<const IntVec&>(m), nexact);
                continue;
            }
            rem[lvl] = nrem;
            exact[lvl] = nexact;
            --lvl;
            descending = true;
            moved = true;
            break;
        }
        if (moved) continue;
        // exhausted this level; pop
        if (lvl == n - 1) break;
        ++lvl;
        descending = false;
    }
}

// Reference implementation for tests: plain box scan |m_i| <= box.
template <typename Visit>
void enumerate_quadratic_box(const IntMat& G, const IntVec& b, long long bound, long long box,
                             Visit&& visit) {
    const int n = static_cast<int>(G.size());
    IntVec m(n, -box);
    while (true) {
        long long e = 0;
        for (int i = 0; i < n; ++i) {
            e += (G[i][i] / 2) * m[i] * m[i] + b[i] * m[i];
            for (int j = i + 1; j < n; ++j) e += G[i][j] * m[i] * m[j];
        }
        if (e <= bound) visit(static_cast<const IntVec&>(m), e);
        int i = 0;
        while (i < n && m[i] == box) m[i++] = -box;
        if (i == n) break;
        ++m[i];
    }
}

}  // namespace rigidmod
