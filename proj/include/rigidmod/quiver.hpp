#pragma once

#include "rigidmod/qseries.hpp"
#include "rigidmod/root_system.hpp"

namespace rigidmod {

// Arithmetic of affine dimension vectors.  A vector v of length n+1 (indexed
// by the affine node 0..n) decomposes uniquely as
//
//     v = level_k * delta + (1/2)(m|m) * delta + (0, m)
//
// with m in Z^n and level_k an integer; (.|.) is the finite Cartan pairing.
// The framed quiver-variety dimension 2 v_0 - <v,v> (affine pairing, framing
// at node 0) always equals 2 * level_k.

// Affine pairing x^T C_affine y, both vectors of length n+1.
long long affine_pairing(const RootSystem& rs, const IntVec& x, const IntVec& y);

// Finite pairing m^T C m, vectors of length n.
long long finite_pairing(const RootSystem& rs, const IntVec& mx, const IntVec& my);

struct DeltaDecomposition {
    long long level_k = 0;  // distinct from the group order rs.k
    IntVec m;               // length n
};

// Valid for arbitrary integer vectors of length n+1; level_k may be negative.
// Throws ParityError if (m|m) comes out odd (impossible for an even lattice;
// checked rather than assumed).
DeltaDecomposition decompose(const RootSystem& rs, const IntVec& v);

// Reconstruction v = (level_k + (m|m)/2) * delta + (0, m).
IntVec recompose(const RootSystem& rs, const DeltaDecomposition& d);

// 2 v_0 - v^T C_affine v.
long long quiver_dimension(const RootSystem& rs, const IntVec& v);

// Exhaustively checks quiver_dimension(v) == 2 * decompose(v).level_k over
// the hypercube 0 <= v_i <= bound.
bool verify_dim_is_2k(const RootSystem& rs, long long bound);

// The zero-dimensional locus: one point per m in Z^n, with total length
// sum_i v_i dim(rho_i) for v = (1/2)(m|m) delta + (0, m).  Emitted as a
// q-series; must reproduce rigid_series exactly (the exponent is computed
// through the dimension-vector route, not the theta-sum formula).
QSeries zero_dim_support(const RootSystem& rs, long long trunc_q);

}  // namespace rigidmod
