#pragma once

#include <string>
#include <vector>

#include "rigidmod/errors.hpp"

namespace rigidmod {

using IntVec = std::vector<long long>;
using IntMat = std::vector<IntVec>;

enum class AdeKind { A, D, E };

// Static exact data for a simply-laced root system and the associated binary
// subgroup of SL(2,C).
//
// Node numbering is Bourbaki for the finite nodes 1..n; the affine node has
// index 0 and carries the trivial representation.  `dims[i]` is the dimension
// of the irreducible representation attached to node i; by the McKay
// correspondence this is also the affine Dynkin mark of node i, so `dims`
// doubles as the basic imaginary root delta (dims[0] = 1).  The data is
// validated at construction: sum of dims^2 equals k, the affine Cartan matrix
// annihilates delta, and the finite Cartan matrix is positive definite.
struct RootSystem {
    AdeKind kind;
    int n = 0;         // rank
    long long k = 0;   // group order: A_n -> n+1, D_n -> 4n-8, E6/E7/E8 -> 24/48/120
    IntMat cartan;     // n x n finite Cartan matrix (nodes 1..n)
    IntVec dims;       // length n+1, indexed by affine node 0..n

    const IntVec& delta() const { return dims; }
    std::string token() const;  // "A3", "D5", "E8"
};

// kind=A requires n >= 1, kind=D requires n >= 4, kind=E requires n in {6,7,8}.
// Throws InvalidRank otherwise.
RootSystem make_root_system(AdeKind kind, int n);

// Parses tokens of the form "A<n>", "D<n>", "E6", "E7", "E8".
RootSystem parse_root_token(const std::string& token);

// The (n+1) x (n+1) Cartan matrix of the extended Dynkin diagram; its kernel
// over Q is spanned by delta.
IntMat affine_cartan(const RootSystem& rs);

// The root systems exercised by the default verification sweep:
// A1..A10, D4..D8, E6, E7, E8.
std::vector<RootSystem> standard_sweep();

}  // namespace rigidmod
