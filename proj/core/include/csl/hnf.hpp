#pragma once

#include <vector>

#include "csl/matrix.hpp"

namespace csl {

/// Column-style Hermite normal form of an n x k integer generator matrix
/// (columns generate the lattice, k >= n, full row rank required).
///
/// The result is the unique n x n lower-triangular basis with positive
/// diagonal and 0 <= H(i, j) < H(i, i) for j < i.  Two generating sets span
/// the same lattice iff their forms coincide, and the diagonal product is the
/// index in Z^n when the lattice is integral.
IntMat hnf(const IntMat& generators);

bool is_hnf(const IntMat& m);

/// Elementary divisors d_1 | d_2 | ... | d_n of a nonsingular integer matrix.
std::vector<Int> smith_divisors(IntMat m);

/// Extended gcd: returns g >= 0 and writes s, t with s*a + t*b = g.
Int xgcd(const Int& a, const Int& b, Int& s, Int& t);

} // namespace csl
