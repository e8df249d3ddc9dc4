#pragma once

#include <vector>

#include "csl/cyclotomic.hpp"
#include "csl/gaussian.hpp"
#include "csl/golden.hpp"

namespace csl {

enum class RingTag { gaussian, golden, cyclotomic };
enum class SplitKind { inert, split, ramified };

/// How a rational prime decomposes in one of the three rings.  The product of
/// `factors` (with multiplicity) equals p up to a unit of the ring.
template <typename E>
struct PrimeSplit {
    Int p;
    RingTag ring;
    SplitKind kind;
    std::vector<E> factors;
};

PrimeSplit<GaussInt> split_prime_gaussian(const Int& p);
PrimeSplit<GoldenInt> split_prime_golden(const Int& p);
PrimeSplit<CycloInt> split_prime_cyclotomic(const Int& p);

template <typename E>
struct Factorization {
    E unit;                                   // x = unit * prod(prime^exp)
    std::vector<std::pair<E, unsigned>> primes; // canonically normalized primes
};

Factorization<GaussInt> factor_element(const GaussInt& x);
Factorization<GoldenInt> factor_element(const GoldenInt& x);
Factorization<CycloInt> factor_element(const CycloInt& x);

} // namespace csl
