#pragma once

#include <cstdint>
#include <vector>

#include "csl/hnf.hpp"
#include "csl/matrix.hpp"

namespace csl {

/// Full-rank lattice in Q^n, stored canonically as H / den where H is the
/// Hermite normal form of den * L and den is the least positive integer with
/// den * L integral.  Equality of lattices is equality of representations.
class Lattice {
public:
    static Lattice standard(size_t n);
    static Lattice from_basis(const RatMat& basis);
    static Lattice from_integer_basis(const IntMat& basis);
    /// Lattice spanned by the columns of a (possibly redundant) generator set.
    static Lattice from_generators(const IntMat& gens, const Int& den);

    size_t dim() const { return h_.rows(); }
    const IntMat& numerator() const { return h_; }
    const Int& den() const { return den_; }
    RatMat basis() const;

    bool operator==(const Lattice& o) const { return den_ == o.den_ && h_ == o.h_; }
    bool operator!=(const Lattice& o) const { return !(*this == o); }

private:
    Lattice(IntMat h, Int den) : h_(std::move(h)), den_(std::move(den)) {}
    IntMat h_;
    Int den_;
};

bool commensurate(const Lattice& a, const Lattice& b);

/// True iff inner is a sublattice of outer; coords receives outer^{-1} * inner.
bool is_sublattice(const Lattice& outer, const Lattice& inner);

/// [outer : inner]; throws std::domain_error (mentioning the non-integral
/// coordinates) if inner is not a sublattice of outer.
Int lattice_index(const Lattice& outer, const Lattice& inner);

Lattice lattice_sum(const Lattice& a, const Lattice& b);
Lattice dual(const Lattice& a);
/// Intersection computed through duals: (A meet B) = (A* + B*)*.
Lattice intersect(const Lattice& a, const Lattice& b);

/// Elementary divisors of the factor group outer / inner.
std::vector<Int> snf_divisors(const Lattice& outer, const Lattice& inner);

/// All sublattices of Z^n of index m, as canonical Hermite forms in a fixed
/// deterministic order (diagonals lexicographic, then the reduced entries).
/// Throws resource_cap_error if the total count would exceed `cap`.
std::vector<IntMat> enumerate_sublattices(unsigned n, const Int& m,
                                          std::uint64_t cap = 2'000'000);

/// Number of sublattices of Z^n of index m, by explicit enumeration of the
/// Hermite forms (cheap count, no matrices materialized).
Int count_sublattices_by_enumeration(unsigned n, const Int& m);

} // namespace csl
