#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "csl/matrix.hpp"
#include "csl/quaternion.hpp"

namespace csl {

/// The icosian ring: the rank-8 Z-span of the 120 unit icosians inside the
/// quaternion algebra over Q(tau).  Built once from the units; the fixed
/// basis is the Hermite form of their coordinate lattice.
class IcosianRing {
public:
    static const IcosianRing& instance();

    /// the 120 units (double cover of the icosahedral rotation group)
    const std::vector<QuatG>& units() const { return units_; }

    /// columns are the eight basis vectors, in doubled golden-pair coordinates
    /// (the coordinates of 2q in Z[tau]^4, flattened as a0,b0,...,a3,b3)
    const IntMat& basis() const { return basis_; }

    /// multiplication by tau expressed in ring coordinates
    const IntMat& tau_action() const { return tau_action_; }

    /// doubled golden-pair coordinates of q, if 2q has Z[tau] components
    static std::optional<std::array<Int, 8>> ambient_coords(const QuatG& q);

    QuatG from_ring_coords(const std::vector<Int>& x) const;

    /// ring coordinates of q (rational in general); integral iff q is a member
    std::vector<Rat> ring_coords(const QuatG& q) const;
    bool contains(const QuatG& q, std::vector<Int>* certificate = nullptr) const;

    /// The fractional ideal { l in Q(tau) : l q in ring } is principal; this
    /// returns its canonical generator.  Multiplying q by it yields a
    /// ring-primitive icosian (content a unit).
    GoldenRat primitive_scale(const QuatG& q) const;

    bool is_ring_primitive(const QuatG& q) const;

    /// fast primitivity test on integer ring coordinates: the content ideal is
    /// trivial iff the rows (x_i, (Tx)_i) generate all of Z^2, i.e. iff the
    /// gcd of their 2x2 minors is 1
    bool coords_primitive(const std::array<long long, 8>& x) const;

    /// Visits ring coordinates of every icosian q != 0 whose reduced norm
    /// satisfies |q|^2 <= primary_bound and (|q|^2)' <= conj_bound (both
    /// Galois embeddings bounded; neither bound alone gives a finite set).
    /// The visitor also receives a, b with 4 |q|^2 = a + b tau, so
    /// N(|q|^2) = (a^2 + a b - b^2) / 16.  Returning false stops the scan.
    using ScanVisitor =
        std::function<bool(const std::array<long long, 8>&, long long, long long)>;
    void scan(long long primary_bound, long long conj_bound, const ScanVisitor& visit) const;

    /// Canonically signed icosians with N(|q|^2) <= norm_bound.  The embedding
    /// bound defaults to the smallest integer >= tau * sqrt(norm_bound), which
    /// is enough to contain a trace-minimal representative of every norm.
    std::vector<QuatG> enumerate_icosians(const Int& norm_bound,
                                          std::optional<long long> embedding_bound = {},
                                          std::uint64_t cap = 20'000'000) const;

    static long long default_embedding_bound(const Int& norm_bound);

private:
    IcosianRing();

    std::vector<QuatG> units_;
    IntMat basis_;      // 8x8 Hermite form, lower triangular
    IntMat tau_action_; // 8x8 integer
    IntMat trace_gram_; // doubled Gram matrix of the trace form in ring coords
    long long tau_ll_[8][8]; // int64 copy of tau_action_ for the hot paths
};

} // namespace csl
