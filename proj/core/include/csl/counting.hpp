#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "csl/numeric.hpp"
#include "csl/structure.hpp"

namespace csl {

/// Arithmetic function determined by a prime-power rule; values at arbitrary
/// arguments come from multiplicativity, tables from a factor sieve.
class MultiplicativeFunction {
public:
    using Rule = std::function<Int(const Int& p, unsigned r)>;

    MultiplicativeFunction(std::string name, Rule rule)
        : name_(std::move(name)), rule_(std::move(rule)) {}

    const std::string& name() const { return name_; }

    Int prime_power(const Int& p, unsigned r) const { return rule_(p, r); }
    Int operator()(const Int& m) const;

    /// f(1..n), exact
    std::vector<Int> table(std::uint64_t n) const;

private:
    std::string name_;
    Rule rule_;
};

// the counting functions of the solved structures
const MultiplicativeFunction& f_square();      // planar square-lattice CSLs
const MultiplicativeFunction& f_cubic3();      // CSLs shared by the three cubic lattices
const MultiplicativeFunction& f_d4();          // D4 CSLs
const MultiplicativeFunction& f_z4();          // Z^4 CSLs
const MultiplicativeFunction& f_tenfold();     // tenfold-module CSMs
const MultiplicativeFunction& f_icosahedral(); // CSMs of the icosahedral modules
const MultiplicativeFunction& f_mc();          // CSMs of the golden cubic module
const MultiplicativeFunction& f_h4();          // CSMs of the H4 module
const MultiplicativeFunction& sigma1();        // divisor sum (all sublattices of rank 2)

/// alternative route to the D4 prime-power values via the double sum over
/// the 3d values; equals f_d4().prime_power identically
Int f_d4_prime_power_by_sum(const Int& p, unsigned r);

const MultiplicativeFunction& structure_counting_function(StructureId id);

/// sublattice counts of free Abelian groups of rank n
Int f_sublattices(unsigned n, const Int& m);           // closed form over factorizations
Int f_sublattices_recursive(unsigned n, const Int& m); // divisor-sum recursion

struct HierarchyCounts {
    Int all;              // every sublattice of the given index
    Int square;           // those similar to the square lattice
    Int primitive_square; // square and not an integer multiple
    Int csl;              // square, primitive and realizable as a CSL
};
HierarchyCounts hierarchy_counts(const Int& m);
/// same numbers by direct lattice-point counting on the circle of radius^2 m
HierarchyCounts hierarchy_counts_by_enumeration(const Int& m);

/// Coefficient table of a Dirichlet series (index m runs 1..n).
class SeriesTable {
public:
    SeriesTable(std::string name, std::vector<Int> coeffs)
        : name_(std::move(name)), c_(std::move(coeffs)) {}

    static SeriesTable materialize(const MultiplicativeFunction& f, std::uint64_t n);
    static SeriesTable zeta(std::uint64_t n);       // 1/(1)^s + 1/2^s + ...
    static SeriesTable zeta_shifted(std::uint64_t n); // coefficients m (zeta(s-1))
    static SeriesTable unit(std::uint64_t n);       // multiplicative identity

    const std::string& name() const { return name_; }
    std::uint64_t bound() const { return c_.size(); }
    Int at(std::uint64_t m) const;
    const std::vector<Int>& coeffs() const { return c_; }

    SeriesTable convolve(const SeriesTable& g, std::string name = "") const;
    SeriesTable shifted() const;  // g(m) = m f(m), i.e. F(s-1)
    SeriesTable inverse() const;  // Dirichlet inverse, needs f(1) = +-1

    bool operator==(const SeriesTable& o) const { return c_ == o.c_; }

private:
    std::string name_;
    std::vector<Int> c_;
};

/// |sum_{m<=N} f(m) / (c N^k) - 1|
double summatory_deviation(const std::vector<Int>& table, double c, double k);

} // namespace csl
