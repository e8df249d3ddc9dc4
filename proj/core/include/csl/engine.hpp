#pragma once

#include <optional>
#include <string>

#include "csl/cyclotomic.hpp"
#include "csl/gaussian.hpp"
#include "csl/golden.hpp"
#include "csl/lattice.hpp"
#include "csl/quaternion.hpp"
#include "csl/structure.hpp"

namespace csl {

/// An exact isometry plus the parametrization it came from.  Matrices are
/// validated (orthogonal, det = +-1) on construction; quotients are kept as
/// given and validated where used.
struct IsometryHandle {
    std::optional<RatMat> rational;                         // d x d over Q
    std::optional<Mat<GoldenRat>> golden;                   // d x d over Q(tau)
    std::optional<std::pair<GaussInt, GaussInt>> gauss_quotient;
    std::optional<std::pair<CycloInt, CycloInt>> cyclo_quotient;
    // provenance for the closed forms
    std::optional<QuatZ> quat;
    std::optional<std::pair<QuatZ, QuatZ>> quat_pair;
    std::optional<QuatG> golden_quat;
    std::optional<std::pair<QuatG, QuatG>> golden_pair;

    static IsometryHandle from_matrix(RatMat m);
    static IsometryHandle from_golden_matrix(Mat<GoldenRat> m);
    static IsometryHandle from_quaternion(const QuatZ& q);
    static IsometryHandle from_pair(const QuatZ& q1, const QuatZ& q2);
    static IsometryHandle from_golden_quaternion(const QuatG& q);
    static IsometryHandle from_golden_pair(const QuatG& q1, const QuatG& q2);
    static IsometryHandle from_gauss_quotient(const GaussInt& num, const GaussInt& den);
    static IsometryHandle from_cyclo_quotient(const CycloInt& num, const CycloInt& den);
};

/// least positive integer k with k * m integral
Int matrix_denominator(const RatMat& m);
/// canonical totally positive element of Z[tau] clearing all entries
GoldenInt matrix_denominator_golden(const Mat<GoldenRat>& m);

bool is_orthogonal(const RatMat& m);
bool is_orthogonal_golden(const Mat<GoldenRat>& m);

/// entries lie in the structure's coincidence field (quotients: unimodular)
bool is_coincidence(StructureId id, const IsometryHandle& h);

struct CoincidenceResult {
    bool finite = false;
    Int sigma;                        // defined iff finite
    std::optional<IntMat> csl_basis;  // Hermite basis in structure coordinates
    std::string method;
};

/// Sigma through the universal oracle: the index of the coordinate lattice
/// meet its image under the action matrix.
CoincidenceResult sigma_oracle(StructureId id, const IsometryHandle& h);

/// Sigma through the structure's arithmetic formula (no lattice intersection).
/// H4 has no formula and reports that via std::domain_error.
Int sigma_closed_form(StructureId id, const IsometryHandle& h);

/// Least icosian norm over all quaternion preimages of a rotation in
/// SO(3, Q(tau)); equals sigma for the three icosahedral modules.
Int icosian_gcd_sigma(const Mat<GoldenRat>& r0);

/// Inverse of the 3d parametrization: a quaternion mapping to the rotation.
template <typename F>
Quat<F> cayley_invert(const Mat<F>& r);

/// Sigma of an orientation-reversing isometry, by splitting off the
/// structure's canonical reflection and indexing the rotation part.
Int reflection_sigma(StructureId id, const IsometryHandle& h);

/// [L : L meet iso L] for an arbitrary full-rank lattice.
Int sigma_on_lattice(const Lattice& l, const RatMat& iso);

/// Checks sigma(R) on the structure equals sigma(R) on its declared dual
/// for a built-in sample of coincidence isometries.
bool module_dual_check(StructureId id);

} // namespace csl
