#pragma once

#include <optional>
#include <string>
#include <vector>

#include "csl/cyclotomic.hpp"
#include "csl/golden.hpp"
#include "csl/lattice.hpp"
#include "csl/matrix.hpp"

namespace csl {

/// The structures whose coincidence problem the engine solves: the cubic
/// lattice families in d = 2, 3, 4 and the rank > dim modules (tenfold planar,
/// the three icosahedral modules, the golden cubic module and the H4 module).
enum class StructureId { Z2, Z3, FCC, BCC, Z4, D4, M10, MB, MP, MF, MC, H4 };

struct StructureInfo {
    StructureId id;
    const char* name;
    unsigned rank;                 // rank of the integer coordinate model
    unsigned dim;                  // spatial dimension
    unsigned point_group_order;    // full point group
    unsigned rotation_group_order; // orientation-preserving part
    bool golden_field;             // coincidence field is Q(tau) rather than Q
    bool quotient_input;           // isometries arrive as ring-element quotients
};

const std::vector<StructureInfo>& all_structures();
const StructureInfo& structure_info(StructureId id);
std::optional<StructureId> structure_by_name(const std::string& name);

/// Geometric basis of the cubic-family lattices (Z2, Z3, FCC, BCC, Z4, D4).
const Lattice& structure_lattice(StructureId id);

/// Regular representation of a Q(tau) matrix as a rational matrix twice the
/// size: each entry a + b tau becomes the 2x2 block [[a, b], [b, a+b]].
RatMat golden_regular_rep(const Mat<GoldenRat>& m);

/// Multiplication by a cyclotomic integer on the basis 1, x, x^2, x^3.
RatMat cyclo_mult_matrix(const CycloInt& c);

/// Action of an isometry on the structure's rank-r coordinate lattice.
/// For lattices this is B^{-1} R B; for the golden modules the regular
/// representation conjugated into module coordinates; for the tenfold module
/// multiplication by num/den.
RatMat action_matrix(StructureId id, const RatMat& iso);
RatMat action_matrix_golden(StructureId id, const Mat<GoldenRat>& iso);
RatMat action_matrix_tenfold(const CycloInt& num, const CycloInt& den);

/// Rotation part of the structure's point group, as exact action matrices on
/// the coordinate lattice (integer entries, determinant +-1).
const std::vector<IntMat>& point_rotations(StructureId id);

} // namespace csl
