#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "csl/engine.hpp"

namespace csl {

struct RotationEntry {
    IsometryHandle handle;
    Int sigma;
    std::string key; // deterministic sort/dedupe key
};

/// Distinct coincidence rotations with sigma <= sigma_max, deterministic order.
/// Complete for Z2, Z3, FCC, BCC, Z4, D4, M10 and (within the documented
/// covered range) the icosahedral modules and MC; for H4 the search is bounded
/// heuristically because the module has no arithmetic index formula.
std::vector<RotationEntry> enumerate_rotations(StructureId id, const Int& sigma_max,
                                               unsigned threads = 1,
                                               std::uint64_t cap = 2'000'000);

/// Rotations per index, counted without materializing matrices.
std::map<Int, Int> rotation_counts(StructureId id, const Int& sigma_max, unsigned threads = 1);

/// Sigma values realized by icosians whose reduced-norm field norm is at most
/// norm_bound.  The scan box provably covers every rotation with
/// sigma <= floor((embedding_bound / tau)^2); pass 0 to use the bound that
/// covers all of norm_bound.
std::set<Int> icosahedral_sigma_spectrum(const Int& norm_bound, long long embedding_bound = 0,
                                         Int* covered = nullptr);

struct CslOrbits {
    std::vector<IntMat> csls;                     // canonical bases, sorted
    std::vector<std::vector<std::size_t>> orbits; // point-group orbits, by index
};

/// All CSLs of the given index grouped into orbits under the structure's
/// rotation point group.
CslOrbits classify_csls(StructureId id, const Int& sigma, std::uint64_t cap = 1'000'000);

} // namespace csl
