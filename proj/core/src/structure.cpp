#include "csl/structure.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <stdexcept>

#include "csl/icosian.hpp"
#include "csl/quaternion.hpp"

namespace csl {

const std::vector<StructureInfo>& all_structures() {
    static const std::vector<StructureInfo> table = {
        {StructureId::Z2, "Z2", 2, 2, 8, 4, false, false},
        {StructureId::Z3, "Z3", 3, 3, 48, 24, false, false},
        {StructureId::FCC, "FCC", 3, 3, 48, 24, false, false},
        {StructureId::BCC, "BCC", 3, 3, 48, 24, false, false},
        {StructureId::Z4, "Z4", 4, 4, 384, 192, false, false},
        {StructureId::D4, "D4", 4, 4, 1152, 576, false, false},
        {StructureId::M10, "M10", 4, 2, 20, 10, false, true},
        {StructureId::MB, "MB", 6, 3, 120, 60, true, false},
        {StructureId::MP, "MP", 6, 3, 120, 60, true, false},
        {StructureId::MF, "MF", 6, 3, 120, 60, true, false},
        {StructureId::MC, "MC", 6, 3, 48, 24, true, false},
        {StructureId::H4, "H4", 8, 4, 14400, 7200, true, false},
    };
    return table;
}

const StructureInfo& structure_info(StructureId id) {
    for (const auto& s : all_structures())
        if (s.id == id) return s;
    throw std::logic_error("structure_info: unknown structure");
}

std::optional<StructureId> structure_by_name(const std::string& name) {
    for (const auto& s : all_structures())
        if (name == s.name) return s.id;
    return std::nullopt;
}

namespace {

RatMat rat_basis(std::initializer_list<std::initializer_list<Rat>> rows) {
    size_t n = rows.size();
    RatMat m(n, n);
    size_t i = 0;
    for (const auto& row : rows) {
        size_t j = 0;
        for (const Rat& v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

// sublattice of Z^n cut out by parity conditions (rows of ones/zeros mod 2)
IntMat parity_sublattice(unsigned n, const std::vector<std::vector<int>>& conditions) {
    // generators: 2 e_i plus lifts of a mod-2 kernel basis
    std::vector<std::vector<int>> rows = conditions;
    size_t k = rows.size();
    // Gaussian elimination over F2 to find the kernel
    std::vector<int> pivot_col(k, -1);
    size_t r = 0;
    for (unsigned c = 0; c < n && r < k; ++c) {
        size_t sel = r;
        while (sel < k && rows[sel][c] % 2 == 0) ++sel;
        if (sel == k) continue;
        std::swap(rows[r], rows[sel]);
        for (size_t i = 0; i < k; ++i) {
            if (i == r || rows[i][c] % 2 == 0) continue;
            for (unsigned j = 0; j < n; ++j) rows[i][j] = (rows[i][j] + rows[r][j]) % 2;
        }
        pivot_col[r] = int(c);
        ++r;
    }
    std::vector<std::vector<int>> kernel;
    std::vector<bool> is_pivot(n, false);
    for (size_t i = 0; i < r; ++i) is_pivot[pivot_col[i]] = true;
    for (unsigned c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        std::vector<int> v(n, 0);
        v[c] = 1;
        for (size_t i = 0; i < r; ++i)
            if (rows[i][c] % 2 != 0) v[pivot_col[i]] = 1;
        kernel.push_back(v);
    }
    IntMat gens(n, n + kernel.size());
    for (unsigned i = 0; i < n; ++i) gens(i, i) = 2;
    for (size_t c = 0; c < kernel.size(); ++c)
        for (unsigned i = 0; i < n; ++i) gens(i, n + c) = kernel[c][i];
    return hnf(gens);
}

struct ModuleModel {
    IntMat basis;     // r x r coordinate basis (columns), lower triangular
    RatMat basis_inv; // rational inverse
};

const ModuleModel& module_model(StructureId id) {
    static std::map<StructureId, ModuleModel> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(id);
    if (it != cache.end()) return it->second;

    IntMat basis;
    switch (id) {
    case StructureId::MB:
        // golden-pair coordinates (a1,b1,a2,b2,a3,b3); the defining congruence
        // tau^2 a_1 + tau a_2 + a_3 = 0 (mod 2) splits into two parities
        basis = parity_sublattice(6, {{1, 1, 0, 1, 1, 0}, {1, 0, 1, 1, 0, 1}});
        break;
    case StructureId::MP:
        basis = parity_sublattice(6, {{1, 1, 0, 1, 1, 0}, {1, 0, 1, 1, 0, 1},
                                      {1, 0, 1, 0, 1, 0}});
        break;
    case StructureId::MF:
        basis = parity_sublattice(6, {{1, 1, 0, 1, 1, 0}, {1, 0, 1, 1, 0, 1},
                                      {1, 0, 1, 0, 1, 0}, {0, 1, 0, 1, 0, 1}});
        break;
    case StructureId::MC:
        basis = IntMat::identity(6);
        break;
    case StructureId::H4:
        basis = IcosianRing::instance().basis();
        break;
    default:
        throw std::logic_error("module_model: not a module structure");
    }
    ModuleModel m{basis, to_rational(basis).inverse()};
    return cache.emplace(id, std::move(m)).first->second;
}

} // namespace

const Lattice& structure_lattice(StructureId id) {
    static std::map<StructureId, Lattice> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(id);
    if (it != cache.end()) return it->second;

    RatMat b;
    Rat h(1, 2);
    switch (id) {
    case StructureId::Z2:
        b = rat_basis({{1, 0}, {0, 1}});
        break;
    case StructureId::Z3:
        b = rat_basis({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
        break;
    case StructureId::FCC: // {x : x1+x2+x3 even}
        b = rat_basis({{1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
        break;
    case StructureId::BCC: // Z^3 + (1,1,1)/2
        b = rat_basis({{1, 0, h}, {0, 1, h}, {0, 0, h}});
        break;
    case StructureId::Z4:
        b = rat_basis({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
        break;
    case StructureId::D4: // {x in Z^4 : sum x_i even}
        b = rat_basis({{1, 0, 0, 0}, {-1, 1, 0, 1}, {0, -1, 1, 0}, {0, 0, -1, 1}});
        break;
    default:
        throw std::domain_error("structure_lattice: structure has no geometric lattice");
    }
    return cache.emplace(id, Lattice::from_basis(b)).first->second;
}

RatMat golden_regular_rep(const Mat<GoldenRat>& m) {
    RatMat r(2 * m.rows(), 2 * m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) {
            const GoldenRat& g = m(i, j);
            r(2 * i, 2 * j) = g.a();
            r(2 * i, 2 * j + 1) = g.b();
            r(2 * i + 1, 2 * j) = g.b();
            r(2 * i + 1, 2 * j + 1) = g.a() + g.b();
        }
    return r;
}

RatMat cyclo_mult_matrix(const CycloInt& c) {
    RatMat m(4, 4);
    CycloInt pow(1L);
    const CycloInt xi(Int(0), Int(1), Int(0), Int(0));
    for (int j = 0; j < 4; ++j) {
        CycloInt col = c * pow;
        for (int i = 0; i < 4; ++i) m(i, j) = Rat(col[i]);
        pow = pow * xi;
    }
    return m;
}

RatMat action_matrix(StructureId id, const RatMat& iso) {
    const auto& inf = structure_info(id);
    if (inf.golden_field || inf.quotient_input)
        throw std::domain_error("action_matrix: structure needs a golden or quotient handle");
    if (iso.rows() != inf.dim) throw std::invalid_argument("action_matrix: dimension mismatch");
    const Lattice& l = structure_lattice(id);
    RatMat b = l.basis();
    return b.inverse() * iso * b;
}

RatMat action_matrix_golden(StructureId id, const Mat<GoldenRat>& iso) {
    const auto& inf = structure_info(id);
    if (!inf.golden_field)
        throw std::domain_error("action_matrix_golden: not a golden-field structure");
    if (iso.rows() != inf.dim)
        throw std::invalid_argument("action_matrix_golden: dimension mismatch");
    const ModuleModel& mm = module_model(id);
    return mm.basis_inv * golden_regular_rep(iso) * to_rational(mm.basis);
}

RatMat action_matrix_tenfold(const CycloInt& num, const CycloInt& den) {
    if (num.is_zero() || den.is_zero())
        throw std::domain_error("action_matrix_tenfold: zero quotient");
    return cyclo_mult_matrix(num) * cyclo_mult_matrix(den).inverse();
}

namespace {

std::vector<IntMat> signed_permutations(unsigned n, bool det_plus_only) {
    std::vector<unsigned> perm(n);
    for (unsigned i = 0; i < n; ++i) perm[i] = i;
    std::vector<IntMat> out;
    do {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            IntMat m(n, n);
            for (unsigned j = 0; j < n; ++j) m(perm[j], j) = (mask >> j) & 1 ? -1 : 1;
            if (det_plus_only && m.det() != 1) continue;
            out.push_back(std::move(m));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

IntMat to_integer_strict(const RatMat& m) {
    IntMat r(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) {
            if (denominator(m(i, j)) != 1)
                throw std::logic_error("point rotation not integral in structure coordinates");
            r(i, j) = numerator(m(i, j));
        }
    return r;
}

std::vector<IntMat> build_point_rotations(StructureId id) {
    std::vector<IntMat> out;
    switch (id) {
    case StructureId::Z2:
        for (auto& m : signed_permutations(2, true)) out.push_back(std::move(m));
        break;
    case StructureId::Z3:
    case StructureId::FCC:
    case StructureId::BCC: {
        for (auto& q : signed_permutations(3, true))
            out.push_back(to_integer_strict(action_matrix(id, to_rational(q))));
        break;
    }
    case StructureId::Z4:
        for (auto& m : signed_permutations(4, true)) out.push_back(std::move(m));
        break;
    case StructureId::D4: {
        // rotations of index 1 are the pair maps with both norms a power of 2;
        // with q1 sign-canonical this hits each of the 576 exactly once
        auto qs = enumerate_quaternions(Int(4), true);
        for (const QuatZ& q1 : qs) {
            Int n1 = q1.norm();
            if (n1 != 1 && n1 != 2 && n1 != 4) continue;
            for (const QuatZ& q2c : qs) {
                Int n2 = q2c.norm();
                if (n2 != 1 && n2 != 2 && n2 != 4) continue;
                Int s;
                if (!perfect_square(n1 * n2, s)) continue;
                for (int sign : {+1, -1}) {
                    QuatZ q2 = sign > 0 ? q2c : -q2c;
                    RatMat m = pair_map(to_rational(q1), to_rational(q2));
                    RatMat r(4, 4);
                    for (int i = 0; i < 4; ++i)
                        for (int j = 0; j < 4; ++j) r(i, j) = m(i, j) / Rat(s);
                    out.push_back(to_integer_strict(action_matrix(id, r)));
                }
            }
        }
        break;
    }
    case StructureId::M10: {
        // C10: multiplication by the primitive tenth root -x^3
        CycloInt zeta(Int(0), Int(0), Int(0), Int(-1));
        CycloInt pow(1L);
        for (int k = 0; k < 10; ++k) {
            out.push_back(to_integer_strict(cyclo_mult_matrix(pow)));
            pow = pow * zeta;
        }
        break;
    }
    case StructureId::MB:
    case StructureId::MP:
    case StructureId::MF:
    case StructureId::MC: {
        if (id == StructureId::MC) {
            // cubic rotations act coordinate-wise on Z[tau]^3
            for (auto& q : signed_permutations(3, true)) {
                Mat<GoldenRat> g(3, 3);
                for (int i = 0; i < 3; ++i)
                    for (int j = 0; j < 3; ++j) g(i, j) = GoldenRat(Rat(q(i, j)), Rat(0));
                out.push_back(to_integer_strict(action_matrix_golden(id, g)));
            }
        } else {
            // the icosahedral rotation group through the 120 unit icosians
            const auto& units = IcosianRing::instance().units();
            for (const QuatG& u : units) {
                if (!is_canonical_sign_golden(u)) continue;
                Mat<GoldenRat> r = cayley_rotation(u);
                out.push_back(to_integer_strict(action_matrix_golden(id, r)));
            }
        }
        break;
    }
    case StructureId::H4: {
        // 7200 rotations from pairs of unit icosians, q1 sign-canonical
        const auto& units = IcosianRing::instance().units();
        for (const QuatG& q1 : units) {
            if (!is_canonical_sign_golden(q1)) continue;
            for (const QuatG& q2 : units) {
                Mat<GoldenRat> m = pair_map(q1, q2);
                out.push_back(to_integer_strict(action_matrix_golden(StructureId::H4, m)));
            }
        }
        break;
    }
    }
    return out;
}

} // namespace

const std::vector<IntMat>& point_rotations(StructureId id) {
    static std::map<StructureId, std::vector<IntMat>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(id);
    if (it != cache.end()) return it->second;
    return cache.emplace(id, build_point_rotations(id)).first->second;
}

} // namespace csl
