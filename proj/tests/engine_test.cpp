#include <doctest.h>

#include "csl/engine.hpp"
#include "csl/enumerate.hpp"
#include "csl/icosian.hpp"
#include "csl/textio.hpp"
#include "test_util.hpp"

using namespace csl;
using namespace csl::testing;

namespace {

QuatZ qz(long w, long x, long y, long z) { return {Int(w), Int(x), Int(y), Int(z)}; }

IsometryHandle sample_rotation_z3(int i) {
    static const QuatZ samples[] = {qz(0, 1, 1, 1), qz(1, 1, 1, 0), qz(2, 1, 0, 0),
                                    qz(1, 2, 3, 4), qz(3, 1, 1, 1), qz(0, 1, 2, 2)};
    return IsometryHandle::from_quaternion(samples[i % 6]);
}

} // namespace

TEST_SUITE_BEGIN("engine");

TEST_CASE("denominators") {
    CHECK(matrix_denominator(RatMat::identity(3)) == 1);
    auto h = IsometryHandle::from_quaternion(qz(0, 1, 1, 1));
    CHECK(matrix_denominator(*h.rational) == 3);
    auto h2 = IsometryHandle::from_quaternion(qz(1, 1, 1, 1));
    CHECK(matrix_denominator(*h2.rational) == 1);
}

TEST_CASE("golden denominator") {
    // rotation about the x-axis with |q|^2 = 2 + tau
    QuatG q{GoldenRat(Rat(1), Rat(0)), GoldenRat(Rat(0), Rat(1)), GoldenRat(), GoldenRat()};
    auto h = IsometryHandle::from_golden_quaternion(q);
    GoldenInt den = matrix_denominator_golden(*h.golden);
    CHECK(den == GoldenInt(Int(2), Int(1)));

    // den * R is integral with unit entry content
    Mat<GoldenRat> scaled = *h.golden * GoldenRat(den);
    GoldenInt content(Int(0), Int(0));
    bool first = true;
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) {
            REQUIRE(scaled(i, j).is_integral());
            GoldenInt e = scaled(i, j).to_integer();
            if (e.is_zero()) continue;
            content = first ? e : golden_gcd(content, e);
            first = false;
        }
    CHECK(content.is_unit());
}

TEST_CASE("coincidence membership") {
    // icosahedral rotation is no coincidence of the cubic lattice
    QuatG seed{GoldenRat(Rat(0), Rat(1, 2)), GoldenRat(Rat(1, 2), Rat(0)),
               GoldenRat(Rat(1, 2), Rat(-1, 2)), GoldenRat()};
    auto golden_handle = IsometryHandle::from_golden_quaternion(seed);
    CHECK(!golden_handle.rational); // genuinely irrational entries
    CHECK(!is_coincidence(StructureId::Z3, golden_handle));
    CHECK(is_coincidence(StructureId::MB, golden_handle));
    auto res = sigma_oracle(StructureId::Z3, golden_handle);
    CHECK(!res.finite);

    // point-group elements have index 1
    for (const IntMat& g : point_rotations(StructureId::Z3)) {
        auto h = IsometryHandle::from_matrix(to_rational(g));
        CHECK(is_coincidence(StructureId::Z3, h));
        CHECK(sigma_oracle(StructureId::Z3, h).sigma == 1);
    }

    CHECK(is_coincidence(StructureId::Z3, IsometryHandle::from_quaternion(qz(0, 1, 1, 1))));

    // non-unimodular quotients are not isometries of the module
    auto bad = IsometryHandle::from_gauss_quotient(GaussInt(Int(1), Int(1)), GaussInt(Int(1), Int(0)));
    CHECK(!is_coincidence(StructureId::Z2, bad));
    CHECK(!sigma_oracle(StructureId::Z2, bad).finite);
}

TEST_CASE("oracle fixed points") {
    auto z2 = IsometryHandle::from_gauss_quotient(GaussInt(Int(2), Int(1)), GaussInt(Int(2), Int(-1)));
    auto r = sigma_oracle(StructureId::Z2, z2);
    CHECK(r.finite);
    CHECK(r.sigma == 5);
    REQUIRE(r.csl_basis);
    CHECK(r.csl_basis->det() == 5);

    CHECK(sigma_oracle(StructureId::Z3, IsometryHandle::from_quaternion(qz(0, 1, 1, 1))).sigma == 3);

    // the tenfold generators at 11 and 31
    CycloInt two(2L), xi(Int(0), Int(1), Int(0), Int(0));
    auto m10_11 = IsometryHandle::from_cyclo_quotient(two + xi, (two + xi).conj());
    CHECK(sigma_oracle(StructureId::M10, m10_11).sigma == 11);
    auto m10_31 = IsometryHandle::from_cyclo_quotient(two - xi, (two - xi).conj());
    CHECK(sigma_oracle(StructureId::M10, m10_31).sigma == 31);
}

TEST_CASE("closed forms agree with the oracle on spot checks") {
    // d = 3: odd part of the reduced norm
    auto h3 = IsometryHandle::from_quaternion(qz(0, 1, 1, 1));
    CHECK(sigma_closed_form(StructureId::Z3, h3) == 3);

    // d = 4: lcm of the component indices
    auto h4 = IsometryHandle::from_pair(qz(0, 1, 1, 1), qz(0, 1, 1, 1));
    CHECK(sigma_closed_form(StructureId::D4, h4) == 3);
    CHECK(sigma_oracle(StructureId::D4, h4).sigma == 3);

    // golden cubic module: norm of the golden denominator
    QuatG q{GoldenRat(Rat(1), Rat(0)), GoldenRat(Rat(0), Rat(1)), GoldenRat(), GoldenRat()};
    auto hmc = IsometryHandle::from_golden_quaternion(q);
    CHECK(sigma_closed_form(StructureId::MC, hmc) == 5);
    CHECK(sigma_oracle(StructureId::MC, hmc).sigma == 5);

    // no closed form for the H4 module
    const auto& u = IcosianRing::instance().units()[3];
    auto hh = IsometryHandle::from_golden_pair(u, u);
    CHECK_THROWS_AS(sigma_closed_form(StructureId::H4, hh), std::domain_error);
    CHECK(sigma_oracle(StructureId::H4, hh).sigma == 1);

    // closed forms demand primitivity
    CHECK_THROWS_AS(sigma_closed_form(StructureId::Z3, IsometryHandle::from_quaternion(qz(0, 2, 2, 2))),
                    std::domain_error);
}

TEST_CASE("icosian index by content ideal") {
    CHECK(icosian_gcd_sigma(cayley_rotation(to_golden(qz(1, 0, 0, 0)))) == 1);
    for (int k : {0, 17, 64, 99})
        CHECK(icosian_gcd_sigma(cayley_rotation(IcosianRing::instance().units()[k])) == 1);

    // smallest nontrivial index is 4
    auto r = cayley_rotation(to_golden(qz(1, 1, 0, 0)));
    CHECK(icosian_gcd_sigma(r) == 4);
    auto h = IsometryHandle::from_golden_matrix(r);
    for (auto id : {StructureId::MB, StructureId::MP, StructureId::MF})
        CHECK(sigma_oracle(id, h).sigma == 4);
}

TEST_CASE("icosian gcd equals the module oracle on a sweep") {
    auto entries = enumerate_rotations(StructureId::MF, Int(9), 2);
    for (const auto& e : entries) {
        REQUIRE(e.handle.golden);
        Int gcd_sigma = icosian_gcd_sigma(*e.handle.golden);
        CHECK(gcd_sigma == e.sigma);
        for (auto id : {StructureId::MB, StructureId::MP, StructureId::MF})
            CHECK(sigma_oracle(id, e.handle).sigma == gcd_sigma);
    }
    CHECK(entries.size() > 100);
}

TEST_CASE("reflections carry the index of their rotation part") {
    RatMat tx(2, 2);
    tx(0, 0) = 1;
    tx(1, 1) = -1;
    auto hx = IsometryHandle::from_matrix(tx);
    CHECK(reflection_sigma(StructureId::Z2, hx) == 1);

    RatMat minus = to_rational(IntMat::identity(3)) * Rat(-1);
    CHECK(reflection_sigma(StructureId::Z3, IsometryHandle::from_matrix(minus)) == 1);

    // x-mirror composed with an index-5 rotation
    auto rot = IsometryHandle::from_gauss_quotient(GaussInt(Int(2), Int(1)), GaussInt(Int(2), Int(-1)));
    RatMat m = *rot.rational * tx;
    auto hm = IsometryHandle::from_matrix(m);
    CHECK(reflection_sigma(StructureId::Z2, hm) == 5);
    // and the oracle on the reflection itself agrees
    CHECK(sigma_oracle(StructureId::Z2, hm).sigma == 5);

    CHECK_THROWS_AS(reflection_sigma(StructureId::Z2, rot), std::domain_error);
}

TEST_CASE("index is inversion invariant") {
    for (int i = 0; i < 6; ++i) {
        auto h = sample_rotation_z3(i);
        auto inv = IsometryHandle::from_matrix(h.rational->transposed());
        CHECK(sigma_oracle(StructureId::Z3, h).sigma == sigma_oracle(StructureId::Z3, inv).sigma);
    }
}

TEST_CASE("coincidence isometries compose") {
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            auto a = sample_rotation_z3(i), b = sample_rotation_z3(j);
            auto prod = IsometryHandle::from_matrix(*a.rational * *b.rational);
            auto res = sigma_oracle(StructureId::Z3, prod);
            CHECK(res.finite);
        }
}

TEST_CASE("one index for all three cubic lattices") {
    for (int i = 0; i < 6; ++i) {
        auto h = sample_rotation_z3(i);
        Int p = sigma_oracle(StructureId::Z3, h).sigma;
        CHECK(sigma_oracle(StructureId::FCC, h).sigma == p);
        CHECK(sigma_oracle(StructureId::BCC, h).sigma == p);
        CHECK(p % 2 == 1);
    }
}

TEST_CASE("sublattice index divisibility") {
    // for a sublattice of index m, sigma_outer divides m * sigma_inner
    for (int iter = 0; iter < 10; ++iter) {
        Lattice outer = Lattice::standard(3);
        Int m = rand_int(1, 6);
        Lattice inner = random_sublattice(outer, m);
        for (int i = 0; i < 4; ++i) {
            auto h = sample_rotation_z3(i);
            Int so = sigma_on_lattice(outer, *h.rational);
            Int si = sigma_on_lattice(inner, *h.rational);
            CHECK((m * si) % so == 0);
        }
    }
}

TEST_CASE("declared duals have equal indices") {
    for (auto id : {StructureId::Z2, StructureId::Z3, StructureId::FCC, StructureId::BCC,
                    StructureId::Z4, StructureId::D4})
        CHECK(module_dual_check(id));
    CHECK_THROWS_AS(module_dual_check(StructureId::MB), std::domain_error);
}

TEST_CASE("isometry validation") {
    RatMat not_orth(2, 2);
    not_orth(0, 0) = 2;
    not_orth(1, 1) = 1;
    CHECK_THROWS_AS(IsometryHandle::from_matrix(not_orth), std::domain_error);
    CHECK_THROWS_AS(IsometryHandle::from_quaternion(qz(0, 0, 0, 0)), std::domain_error);
}

TEST_SUITE_END();
