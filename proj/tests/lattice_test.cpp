#include <doctest.h>

#include <set>
#include <string>

#include "csl/errors.hpp"
#include "csl/lattice.hpp"
#include "test_util.hpp"

using namespace csl;
using namespace csl::testing;

namespace {

IntMat im(std::initializer_list<std::initializer_list<long>> rows) {
    IntMat m(rows.size(), rows.begin()->size());
    size_t i = 0;
    for (const auto& row : rows) {
        size_t j = 0;
        for (long v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

} // namespace

TEST_SUITE_BEGIN("lattice");

TEST_CASE("hermite form basics") {
    CHECK(hnf(IntMat::identity(3)) == IntMat::identity(3));

    // generators (2,0), (0,2), (1,1): the even-coordinate-sum sublattice
    IntMat gens(2, 3);
    gens(0, 0) = 2; gens(1, 0) = 0;
    gens(0, 1) = 0; gens(1, 1) = 2;
    gens(0, 2) = 1; gens(1, 2) = 1;
    IntMat h = hnf(gens);
    CHECK(h == im({{1, 0}, {1, 2}}));
    CHECK(is_hnf(h));

    for (int iter = 0; iter < 20; ++iter)
        CHECK(hnf(random_unimodular(3)) == IntMat::identity(3));

    IntMat rank_deficient(2, 2);
    rank_deficient(0, 0) = 1;
    rank_deficient(0, 1) = 2; // second row zero
    CHECK_THROWS_AS(hnf(rank_deficient), std::domain_error);
}

TEST_CASE("hermite form is a lattice invariant") {
    for (int iter = 0; iter < 1000; ++iter) {
        size_t n = 2 + iter % 3;
        IntMat b = random_nonsingular(n);
        IntMat h1 = hnf(b);
        IntMat h2 = hnf(b * random_unimodular(n));
        CHECK(h1 == h2);
        CHECK(is_hnf(h1));
    }
}

TEST_CASE("index") {
    Lattice z3 = Lattice::standard(3);
    Lattice two_z3 = Lattice::from_integer_basis(im({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}));
    CHECK(lattice_index(z3, two_z3) == 8);

    Lattice z2 = Lattice::standard(2);
    Lattice even = Lattice::from_integer_basis(im({{1, 0}, {1, 2}}));
    CHECK(lattice_index(z2, even) == 2);
    CHECK(lattice_index(z2, z2) == 1);

    CHECK(is_sublattice(z2, even));
    CHECK(!is_sublattice(even, z2));
    CHECK_THROWS_WITH_AS(lattice_index(even, z2), doctest::Contains("non-integral"),
                         std::domain_error);
}

TEST_CASE("intersection, sum, dual") {
    Lattice z2 = Lattice::standard(2);

    // rotation with cos = 4/5: coincidence sublattice of index 5
    RatMat r(2, 2);
    r(0, 0) = Rat(4, 5); r(0, 1) = Rat(-3, 5);
    r(1, 0) = Rat(3, 5); r(1, 1) = Rat(4, 5);
    Lattice rotated = Lattice::from_basis(r);
    Lattice meet = intersect(z2, rotated);
    CHECK(lattice_index(z2, meet) == 5);

    CHECK(intersect(z2, z2) == z2);

    Lattice two = Lattice::from_integer_basis(im({{2, 0}, {0, 2}}));
    Lattice three = Lattice::from_integer_basis(im({{3, 0}, {0, 3}}));
    Lattice six = Lattice::from_integer_basis(im({{6, 0}, {0, 6}}));
    CHECK(intersect(two, three) == six);
    CHECK(lattice_sum(two, three) == z2);

    for (size_t d = 1; d <= 4; ++d) CHECK(dual(Lattice::standard(d)) == Lattice::standard(d));
    for (int iter = 0; iter < 100; ++iter) {
        Lattice l = random_lattice(3);
        CHECK(dual(dual(l)) == l);
    }
}

TEST_CASE("scaled copy sits inside every sublattice of that index") {
    for (int iter = 0; iter < 40; ++iter) {
        size_t d = 2 + iter % 3;
        Lattice outer = random_lattice(d);
        Int m = rand_int(1, 20);
        Lattice inner = random_sublattice(outer, m);
        REQUIRE(lattice_index(outer, inner) == m);
        // m * outer inside inner, of index m^{d-1}
        RatMat scaled = outer.basis() * Rat(m);
        Lattice m_outer = Lattice::from_basis(scaled);
        CHECK(is_sublattice(inner, m_outer));
        CHECK(lattice_index(inner, m_outer) == pow_int(m, unsigned(d - 1)));
    }
}

TEST_CASE("dual pairs swap indices") {
    for (int iter = 0; iter < 40; ++iter) {
        size_t d = 2 + iter % 2;
        Lattice outer = random_lattice(d);
        Lattice inner = random_sublattice(outer, rand_int(1, 12));
        CHECK(lattice_index(dual(inner), dual(outer)) == lattice_index(outer, inner));
    }
}

TEST_CASE("sum and intersection close the index diamond") {
    for (int iter = 0; iter < 40; ++iter) {
        size_t d = 2 + iter % 2;
        Lattice g0 = random_lattice(d);
        Lattice g1 = random_sublattice(g0, rand_int(1, 8));
        Lattice g2 = random_sublattice(g0, rand_int(1, 8));
        Lattice top = lattice_sum(g1, g2);
        Lattice bottom = intersect(g1, g2);
        Int m1 = lattice_index(top, g1), m2 = lattice_index(top, g2);
        Int n1 = lattice_index(g1, bottom), n2 = lattice_index(g2, bottom);
        CHECK(m1 == n2);
        CHECK(m2 == n1);
    }
}

TEST_CASE("factor group divisors") {
    Lattice z2 = Lattice::standard(2);
    Lattice even = Lattice::from_integer_basis(im({{1, 0}, {1, 2}}));
    CHECK(snf_divisors(z2, even) == std::vector<Int>{Int(1), Int(2)});

    Lattice z3 = Lattice::standard(3);
    Lattice two_z3 = Lattice::from_integer_basis(im({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}));
    CHECK(snf_divisors(z3, two_z3) == std::vector<Int>{Int(2), Int(2), Int(2)});

    // factor groups of a sublattice pair and its swapped duals agree
    for (int iter = 0; iter < 30; ++iter) {
        Lattice outer = random_lattice(3);
        Lattice inner = random_sublattice(outer, rand_int(1, 12));
        CHECK(snf_divisors(outer, inner) == snf_divisors(dual(inner), dual(outer)));
    }
}

TEST_CASE("sublattice enumeration") {
    CHECK(enumerate_sublattices(2, Int(2)).size() == 3);
    for (long m : {1, 2, 3, 4, 5, 12})
        CHECK(enumerate_sublattices(1, Int(m)).size() == 1);
    CHECK(enumerate_sublattices(3, Int(2)).size() == 7);

    // every output is a canonical Hermite form of the right index, no repeats
    auto all = enumerate_sublattices(3, Int(6));
    std::set<std::string> seen;
    for (const auto& h : all) {
        CHECK(is_hnf(h));
        CHECK(h.det() == 6);
        std::string key;
        for (size_t i = 0; i < 3; ++i)
            for (size_t j = 0; j < 3; ++j) key += h(i, j).str() + ",";
        CHECK(seen.insert(key).second);
    }

    CHECK_THROWS_AS(enumerate_sublattices(4, Int(60), 10), resource_cap_error);
    try {
        enumerate_sublattices(4, Int(60), 10);
    } catch (const resource_cap_error& e) {
        CHECK(e.resume_token().find("count=") != std::string::npos);
    }
}

TEST_CASE("commensurability is dimension-bound in exact coordinates") {
    CHECK(commensurate(Lattice::standard(2), random_lattice(2)));
    CHECK(!commensurate(Lattice::standard(2), Lattice::standard(3)));
}

TEST_SUITE_END();
