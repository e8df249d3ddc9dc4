#include <doctest.h>

#include "csl/counting.hpp"
#include "csl/lattice.hpp"
#include "test_util.hpp"

using namespace csl;
using namespace csl::testing;

TEST_SUITE_BEGIN("counting");

TEST_CASE("coefficients printed for the square lattice") {
    CHECK(f_square()(Int(1)) == 1);
    CHECK(f_square()(Int(5)) == 2);
    CHECK(f_square()(Int(65)) == 4);
    CHECK(f_square()(Int(3)) == 0);
    CHECK(f_square()(Int(10)) == 0);
}

TEST_CASE("coefficients for the cubic lattices") {
    CHECK(f_cubic3()(Int(3)) == 4);
    CHECK(f_cubic3()(Int(2)) == 0);
    CHECK(f_cubic3()(Int(15)) == 24);
    CHECK(f_d4()(Int(3)) == 16);
    CHECK(f_d4()(Int(6)) == 0);
    CHECK(f_d4()(Int(9)) == 168);
    CHECK(f_z4()(Int(2)) == 2);
    CHECK(f_z4()(Int(6)) == 32);
    CHECK(f_z4()(Int(4)) == 0);
}

TEST_CASE("coefficients for the modules") {
    CHECK(f_tenfold()(Int(11)) == 4);
    CHECK(f_tenfold()(Int(121)) == 8);
    CHECK(f_tenfold()(Int(7)) == 0);
    CHECK(f_icosahedral()(Int(4)) == 5);
    CHECK(f_icosahedral()(Int(11)) == 24);
    CHECK(f_icosahedral()(Int(36)) == 50);
    CHECK(f_mc()(Int(4)) == 8);
    CHECK(f_mc()(Int(16)) == 32);
    CHECK(f_mc()(Int(5)) == 6);
    CHECK(f_h4()(Int(4)) == 25);
    CHECK(f_h4()(Int(11)) == 288);
    CHECK(f_h4()(Int(20)) == 900);
}

TEST_CASE("sublattice counts") {
    CHECK(f_sublattices(2, Int(12)) == 28);
    CHECK(f_sublattices(2, Int(12)) == sigma1()(Int(12)));
    for (long m : {1, 2, 7, 30}) CHECK(f_sublattices(1, Int(m)) == 1);
    CHECK(f_sublattices(3, Int(2)) == 7);

    for (unsigned n = 1; n <= 4; ++n)
        for (long m = 1; m <= 30; ++m) {
            Int closed = f_sublattices(n, Int(m));
            CHECK(closed == f_sublattices_recursive(n, Int(m)));
            CHECK(closed == count_sublattices_by_enumeration(n, Int(m)));
        }
}

TEST_CASE("hierarchy of sublattice classes") {
    auto h25 = hierarchy_counts(Int(25));
    CHECK(h25.all == 31);
    CHECK(h25.square == 3);
    CHECK(h25.primitive_square == 2);
    CHECK(h25.csl == 2);

    auto h2 = hierarchy_counts(Int(2));
    CHECK(h2.all == 3);
    CHECK(h2.square == 1);
    CHECK(h2.primitive_square == 1);
    CHECK(h2.csl == 0);

    auto h1 = hierarchy_counts(Int(1));
    CHECK((h1.all == 1 && h1.square == 1 && h1.primitive_square == 1 && h1.csl == 1));

    for (long m = 1; m <= 400; ++m) {
        auto rule = hierarchy_counts(Int(m));
        auto oracle = hierarchy_counts_by_enumeration(Int(m));
        CHECK(rule.square == oracle.square);
        CHECK(rule.primitive_square == oracle.primitive_square);
        CHECK(rule.all >= rule.square);
        CHECK(rule.square >= rule.primitive_square);
        if (m % 2 == 1) CHECK(rule.primitive_square >= rule.csl);
    }

    // the square counts are the number of sublattices fixed by the quarter
    // turn; cross-check tiny cases against raw sublattice enumeration
    for (long m : {1, 2, 4, 5, 10}) {
        Int fixed = 0;
        IntMat rot(2, 2);
        rot(0, 1) = -1;
        rot(1, 0) = 1;
        for (const auto& h : enumerate_sublattices(2, Int(m)))
            if (hnf(rot * h) == h) fixed += 1;
        CHECK(fixed == hierarchy_counts(Int(m)).square);
    }
}

TEST_CASE("tables agree with pointwise evaluation") {
    for (const auto* f : {&f_square(), &f_cubic3(), &f_d4(), &f_z4(), &f_tenfold(),
                          &f_icosahedral(), &f_mc(), &f_h4(), &sigma1()}) {
        auto t = f->table(500);
        for (std::uint64_t m = 1; m <= 500; ++m) CHECK(t[m - 1] == (*f)(Int(m)));
    }
}

TEST_CASE("multiplicativity on coprime pairs") {
    for (const auto* f : {&f_square(), &f_cubic3(), &f_d4(), &f_z4(), &f_tenfold(),
                          &f_icosahedral(), &f_mc(), &f_h4(), &sigma1()}) {
        for (long a = 1; a <= 200; ++a)
            for (long b = 1; b <= 200; ++b) {
                if (gcd(Int(a), Int(b)) != 1 || a * b > 200) continue;
                CHECK((*f)(Int(a * b)) == (*f)(Int(a)) * (*f)(Int(b)));
            }
    }
}

TEST_CASE("both routes to the D4 prime powers coincide") {
    for (long p : {3, 5, 7, 11, 13, 37})
        for (unsigned r = 1; r <= 6; ++r)
            CHECK(f_d4().prime_power(Int(p), r) == f_d4_prime_power_by_sum(Int(p), r));
}

TEST_CASE("convolution identities") {
    const std::uint64_t n = 2000;
    auto f3 = SeriesTable::materialize(f_cubic3(), n);
    auto fd4 = SeriesTable::materialize(f_d4(), n);
    CHECK(fd4 == f3.convolve(f3.shifted()));
    CHECK(fd4.at(3) == 16);

    auto fi = SeriesTable::materialize(f_icosahedral(), 100);
    auto fh = SeriesTable::materialize(f_h4(), 100);
    CHECK(fh == fi.convolve(fi.shifted()));

    // the unit series is the convolution identity
    auto u = SeriesTable::unit(n);
    CHECK(f3.convolve(u) == f3);

    // inverse: f * f^{-1} = unit
    auto zi = SeriesTable::zeta(300).inverse(); // Moebius function
    CHECK(SeriesTable::zeta(300).convolve(zi) == SeriesTable::unit(300));
}

TEST_CASE("zeta-function product forms") {
    const std::uint64_t n = 2000;
    // squares indicator: zeta(2s)
    std::vector<Int> sq(n, Int(0));
    for (std::uint64_t k = 1; k * k <= n; ++k) sq[k * k - 1] = 1;
    SeriesTable zeta2s("zeta(2s)", sq);
    // 1 + 2^{-s}
    std::vector<Int> e2(n, Int(0));
    e2[0] = 1;
    e2[1] = 1;
    SeriesTable one_plus_2("1+2^-s", e2);
    // 1 - 2^{1-s}
    std::vector<Int> c2(n, Int(0));
    c2[0] = 1;
    c2[1] = -2;
    SeriesTable one_minus_21(" 1-2^{1-s}", c2);

    // Dedekind zeta of the Gaussian field via the hierarchy rule
    std::vector<Int> zk(n);
    for (std::uint64_t m = 1; m <= n; ++m) zk[m - 1] = hierarchy_counts(Int(m)).square;
    SeriesTable zetaK("zetaK", zk);

    // square-lattice CSL series: (1+2^{-s})^{-1} zetaK / zeta(2s)
    auto lhs = SeriesTable::materialize(f_square(), n);
    auto rhs = zetaK.convolve(one_plus_2.inverse()).convolve(zeta2s.inverse());
    CHECK(lhs == rhs);

    // cubic CSL series: (1-2^{1-s})/(1+2^{-s}) zeta zeta(s-1) / zeta(2s)
    auto lhs3 = SeriesTable::materialize(f_cubic3(), n);
    auto rhs3 = one_minus_21.convolve(one_plus_2.inverse())
                    .convolve(SeriesTable::zeta(n))
                    .convolve(SeriesTable::zeta_shifted(n))
                    .convolve(zeta2s.inverse());
    CHECK(lhs3 == rhs3);

    // the primitive square series is zetaK / zeta(2s) on the nose
    std::vector<Int> prim(n);
    for (std::uint64_t m = 1; m <= n; ++m) prim[m - 1] = hierarchy_counts(Int(m)).primitive_square;
    SeriesTable prim_table("primitive", prim);
    CHECK(prim_table.convolve(zeta2s) == zetaK);
}

TEST_CASE("summatory sums approach the leading term") {
    auto s1 = sigma1().table(20'000);
    double dev = summatory_deviation(s1, 3.14159265358979 * 3.14159265358979 / 12.0, 2.0);
    CHECK(dev < 0.01);
}

TEST_SUITE_END();
