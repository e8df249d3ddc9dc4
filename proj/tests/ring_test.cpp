#include <doctest.h>

#include "csl/prime_split.hpp"
#include "test_util.hpp"

using namespace csl;
using csl::testing::rand_int;

namespace {

GaussInt gi(long a, long b) { return {Int(a), Int(b)}; }
GoldenInt go(long a, long b) { return {Int(a), Int(b)}; }

} // namespace

TEST_SUITE_BEGIN("ring");

TEST_CASE("gauss gcd examples") {
    // coprime factors of 5
    CHECK(unit_normalize(gauss_gcd(gi(2, 1), gi(2, -1))).first == gi(1, 0));
    // 5 = (2+i)(2-i)
    CHECK(unit_normalize(gauss_gcd(gi(5, 0), gi(2, 1))).first == gi(2, 1));
    // gcd with zero: canonical associate of the other argument
    CHECK(unit_normalize(gauss_gcd(gi(0, 0), gi(3, 4))).first == gi(3, 4));
    CHECK_THROWS_AS(gauss_gcd(gi(0, 0), gi(0, 0)), std::domain_error);
}

TEST_CASE("gauss gcd divides both arguments and dominates common divisors") {
    for (int iter = 0; iter < 60; ++iter) {
        GaussInt x = gi(rand_int(-6, 6).convert_to<long>(), rand_int(-6, 6).convert_to<long>());
        GaussInt y = gi(rand_int(-6, 6).convert_to<long>(), rand_int(-6, 6).convert_to<long>());
        if (x.is_zero() && y.is_zero()) continue;
        GaussInt g = gauss_gcd(x, y), q;
        CHECK((x.is_zero() || x.divides_into(g, q)));
        CHECK((y.is_zero() || y.divides_into(g, q)));
        // every common divisor divides g: exhaust elements of small norm
        for (long a = -8; a <= 8; ++a)
            for (long b = -8; b <= 8; ++b) {
                GaussInt d = gi(a, b);
                if (d.is_zero()) continue;
                bool div_x = x.is_zero() || x.divides_into(d, q);
                bool div_y = y.is_zero() || y.divides_into(d, q);
                if (div_x && div_y) CHECK(g.divides_into(d, q));
            }
    }
}

TEST_CASE("norms are multiplicative") {
    for (int iter = 0; iter < 10'000; ++iter) {
        long a = rand_int(-30, 30).convert_to<long>(), b = rand_int(-30, 30).convert_to<long>();
        long c = rand_int(-30, 30).convert_to<long>(), d = rand_int(-30, 30).convert_to<long>();
        CHECK((gi(a, b) * gi(c, d)).norm() == gi(a, b).norm() * gi(c, d).norm());
        CHECK((go(a, b) * go(c, d)).norm() == go(a, b).norm() * go(c, d).norm());
    }
    for (int iter = 0; iter < 2'000; ++iter) {
        CycloInt x(rand_int(-5, 5), rand_int(-5, 5), rand_int(-5, 5), rand_int(-5, 5));
        CycloInt y(rand_int(-5, 5), rand_int(-5, 5), rand_int(-5, 5), rand_int(-5, 5));
        CHECK((x * y).norm() == x.norm() * y.norm());
    }
}

TEST_CASE("cyclotomic ring identities") {
    const CycloInt xi(Int(0), Int(1), Int(0), Int(0));
    // x^5 = 1 and 1 + x + x^2 + x^3 + x^4 = 0
    CycloInt x5 = xi * xi * xi * xi * xi;
    CHECK(x5 == CycloInt(1L));
    CycloInt sum = CycloInt(1L) + xi + xi * xi + xi * xi * xi;
    CHECK(sum == -(xi * xi * xi * xi));
    // conjugation is a ring automorphism
    for (int iter = 0; iter < 200; ++iter) {
        CycloInt a(rand_int(-4, 4), rand_int(-4, 4), rand_int(-4, 4), rand_int(-4, 4));
        CycloInt b(rand_int(-4, 4), rand_int(-4, 4), rand_int(-4, 4), rand_int(-4, 4));
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK((a + b).conj() == a.conj() + b.conj());
    }
    // tau embeds as -(x^2 + x^3)
    GoldenInt tau = golden_tau;
    CHECK(CycloInt::from_golden(tau * tau) == CycloInt::from_golden(tau) * CycloInt::from_golden(tau));
}

TEST_CASE("prime splitting by residue class") {
    auto s5 = split_prime_gaussian(Int(5));
    CHECK(s5.kind == SplitKind::split);
    REQUIRE(s5.factors.size() == 2);
    CHECK(s5.factors[0].norm() == 5);
    CHECK(s5.factors[1].norm() == 5);
    CHECK(s5.factors[0] != s5.factors[1]);

    auto s2 = split_prime_gaussian(Int(2));
    CHECK(s2.kind == SplitKind::ramified);
    CHECK(s2.factors == std::vector<GaussInt>{gi(1, 1), gi(1, 1)});

    CHECK(split_prime_gaussian(Int(3)).kind == SplitKind::inert);
    CHECK(split_prime_gaussian(Int(3)).factors == std::vector<GaussInt>{gi(3, 0)});

    auto g11 = split_prime_golden(Int(11));
    CHECK(g11.kind == SplitKind::split);
    REQUIRE(g11.factors.size() == 2);
    CHECK(abs(g11.factors[0].norm()) == 11);
    CHECK(abs(g11.factors[1].norm()) == 11);
    CHECK(g11.factors[0] == go(3, 1)); // N(3 + tau) = 9 + 3 - 1

    CHECK(split_prime_golden(Int(2)).kind == SplitKind::inert);
    CHECK(split_prime_golden(Int(5)).kind == SplitKind::ramified);

    auto c7 = split_prime_cyclotomic(Int(7));
    CHECK(c7.kind == SplitKind::inert);
    CHECK(c7.factors.size() == 1);

    auto c11 = split_prime_cyclotomic(Int(11));
    CHECK(c11.kind == SplitKind::split);
    REQUIRE(c11.factors.size() == 4);
    for (const auto& f : c11.factors) CHECK(f.norm() == 11);

    auto c19 = split_prime_cyclotomic(Int(19));
    CHECK(c19.kind == SplitKind::split);
    REQUIRE(c19.factors.size() == 2);
    for (const auto& f : c19.factors) CHECK(f.norm() == 19 * 19);

    auto c5 = split_prime_cyclotomic(Int(5));
    CHECK(c5.kind == SplitKind::ramified);
    CHECK(c5.factors.size() == 4);

    CHECK_THROWS_AS(split_prime_gaussian(Int(6)), std::domain_error);
    CHECK_THROWS_AS(split_prime_golden(Int(1)), std::domain_error);
}

TEST_CASE("split factors multiply back to p times a unit") {
    for (long p : {2, 3, 5, 7, 11, 13, 17, 19, 29, 31, 41}) {
        {
            auto s = split_prime_gaussian(Int(p));
            GaussInt prod = gi(1, 0);
            for (const auto& f : s.factors) prod = prod * f;
            GaussInt u;
            REQUIRE(gi(p, 0).divides_into(prod, u));
            CHECK(u.is_unit());
        }
        {
            auto s = split_prime_golden(Int(p));
            GoldenInt prod = go(1, 0);
            for (const auto& f : s.factors) prod = prod * f;
            GoldenInt u;
            REQUIRE(go(p, 0).divides_into(prod, u));
            CHECK(u.is_unit());
        }
        {
            auto s = split_prime_cyclotomic(Int(p));
            CycloInt prod(1L);
            for (const auto& f : s.factors) prod = prod * f;
            CycloInt u;
            REQUIRE(CycloInt(p).divides_into(prod, u));
            CHECK(u.is_unit());
        }
    }
}

TEST_CASE("factor_element named values") {
    // 4 + 3i = -i (1 + 2i)^2, with 1 + 2i the first-quadrant prime above 5
    auto f = factor_element(gi(4, 3));
    REQUIRE(f.primes.size() == 1);
    CHECK(f.primes[0].first == gi(1, 2));
    CHECK(f.primes[0].second == 2);
    CHECK(f.unit == gi(0, -1));

    // 5 = unit * (2 + tau)^2 in the golden integers
    auto g = factor_element(go(5, 0));
    REQUIRE(g.primes.size() == 1);
    CHECK(g.primes[0].first == go(2, 1));
    CHECK(g.primes[0].second == 2);
    CHECK(g.unit == go(2, -1)); // tau^{-2}

    // 2 stays prime in the cyclotomic ring
    auto c = factor_element(CycloInt(2L));
    REQUIRE(c.primes.size() == 1);
    CHECK(c.primes[0].first == CycloInt(2L));
    CHECK(c.primes[0].second == 1);

    CHECK_THROWS_AS(factor_element(gi(0, 0)), std::domain_error);
}

template <typename E>
static void check_roundtrip(const Factorization<E>& f, const E& x) {
    E prod = f.unit;
    for (const auto& [w, e] : f.primes)
        for (unsigned k = 0; k < e; ++k) prod = prod * w;
    CHECK(prod == x);
}

TEST_CASE("factorization reconstructs the element") {
    for (long a = -12; a <= 12; ++a)
        for (long b = -12; b <= 12; ++b) {
            if (a == 0 && b == 0) continue;
            check_roundtrip(factor_element(gi(a, b)), gi(a, b));
            if (abs(go(a, b).norm()) <= 10'000)
                check_roundtrip(factor_element(go(a, b)), go(a, b));
        }
    for (int iter = 0; iter < 300; ++iter) {
        CycloInt x(rand_int(-3, 3), rand_int(-3, 3), rand_int(-3, 3), rand_int(-3, 3));
        if (x.is_zero()) continue;
        check_roundtrip(factor_element(x), x);
    }
}

TEST_CASE("canonical associates") {
    // one associate per class, first quadrant for the Gaussian ring
    auto [c1, u1] = unit_normalize(gi(-3, -4));
    CHECK(c1 == gi(3, 4));
    CHECK(u1 * c1 == gi(-3, -4));
    for (int iter = 0; iter < 200; ++iter) {
        GaussInt x = gi(rand_int(-9, 9).convert_to<long>(), rand_int(-9, 9).convert_to<long>());
        if (x.is_zero()) continue;
        auto [c, u] = unit_normalize(x);
        CHECK(c.re() > 0);
        CHECK(c.im() >= 0);
        CHECK(u * c == x);
    }

    // golden units normalize to 1
    GoldenInt u = -(golden_tau * (go(1, 0) + golden_tau)); // -tau (1 + tau) = -tau^3
    auto [cg, ug] = unit_normalize(u);
    CHECK(cg == go(1, 0));
    CHECK(ug * cg == u);

    // associates share their canonical representative
    GoldenInt x = go(3, 1);
    GoldenInt y = golden_tau * golden_tau * x;
    CHECK(unit_normalize(x).first == unit_normalize(y).first);

    // totally positive and trace-minimal
    for (int iter = 0; iter < 200; ++iter) {
        GoldenInt z = go(rand_int(-9, 9).convert_to<long>(), rand_int(-9, 9).convert_to<long>());
        if (z.is_zero()) continue;
        auto [c, uu] = unit_normalize(z);
        CHECK(c.totally_positive());
        CHECK(uu * c == z);
        GoldenInt tsq = go(1, 1), tsqi = go(2, -1);
        CHECK((c * tsq).trace() >= c.trace());
        CHECK((c * tsqi).trace() >= c.trace());
    }

    // cyclotomic: lexicographically least over the ten torsion associates
    for (int iter = 0; iter < 100; ++iter) {
        CycloInt x(rand_int(-4, 4), rand_int(-4, 4), rand_int(-4, 4), rand_int(-4, 4));
        if (x.is_zero()) continue;
        auto [c, u2] = unit_normalize(x);
        CHECK(u2 * c == x);
        CHECK(!(x < c) || x == c); // canonical is minimal among associates incl. x
    }

    CHECK_THROWS_AS(unit_normalize(go(0, 0)), std::domain_error);
}

TEST_CASE("golden Euclidean division terminates with smaller norm") {
    for (int iter = 0; iter < 500; ++iter) {
        GoldenInt x = go(rand_int(-50, 50).convert_to<long>(), rand_int(-50, 50).convert_to<long>());
        GoldenInt y = go(rand_int(-20, 20).convert_to<long>(), rand_int(-20, 20).convert_to<long>());
        if (y.is_zero()) continue;
        auto [q, r] = x.divmod(y);
        CHECK(x == y * q + r);
        CHECK(abs(r.norm()) < abs(y.norm()));
    }
}

TEST_CASE("cyclotomic Euclidean division terminates with smaller norm") {
    for (int iter = 0; iter < 200; ++iter) {
        CycloInt x(rand_int(-6, 6), rand_int(-6, 6), rand_int(-6, 6), rand_int(-6, 6));
        CycloInt y(rand_int(-3, 3), rand_int(-3, 3), rand_int(-3, 3), rand_int(-3, 3));
        if (y.is_zero()) continue;
        auto [q, r] = x.divmod(y);
        CHECK(x == y * q + r);
        CHECK(r.norm() < y.norm());
    }
}

TEST_SUITE_END();
