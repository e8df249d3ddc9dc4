#include <doctest.h>

#include "csl/textio.hpp"
#include "test_util.hpp"

using namespace csl;
using namespace csl::testing;

TEST_SUITE_BEGIN("textio");

TEST_CASE("scalar forms") {
    CHECK(parse_rational("4/5") == Rat(4, 5));
    CHECK(parse_rational(" -3 / 7 ") == Rat(-3, 7));
    CHECK(format_rational(Rat(-3, 7)) == "-3/7");
    CHECK(format_rational(Rat(6)) == "6");

    CHECK(parse_gauss("4+3i") == GaussInt(Int(4), Int(3)));
    CHECK(parse_gauss("-i") == GaussInt(Int(0), Int(-1)));
    CHECK(parse_gauss(" 7 ") == GaussInt(Int(7), Int(0)));
    CHECK(parse_gauss("2-3i") == GaussInt(Int(2), Int(-3)));
    CHECK(format_gauss(GaussInt(Int(2), Int(-3))) == "2-3i");
    CHECK(format_gauss(GaussInt(Int(0), Int(1))) == "i");

    CHECK(parse_golden("3+t") == GoldenInt(Int(3), Int(1)));
    CHECK(parse_golden("-2t") == GoldenInt(Int(0), Int(-2)));
    CHECK(parse_golden("5") == GoldenInt(Int(5), Int(0)));
    CHECK(format_golden(GoldenInt(Int(3), Int(-1))) == "3-t");

    CHECK(parse_cyclo("2+x") == CycloInt(Int(2), Int(1), Int(0), Int(0)));
    CHECK(parse_cyclo("1-2*x+x^3") == CycloInt(Int(1), Int(-2), Int(0), Int(1)));
    CHECK(parse_cyclo("x^2") == CycloInt(Int(0), Int(0), Int(1), Int(0)));
    // x^4 reduces through the minimal polynomial
    CHECK(parse_cyclo("2+x^4") == CycloInt(Int(1), Int(-1), Int(-1), Int(-1)));
    CHECK(format_cyclo(CycloInt(Int(1), Int(-2), Int(0), Int(1))) == "1-2*x+x^3");

    CHECK_THROWS_AS(parse_rational("4/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_gauss("4+3j"), std::invalid_argument);
    CHECK_THROWS_AS(parse_cyclo("x^9"), std::invalid_argument);
    CHECK_THROWS_AS(parse_golden(""), std::invalid_argument);
}

TEST_CASE("matrix forms") {
    RatMat m = parse_matrix("4/5,-3/5;3/5,4/5");
    CHECK(m(0, 0) == Rat(4, 5));
    CHECK(m(1, 0) == Rat(3, 5));
    CHECK(format_matrix(m) == "4/5,-3/5;3/5,4/5");

    CHECK_THROWS_AS(parse_matrix("1,2;3"), std::invalid_argument);

    auto g = parse_golden_matrix("1,0;t,1/2+1/2t");
    CHECK(g(1, 0) == GoldenRat(Rat(0), Rat(1)));
    CHECK(g(1, 1) == GoldenRat(Rat(1, 2), Rat(1, 2)));
    CHECK(format_golden_matrix(g) == "1,0;t,1/2+1/2t");
}

TEST_CASE("quaternion forms") {
    CHECK(parse_quaternion("(0,1,1,1)") == QuatZ{Int(0), Int(1), Int(1), Int(1)});
    CHECK(format_quaternion(QuatZ{Int(0), Int(-1), Int(2), Int(3)}) == "(0,-1,2,3)");
    auto g = parse_golden_quaternion("(1/2+1/2t,1/2,1/2-1/2t,0)");
    CHECK(g.w == GoldenRat(Rat(1, 2), Rat(1, 2)));
    CHECK(format_golden_quaternion(g) == "(1/2+1/2t,1/2,1/2-1/2t,0)");
    CHECK_THROWS_AS(parse_quaternion("(1,2,3)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_quaternion("(1/2,0,0,0)"), std::invalid_argument);
}

TEST_CASE("round trips hold on random values") {
    for (int iter = 0; iter < 500; ++iter) {
        GaussInt x(rand_int(-99, 99), rand_int(-99, 99));
        CHECK(parse_gauss(format_gauss(x)) == x);
        GoldenInt y(rand_int(-99, 99), rand_int(-99, 99));
        CHECK(parse_golden(format_golden(y)) == y);
        CycloInt c(rand_int(-20, 20), rand_int(-20, 20), rand_int(-20, 20), rand_int(-20, 20));
        CHECK(parse_cyclo(format_cyclo(c)) == c);
        GoldenRat gr(Rat(rand_int(-30, 30), rand_int(1, 9)), Rat(rand_int(-30, 30), rand_int(1, 9)));
        CHECK(parse_golden_rat(format_golden_rat(gr)) == gr);
    }
    for (int iter = 0; iter < 50; ++iter) {
        RatMat m(3, 3);
        for (size_t i = 0; i < 3; ++i)
            for (size_t j = 0; j < 3; ++j) m(i, j) = Rat(rand_int(-20, 20), rand_int(1, 7));
        CHECK(parse_matrix(format_matrix(m)) == m);
    }
}

TEST_SUITE_END();
