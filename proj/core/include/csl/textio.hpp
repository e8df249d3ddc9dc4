#pragma once

#include <string>

#include "csl/cyclotomic.hpp"
#include "csl/gaussian.hpp"
#include "csl/golden.hpp"
#include "csl/matrix.hpp"
#include "csl/quaternion.hpp"

namespace csl {

// Text forms used by the command line and fixtures.  All parsers are
// whitespace-insensitive and round-trip exactly with the printers.
//   rationals    "p/q" or "p"
//   gaussian     "a+bi"            e.g. "4+3i", "-i", "7"
//   golden       "a+bt"            t is the golden ratio, e.g. "3+t", "-2t"
//   cyclotomic   "c0+c1*x+c2*x^2+c3*x^3"
//   matrix       rows separated by ';', entries by ','    "4/5,-3/5;3/5,4/5"
//   quaternion   "(k,l,m,n)" with integer or golden components

Rat parse_rational(const std::string& text);
std::string format_rational(const Rat& v);

GaussInt parse_gauss(const std::string& text);
std::string format_gauss(const GaussInt& v);

GoldenInt parse_golden(const std::string& text);
std::string format_golden(const GoldenInt& v);

GoldenRat parse_golden_rat(const std::string& text);
std::string format_golden_rat(const GoldenRat& v);

CycloInt parse_cyclo(const std::string& text);
std::string format_cyclo(const CycloInt& v);

RatMat parse_matrix(const std::string& text);
std::string format_matrix(const RatMat& m);
IntMat parse_int_matrix(const std::string& text);
std::string format_matrix(const IntMat& m);

Mat<GoldenRat> parse_golden_matrix(const std::string& text);
std::string format_golden_matrix(const Mat<GoldenRat>& m);

QuatZ parse_quaternion(const std::string& text);
std::string format_quaternion(const QuatZ& q);
QuatG parse_golden_quaternion(const std::string& text);
std::string format_golden_quaternion(const QuatG& q);

} // namespace csl
