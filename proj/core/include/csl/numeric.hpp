#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace csl {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int numerator(const Rat& x) { return boost::multiprecision::numerator(x); }
inline Int denominator(const Rat& x) { return boost::multiprecision::denominator(x); }

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }
inline Int abs(const Int& a) { return boost::multiprecision::abs(a); }

// floor(a / b) for arbitrary signs, b != 0
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// nearest integer to a / b, ties toward +infinity
inline Int round_div(const Int& a, const Int& b) {
    Int bb = b < 0 ? Int(-b) : b;
    Int aa = b < 0 ? Int(-a) : a;
    return floor_div(2 * aa + bb, 2 * bb);
}

inline Int isqrt(const Int& n) {
    if (n < 0) throw std::domain_error("isqrt: negative argument");
    return boost::multiprecision::sqrt(n);
}

// exact integer square root, or false if n is not a perfect square
inline bool perfect_square(const Int& n, Int& root) {
    if (n < 0) return false;
    root = isqrt(n);
    return root * root == n;
}

inline Int pow_int(Int base, unsigned exp) {
    Int r = 1;
    while (exp) {
        if (exp & 1) r *= base;
        base *= base;
        exp >>= 1;
    }
    return r;
}

bool is_prime(const Int& n);

// prime -> exponent, by trial division (inputs here stay small)
std::map<Int, unsigned> factor_integer(Int n);

// all positive divisors, ascending
std::vector<Int> divisors(const Int& n);

} // namespace csl
