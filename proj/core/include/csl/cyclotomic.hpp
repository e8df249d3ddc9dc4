#pragma once

#include <array>
#include <stdexcept>
#include <utility>

#include "csl/golden.hpp"
#include "csl/numeric.hpp"

namespace csl {

/// Element c0 + c1 x + c2 x^2 + c3 x^3 of Z[x], x = exp(2 pi i / 5).
/// Arithmetic uses x^4 = -(1 + x + x^2 + x^3) and x^5 = 1.
class CycloInt {
public:
    CycloInt() : c_{0, 0, 0, 0} {}
    CycloInt(Int c0, Int c1, Int c2, Int c3)
        : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}
    explicit CycloInt(long n) : c_{Int(n), 0, 0, 0} {}

    const Int& operator[](int k) const { return c_[k]; }
    const std::array<Int, 4>& coeffs() const { return c_; }

    bool is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }
    bool is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

    CycloInt operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3]}; }
    CycloInt operator+(const CycloInt& o) const {
        return {c_[0] + o.c_[0], c_[1] + o.c_[1], c_[2] + o.c_[2], c_[3] + o.c_[3]};
    }
    CycloInt operator-(const CycloInt& o) const {
        return {c_[0] - o.c_[0], c_[1] - o.c_[1], c_[2] - o.c_[2], c_[3] - o.c_[3]};
    }
    CycloInt operator*(const CycloInt& o) const;

    bool operator==(const CycloInt& o) const { return c_ == o.c_; }
    bool operator!=(const CycloInt& o) const { return !(*this == o); }

    // lexicographic on the coefficient vector; order of convenience, not of size
    bool operator<(const CycloInt& o) const { return c_ < o.c_; }

    /// Galois map x -> x^k for k in {1, 2, 3, 4}; k = 4 is complex conjugation.
    CycloInt galois(int k) const;
    CycloInt conj() const { return galois(4); }

    /// x * conj(x), a totally positive element of the real subfield Z[tau].
    GoldenInt abs_squared() const;

    /// Norm down to Z (product of all four Galois conjugates); always >= 0.
    Int norm() const { return abs_squared().norm(); }

    bool is_unit() const { return norm() == 1; }

    bool divides_into(const CycloInt& y, CycloInt& q) const;
    std::pair<CycloInt, CycloInt> divmod(const CycloInt& y) const;

    /// Embeds Z[tau]: tau = -(x^2 + x^3).
    static CycloInt from_golden(const GoldenInt& g) {
        return {g.a(), Int(0), -g.b(), -g.b()};
    }
    bool is_golden() const { return c_[1] == 0 && c_[2] == c_[3]; }
    GoldenInt to_golden() const {
        if (!is_golden()) throw std::domain_error("CycloInt: not in the real subfield");
        return {c_[0], -c_[2]};
    }

private:
    std::array<Int, 4> c_;
};

CycloInt cyclo_gcd(CycloInt x, CycloInt y);

/// Canonical associate under the ten torsion units +-x^j: the lexicographically
/// least coefficient vector. Powers of the golden unit tau are deliberately left
/// in place; full unit normalization in Z[x] would need logarithmic-embedding
/// reduction and nothing downstream requires it.
std::pair<CycloInt, CycloInt> unit_normalize(const CycloInt& x);

} // namespace csl
