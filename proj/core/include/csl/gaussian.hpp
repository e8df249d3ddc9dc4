#pragma once

#include <stdexcept>
#include <utility>

#include "csl/numeric.hpp"

namespace csl {

/// Element a + b*i of the ring Z[i].
class GaussInt {
public:
    GaussInt() : re_(0), im_(0) {}
    GaussInt(Int re, Int im) : re_(std::move(re)), im_(std::move(im)) {}
    explicit GaussInt(long n) : re_(n), im_(0) {}

    const Int& re() const { return re_; }
    const Int& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }

    Int norm() const { return re_ * re_ + im_ * im_; }
    bool is_unit() const { return norm() == 1; }

    GaussInt conj() const { return {re_, -im_}; }

    GaussInt operator-() const { return {-re_, -im_}; }
    GaussInt operator+(const GaussInt& o) const { return {re_ + o.re_, im_ + o.im_}; }
    GaussInt operator-(const GaussInt& o) const { return {re_ - o.re_, im_ - o.im_}; }
    GaussInt operator*(const GaussInt& o) const {
        return {re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_};
    }

    bool operator==(const GaussInt& o) const { return re_ == o.re_ && im_ == o.im_; }
    bool operator!=(const GaussInt& o) const { return !(*this == o); }

    // Euclidean division by rounding x * conj(y) / norm(y); |N(r)| <= N(y)/2
    std::pair<GaussInt, GaussInt> divmod(const GaussInt& y) const {
        if (y.is_zero()) throw std::domain_error("GaussInt::divmod: division by zero");
        GaussInt p = *this * y.conj();
        Int n = y.norm();
        GaussInt q(round_div(p.re_, n), round_div(p.im_, n));
        return {q, *this - y * q};
    }

    // true iff y divides *this exactly; quotient written to q
    bool divides_into(const GaussInt& y, GaussInt& q) const {
        if (y.is_zero()) return false;
        GaussInt p = *this * y.conj();
        Int n = y.norm();
        if (p.re_ % n != 0 || p.im_ % n != 0) return false;
        q = GaussInt(p.re_ / n, p.im_ / n);
        return true;
    }

private:
    Int re_, im_;
};

inline GaussInt gauss_gcd(GaussInt x, GaussInt y) {
    if (x.is_zero() && y.is_zero())
        throw std::domain_error("gauss_gcd: gcd(0, 0) is undefined");
    while (!y.is_zero()) {
        GaussInt r = x.divmod(y).second;
        x = y;
        y = r;
    }
    return x;
}

/// Canonical associate: the unique one of {x, ix, -x, -ix} with re > 0, im >= 0.
/// Returns (canonical, unit) with x = unit * canonical.
inline std::pair<GaussInt, GaussInt> unit_normalize(const GaussInt& x) {
    if (x.is_zero()) throw std::domain_error("unit_normalize: zero has no associate class");
    static const GaussInt units[4] = {GaussInt(Int(1), Int(0)), GaussInt(Int(0), Int(1)),
                                      GaussInt(Int(-1), Int(0)), GaussInt(Int(0), Int(-1))};
    for (const GaussInt& u : units) {
        GaussInt c = x * u;
        if (c.re() > 0 && c.im() >= 0) {
            // x = u^{-1} * c, and u^{-1} = conj(u) for the fourth roots of unity
            return {c, u.conj()};
        }
    }
    throw std::logic_error("unit_normalize: no first-quadrant associate found");
}

} // namespace csl
