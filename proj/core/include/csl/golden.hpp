#pragma once

#include <stdexcept>
#include <utility>

#include "csl/numeric.hpp"

namespace csl {

namespace detail {
// sign of a + b*sqrt(5), exactly
inline int sign_plus_sqrt5(const Int& a, const Int& b) {
    if (a >= 0 && b >= 0) return (a == 0 && b == 0) ? 0 : 1;
    if (a <= 0 && b <= 0) return -1;
    // opposite signs: compare a^2 against 5 b^2
    Int a2 = a * a, b25 = 5 * b * b;
    if (a2 == b25) return 0; // impossible for integers unless both zero, kept for safety
    if (a > 0) return a2 > b25 ? 1 : -1;
    return a2 > b25 ? -1 : 1;
}
} // namespace detail

/// Element a + b*tau of Z[tau], tau the golden ratio (tau^2 = tau + 1).
class GoldenInt {
public:
    GoldenInt() : a_(0), b_(0) {}
    GoldenInt(Int a, Int b) : a_(std::move(a)), b_(std::move(b)) {}
    explicit GoldenInt(long n) : a_(n), b_(0) {}

    const Int& a() const { return a_; }
    const Int& b() const { return b_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    // field norm, may be negative
    Int norm() const { return a_ * a_ + a_ * b_ - b_ * b_; }
    bool is_unit() const { Int n = norm(); return n == 1 || n == -1; }

    // algebraic conjugate: tau -> 1 - tau
    GoldenInt conj() const { return {a_ + b_, -b_}; }

    Int trace() const { return 2 * a_ + b_; }

    GoldenInt operator-() const { return {-a_, -b_}; }
    GoldenInt operator+(const GoldenInt& o) const { return {a_ + o.a_, b_ + o.b_}; }
    GoldenInt operator-(const GoldenInt& o) const { return {a_ - o.a_, b_ - o.b_}; }
    GoldenInt operator*(const GoldenInt& o) const {
        // (a + b tau)(c + d tau) = ac + bd + (ad + bc + bd) tau
        return {a_ * o.a_ + b_ * o.b_, a_ * o.b_ + b_ * o.a_ + b_ * o.b_};
    }

    bool operator==(const GoldenInt& o) const { return a_ == o.a_ && b_ == o.b_; }
    bool operator!=(const GoldenInt& o) const { return !(*this == o); }

    // sign under the embedding tau -> (1 + sqrt 5)/2
    int sign_primary() const { return detail::sign_plus_sqrt5(2 * a_ + b_, b_); }
    // sign under the conjugate embedding
    int sign_conjugate() const { return detail::sign_plus_sqrt5(2 * a_ + b_, -b_); }
    bool totally_positive() const { return sign_primary() > 0 && sign_conjugate() > 0; }

    bool divides_into(const GoldenInt& y, GoldenInt& q) const {
        if (y.is_zero()) return false;
        GoldenInt p = *this * y.conj();
        Int n = y.norm();
        if (p.a_ % n != 0 || p.b_ % n != 0) return false;
        q = GoldenInt(p.a_ / n, p.b_ / n);
        return true;
    }

    // Euclidean division; Z[tau] is norm-Euclidean, a small candidate search
    // around the rounded quotient always finds |N(r)| < |N(y)|.
    std::pair<GoldenInt, GoldenInt> divmod(const GoldenInt& y) const {
        if (y.is_zero()) throw std::domain_error("GoldenInt::divmod: division by zero");
        GoldenInt p = *this * y.conj();
        Int n = y.norm();
        Int qa = round_div(p.a_, n), qb = round_div(p.b_, n);
        Int ny = abs(n);
        GoldenInt best_q, best_r;
        Int best = -1;
        for (int da = -1; da <= 1; ++da) {
            for (int db = -1; db <= 1; ++db) {
                GoldenInt q(qa + da, qb + db);
                GoldenInt r = *this - y * q;
                Int nr = abs(r.norm());
                if (best < 0 || nr < best) {
                    best = nr;
                    best_q = q;
                    best_r = r;
                }
            }
        }
        if (best >= ny) throw std::logic_error("GoldenInt::divmod: Euclidean step failed");
        return {best_q, best_r};
    }

private:
    Int a_, b_;
};

inline const GoldenInt golden_tau{Int(0), Int(1)};

inline GoldenInt golden_gcd(GoldenInt x, GoldenInt y) {
    if (x.is_zero() && y.is_zero())
        throw std::domain_error("golden_gcd: gcd(0, 0) is undefined");
    while (!y.is_zero()) {
        GoldenInt r = x.divmod(y).second;
        x = y;
        y = r;
    }
    return x;
}

/// Canonical associate: totally positive, minimal trace, ties broken by
/// minimal rational part. Returns (canonical, unit) with x = unit * canonical.
std::pair<GoldenInt, GoldenInt> unit_normalize(const GoldenInt& x);

/// Element of Q(tau) with rational coordinates.
class GoldenRat {
public:
    GoldenRat() : a_(0), b_(0) {}
    GoldenRat(Rat a, Rat b) : a_(std::move(a)), b_(std::move(b)) {}
    GoldenRat(const GoldenInt& x) : a_(x.a()), b_(x.b()) {}
    explicit GoldenRat(long n) : a_(n), b_(0) {}

    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    Rat norm() const { return a_ * a_ + a_ * b_ - b_ * b_; }
    GoldenRat conj() const { return {a_ + b_, -b_}; }

    GoldenRat operator-() const { return {-a_, -b_}; }
    GoldenRat operator+(const GoldenRat& o) const { return {a_ + o.a_, b_ + o.b_}; }
    GoldenRat operator-(const GoldenRat& o) const { return {a_ - o.a_, b_ - o.b_}; }
    GoldenRat operator*(const GoldenRat& o) const {
        return {a_ * o.a_ + b_ * o.b_, a_ * o.b_ + b_ * o.a_ + b_ * o.b_};
    }
    GoldenRat inverse() const {
        Rat n = norm();
        if (n == 0) throw std::domain_error("GoldenRat::inverse: zero divisor");
        GoldenRat c = conj();
        return {c.a_ / n, c.b_ / n};
    }
    GoldenRat operator/(const GoldenRat& o) const { return *this * o.inverse(); }

    bool operator==(const GoldenRat& o) const { return a_ == o.a_ && b_ == o.b_; }
    bool operator!=(const GoldenRat& o) const { return !(*this == o); }

    bool is_integral() const { return denominator(a_) == 1 && denominator(b_) == 1; }
    GoldenInt to_integer() const {
        if (!is_integral()) throw std::domain_error("GoldenRat: not an algebraic integer");
        return {numerator(a_), numerator(b_)};
    }

    int sign_primary() const {
        Int num = 2 * numerator(a_) * denominator(b_) + numerator(b_) * denominator(a_);
        Int s5 = numerator(b_) * denominator(a_);
        return detail::sign_plus_sqrt5(num, s5);
    }

private:
    Rat a_, b_;
};

} // namespace csl
