#pragma once

#include <array>
#include <optional>
#include <vector>

#include "csl/golden.hpp"
#include "csl/matrix.hpp"
#include "csl/numeric.hpp"

namespace csl {

/// Quaternion w + x i + y j + z k over an exact component type.
template <typename T>
struct Quat {
    T w{}, x{}, y{}, z{};

    Quat() = default;
    Quat(T w_, T x_, T y_, T z_)
        : w(std::move(w_)), x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}

    bool is_zero() const { return w == T(0) && x == T(0) && y == T(0) && z == T(0); }

    /// reduced norm |q|^2, multiplicative over the Hamilton product
    T norm() const { return w * w + x * x + y * y + z * z; }

    Quat conj() const { return {w, T(0) - x, T(0) - y, T(0) - z}; }
    Quat operator-() const { return {T(0) - w, T(0) - x, T(0) - y, T(0) - z}; }

    Quat operator+(const Quat& o) const { return {w + o.w, x + o.x, y + o.y, z + o.z}; }
    Quat operator-(const Quat& o) const { return {w - o.w, x - o.x, y - o.y, z - o.z}; }

    Quat operator*(const Quat& o) const {
        return {w * o.w - x * o.x - y * o.y - z * o.z,
                w * o.x + x * o.w + y * o.z - z * o.y,
                w * o.y + y * o.w + z * o.x - x * o.z,
                w * o.z + z * o.w + x * o.y - y * o.x};
    }
    Quat operator*(const T& s) const { return {w * s, x * s, y * s, z * s}; }

    bool operator==(const Quat& o) const {
        return w == o.w && x == o.x && y == o.y && z == o.z;
    }
    bool operator!=(const Quat& o) const { return !(*this == o); }

    std::array<T, 4> components() const { return {w, x, y, z}; }
};

using QuatZ = Quat<Int>;
using QuatQ = Quat<Rat>;
using QuatG = Quat<GoldenRat>;

inline QuatQ to_rational(const QuatZ& q) {
    return {Rat(q.w), Rat(q.x), Rat(q.y), Rat(q.z)};
}
inline QuatG to_golden(const QuatZ& q) {
    return {GoldenRat(Rat(q.w), Rat(0)), GoldenRat(Rat(q.x), Rat(0)),
            GoldenRat(Rat(q.y), Rat(0)), GoldenRat(Rat(q.z), Rat(0))};
}

/// 3d rotation attached to a nonzero quaternion; orthogonal with det 1,
/// fixes the axis (x, y, z) and has trace 1 + 2 cos(angle).
template <typename F>
Mat<F> cayley_rotation(const Quat<F>& q) {
    if (q.is_zero()) throw std::domain_error("cayley_rotation: zero quaternion");
    const F &k = q.w, &l = q.x, &m = q.y, &n = q.z;
    F nn = q.norm();
    Mat<F> r(3, 3);
    F two(2);
    r(0, 0) = k * k + l * l - m * m - n * n;
    r(0, 1) = two * (l * m - k * n);
    r(0, 2) = two * (k * m + l * n);
    r(1, 0) = two * (k * n + l * m);
    r(1, 1) = k * k - l * l + m * m - n * n;
    r(1, 2) = two * (m * n - k * l);
    r(2, 0) = two * (l * n - k * m);
    r(2, 1) = two * (k * l + m * n);
    r(2, 2) = k * k - l * l - m * m + n * n;
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) r(i, j) = r(i, j) / nn;
    return r;
}

/// Unnormalized 4d map x -> q1 x conj(q2); column j is q1 e_j conj(q2).
/// det = |q1|^4 |q2|^4 and M M^t = |q1|^2 |q2|^2 * identity.
template <typename F>
Mat<F> pair_map(const Quat<F>& q1, const Quat<F>& q2) {
    if (q1.is_zero() || q2.is_zero()) throw std::domain_error("pair_map: zero quaternion");
    Mat<F> m(4, 4);
    for (int j = 0; j < 4; ++j) {
        Quat<F> e;
        (j == 0 ? e.w : j == 1 ? e.x : j == 2 ? e.y : e.z) = F(1);
        Quat<F> col = q1 * e * q2.conj();
        m(0, j) = col.w;
        m(1, j) = col.x;
        m(2, j) = col.y;
        m(3, j) = col.z;
    }
    return m;
}

/// gcd content of an integer quaternion; primitive means content 1.
Int quat_content(const QuatZ& q);
bool is_primitive(const QuatZ& q);
std::pair<QuatZ, Int> make_primitive(const QuatZ& q);

/// Content in Z[tau] for a quaternion with golden-integer components,
/// normalized to the canonical associate.
GoldenInt quat_content_golden(const QuatG& q);
bool is_primitive_golden(const QuatG& q);
std::pair<QuatG, GoldenInt> make_primitive_golden(const QuatG& q);

/// sqrt in Z[tau] if it exists (up to sign)
std::optional<GoldenInt> golden_sqrt(const GoldenInt& u);

/// admissible: |q1 q2|^2 is a perfect square (in N, resp. in Z[tau])
bool is_admissible_pair(const QuatZ& q1, const QuatZ& q2);
bool is_admissible_pair_golden(const QuatG& q1, const QuatG& q2);

/// canonical sign: first nonzero component positive (primary embedding for
/// golden components); exactly one of {q, -q} is canonical
bool is_canonical_sign(const QuatZ& q);
QuatZ canonical_sign(const QuatZ& q);
bool is_canonical_sign_golden(const QuatG& q);

/// All integer quaternions with 1 <= |q|^2 <= norm_bound, canonical sign,
/// ordered by (norm, components).  With primitive_only, content-1 only.
std::vector<QuatZ> enumerate_quaternions(const Int& norm_bound, bool primitive_only,
                                         std::uint64_t cap = 50'000'000);

/// The 24 units of the Hurwitz ring: 8 signed basis quaternions and the 16
/// half-integer (+-1 +-i +-j +-k)/2.
const std::vector<QuatQ>& hurwitz_units();
bool is_hurwitz(const QuatQ& q);

} // namespace csl
