#include "csl/quaternion.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "csl/errors.hpp"

namespace csl {

Int quat_content(const QuatZ& q) {
    if (q.is_zero()) throw std::domain_error("quat_content: zero quaternion");
    return gcd(gcd(abs(q.w), abs(q.x)), gcd(abs(q.y), abs(q.z)));
}

bool is_primitive(const QuatZ& q) { return quat_content(q) == 1; }

std::pair<QuatZ, Int> make_primitive(const QuatZ& q) {
    Int c = quat_content(q);
    return {{q.w / c, q.x / c, q.y / c, q.z / c}, c};
}

namespace {

GoldenInt golden_component(const GoldenRat& v) {
    if (!v.is_integral()) throw std::domain_error("expected a Z[tau] component");
    return v.to_integer();
}

} // namespace

GoldenInt quat_content_golden(const QuatG& q) {
    if (q.is_zero()) throw std::domain_error("quat_content_golden: zero quaternion");
    GoldenInt g(Int(0), Int(0));
    bool first = true;
    for (const GoldenRat& v : q.components()) {
        GoldenInt c = golden_component(v);
        if (c.is_zero()) continue;
        g = first ? c : golden_gcd(g, c);
        first = false;
    }
    return unit_normalize(g).first;
}

bool is_primitive_golden(const QuatG& q) { return quat_content_golden(q).is_unit(); }

std::pair<QuatG, GoldenInt> make_primitive_golden(const QuatG& q) {
    GoldenInt c = quat_content_golden(q);
    GoldenRat inv = GoldenRat(c).inverse();
    return {{q.w * inv, q.x * inv, q.y * inv, q.z * inv}, c};
}

std::optional<GoldenInt> golden_sqrt(const GoldenInt& u) {
    // (alpha + beta tau)^2 = alpha^2 + beta^2 + (2 alpha beta + beta^2) tau;
    // with t = beta^2 this reduces to 5 t^2 - (4a + 2b) t + b^2 = 0.
    const Int &a = u.a(), &b = u.b();
    if (u.is_zero()) return GoldenInt(Int(0), Int(0));
    Int disc = (4 * a + 2 * b) * (4 * a + 2 * b) - 20 * b * b, sq;
    if (!perfect_square(disc, sq)) return std::nullopt;
    for (int sgn : {+1, -1}) {
        Int num = 4 * a + 2 * b + sgn * sq;
        if (num < 0 || num % 10 != 0) continue;
        Int t = num / 10, beta;
        if (!perfect_square(t, beta)) continue;
        if (beta == 0) {
            Int alpha;
            if (b == 0 && perfect_square(a, alpha)) return GoldenInt(alpha, Int(0));
            continue;
        }
        for (int bs : {+1, -1}) {
            Int bb = bs * beta;
            Int anum = b - t;
            if (anum % (2 * bb) != 0) continue;
            GoldenInt cand(anum / (2 * bb), bb);
            if (cand * cand == u) return cand;
        }
    }
    return std::nullopt;
}

bool is_admissible_pair(const QuatZ& q1, const QuatZ& q2) {
    if (!is_primitive(q1) || !is_primitive(q2))
        throw std::domain_error("is_admissible_pair: quaternions must be primitive");
    Int s;
    return perfect_square(q1.norm() * q2.norm(), s);
}

bool is_admissible_pair_golden(const QuatG& q1, const QuatG& q2) {
    GoldenRat n = q1.norm() * q2.norm();
    if (!n.is_integral()) return false;
    return golden_sqrt(n.to_integer()).has_value();
}

bool is_canonical_sign(const QuatZ& q) {
    for (const Int& c : q.components()) {
        if (c > 0) return true;
        if (c < 0) return false;
    }
    return false; // zero quaternion
}

QuatZ canonical_sign(const QuatZ& q) { return is_canonical_sign(q) ? q : -q; }

bool is_canonical_sign_golden(const QuatG& q) {
    for (const GoldenRat& c : q.components()) {
        int s = c.sign_primary();
        if (s > 0) return true;
        if (s < 0) return false;
    }
    return false;
}

std::vector<QuatZ> enumerate_quaternions(const Int& norm_bound, bool primitive_only,
                                         std::uint64_t cap) {
    if (norm_bound < 1) throw std::invalid_argument("enumerate_quaternions: bound < 1");
    if (norm_bound > Int(4'000'000'000LL))
        throw resource_cap_error("enumerate_quaternions: norm bound too large",
                                 "norm_bound=" + norm_bound.str());
    long long nb = norm_bound.convert_to<long long>();
    auto floor_sqrt = [](long long v) {
        long long r = (long long)std::sqrt((double)v);
        while (r * r > v) --r;
        while ((r + 1) * (r + 1) <= v) ++r;
        return r;
    };
    std::vector<QuatZ> out;
    for (long long w = 0, wl = floor_sqrt(nb); w <= wl; ++w) {
        long long rw = nb - w * w, xl = floor_sqrt(rw);
        // canonical sign: first nonzero component positive
        for (long long x = (w > 0 ? -xl : 0); x <= xl; ++x) {
            long long rx = rw - x * x, yl = floor_sqrt(rx);
            for (long long y = (w > 0 || x > 0 ? -yl : 0); y <= yl; ++y) {
                long long ry = rx - y * y, zl = floor_sqrt(ry);
                for (long long z = (w > 0 || x > 0 || y > 0 ? -zl : 1); z <= zl; ++z) {
                    QuatZ q{Int(w), Int(x), Int(y), Int(z)};
                    if (primitive_only && !is_primitive(q)) continue;
                    out.push_back(q);
                    if (out.size() > cap)
                        throw resource_cap_error("enumerate_quaternions: cap exceeded",
                                                 "norm=" + Int(w * w + x * x + y * y + z * z).str());
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const QuatZ& a, const QuatZ& b) {
        Int na = a.norm(), nb2 = b.norm();
        if (na != nb2) return na < nb2;
        return a.components() < b.components();
    });
    return out;
}

const std::vector<QuatQ>& hurwitz_units() {
    static const std::vector<QuatQ> units = [] {
        std::vector<QuatQ> u;
        for (int i = 0; i < 4; ++i)
            for (int s : {+1, -1}) {
                QuatQ q;
                (i == 0 ? q.w : i == 1 ? q.x : i == 2 ? q.y : q.z) = Rat(s);
                u.push_back(q);
            }
        Rat h(1, 2);
        for (int sw : {+1, -1})
            for (int sx : {+1, -1})
                for (int sy : {+1, -1})
                    for (int sz : {+1, -1})
                        u.push_back({h * sw, h * sx, h * sy, h * sz});
        return u;
    }();
    return units;
}

bool is_hurwitz(const QuatQ& q) {
    bool all_int = true, all_half = true;
    for (const Rat& c : q.components()) {
        Int d = denominator(c);
        if (d == 1) {
            all_half = false;
        } else if (d == 2) {
            all_int = false;
        } else {
            return false;
        }
    }
    return all_int || all_half;
}

} // namespace csl
