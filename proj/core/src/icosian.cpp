#include "csl/icosian.hpp"

#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include "csl/errors.hpp"
#include "csl/golden.hpp"
#include "csl/hnf.hpp"
#include "csl/lattice.hpp"

namespace csl {

namespace {

// forward substitution for a lower-triangular integer matrix over Q
std::vector<Rat> solve_lower_tri(const IntMat& h, const std::vector<Rat>& b) {
    size_t n = h.rows();
    std::vector<Rat> x(n);
    for (size_t i = 0; i < n; ++i) {
        Rat acc = b[i];
        for (size_t j = 0; j < i; ++j) acc -= Rat(h(i, j)) * x[j];
        x[i] = acc / Rat(h(i, i));
    }
    return x;
}

GoldenRat half(const GoldenInt& g) { return {Rat(g.a(), 2), Rat(g.b(), 2)}; }

} // namespace

const IcosianRing& IcosianRing::instance() {
    static const IcosianRing ring;
    return ring;
}

IcosianRing::IcosianRing() : basis_(8, 8), tau_action_(8, 8), trace_gram_(8, 8) {
    // the 120 units: even coordinate permutations and arbitrary sign flips of
    // (1,0,0,0), (1,1,1,1)/2 and (tau, 1, tau', 0)/2 with tau' = 1 - tau
    const GoldenInt two(Int(2), Int(0)), zero(Int(0), Int(0)), one(Int(1), Int(0));
    const GoldenInt tau(Int(0), Int(1)), tau_c(Int(1), Int(-1));
    std::vector<std::array<GoldenInt, 4>> seeds = {
        {two, zero, zero, zero}, {one, one, one, one}, {tau, one, tau_c, zero}};

    static const int even_perm[12][4] = {{0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2},
                                         {1, 0, 3, 2}, {1, 2, 0, 3}, {1, 3, 2, 0},
                                         {2, 0, 1, 3}, {2, 1, 3, 0}, {2, 3, 0, 1},
                                         {3, 0, 2, 1}, {3, 1, 0, 2}, {3, 2, 1, 0}};

    std::set<std::array<std::pair<Int, Int>, 4>> seen;
    for (const auto& seed : seeds)
        for (const auto& perm : even_perm)
            for (int mask = 0; mask < 16; ++mask) {
                std::array<GoldenInt, 4> v; // doubled components
                for (int i = 0; i < 4; ++i) {
                    GoldenInt c = seed[perm[i]];
                    v[i] = (mask >> i) & 1 ? -c : c;
                }
                std::array<std::pair<Int, Int>, 4> key;
                for (int i = 0; i < 4; ++i) key[i] = {v[i].a(), v[i].b()};
                if (!seen.insert(key).second) continue;
                units_.push_back({half(v[0]), half(v[1]), half(v[2]), half(v[3])});
            }
    if (units_.size() != 120) throw std::logic_error("icosian units: expected 120");

    // basis = Hermite form of the coordinate lattice spanned by the units
    IntMat gens(8, units_.size());
    for (size_t c = 0; c < units_.size(); ++c) {
        auto amb = ambient_coords(units_[c]);
        if (!amb) throw std::logic_error("icosian unit with non half-integral coords");
        for (int i = 0; i < 8; ++i) gens(i, c) = (*amb)[i];
    }
    basis_ = hnf(gens);

    // tau action in ring coordinates
    GoldenRat tau_r(Rat(0), Rat(1));
    for (int k = 0; k < 8; ++k) {
        std::vector<Int> e(8, Int(0));
        e[k] = 1;
        QuatG b = from_ring_coords(e);
        QuatG tb{b.w * tau_r, b.x * tau_r, b.y * tau_r, b.z * tau_r};
        auto coords = ring_coords(tb);
        for (int i = 0; i < 8; ++i) {
            if (denominator(coords[i]) != 1)
                throw std::logic_error("icosian ring not closed under tau");
            tau_action_(i, k) = numerator(coords[i]);
            tau_ll_[i][k] = tau_action_(i, k).convert_to<long long>();
        }
    }

    // doubled Gram matrix of the trace form trace(|q|^2) in ring coordinates
    // (the polarization of the trace form can be half-integral)
    auto trace_norm = [&](const std::vector<Int>& x) {
        QuatG q = from_ring_coords(x);
        GoldenRat u = q.norm();
        Rat t = 2 * u.a() + u.b();
        if (denominator(t) != 1) throw std::logic_error("trace form not integral");
        return numerator(t);
    };
    std::vector<Int> diag(8);
    for (int k = 0; k < 8; ++k) {
        std::vector<Int> e(8, Int(0));
        e[k] = 1;
        diag[k] = trace_norm(e);
        trace_gram_(k, k) = 2 * diag[k];
    }
    for (int k = 0; k < 8; ++k)
        for (int l = k + 1; l < 8; ++l) {
            std::vector<Int> e(8, Int(0));
            e[k] = 1;
            e[l] = 1;
            Int mixed = trace_norm(e) - diag[k] - diag[l];
            trace_gram_(k, l) = trace_gram_(l, k) = mixed;
        }
}

std::optional<std::array<Int, 8>> IcosianRing::ambient_coords(const QuatG& q) {
    std::array<Int, 8> out;
    auto comps = q.components();
    for (int i = 0; i < 4; ++i) {
        Rat a2 = comps[i].a() * 2, b2 = comps[i].b() * 2;
        if (denominator(a2) != 1 || denominator(b2) != 1) return std::nullopt;
        out[2 * i] = numerator(a2);
        out[2 * i + 1] = numerator(b2);
    }
    return out;
}

QuatG IcosianRing::from_ring_coords(const std::vector<Int>& x) const {
    if (x.size() != 8) throw std::invalid_argument("from_ring_coords: need 8 coordinates");
    std::array<Rat, 8> amb{};
    for (int i = 0; i < 8; ++i) {
        Int acc = 0;
        for (int j = 0; j < 8; ++j) acc += basis_(i, j) * x[j];
        amb[i] = Rat(acc, 2);
    }
    return {GoldenRat(amb[0], amb[1]), GoldenRat(amb[2], amb[3]), GoldenRat(amb[4], amb[5]),
            GoldenRat(amb[6], amb[7])};
}

std::vector<Rat> IcosianRing::ring_coords(const QuatG& q) const {
    auto comps = q.components();
    std::vector<Rat> amb(8);
    for (int i = 0; i < 4; ++i) {
        amb[2 * i] = comps[i].a() * 2;
        amb[2 * i + 1] = comps[i].b() * 2;
    }
    return solve_lower_tri(basis_, amb);
}

bool IcosianRing::contains(const QuatG& q, std::vector<Int>* certificate) const {
    auto coords = ring_coords(q);
    std::vector<Int> cert(8);
    for (int i = 0; i < 8; ++i) {
        if (denominator(coords[i]) != 1) return false;
        cert[i] = numerator(coords[i]);
    }
    if (certificate) *certificate = std::move(cert);
    return true;
}

GoldenRat IcosianRing::primitive_scale(const QuatG& q) const {
    if (q.is_zero()) throw std::domain_error("primitive_scale: zero quaternion");
    // l q lies in the ring iff (a + b T) x is integral, where x are the ring
    // coordinates of q and T the tau action; the admissible (a, b) form the
    // dual of the lattice spanned by the rows of [x | T x].
    std::vector<Rat> x = ring_coords(q);
    std::vector<Rat> tx(8, Rat(0));
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) tx[i] += Rat(tau_action_(i, j)) * x[j];

    Int den = 1;
    for (int i = 0; i < 8; ++i) den = lcm(lcm(den, denominator(x[i])), denominator(tx[i]));
    IntMat rows(2, 8);
    for (int i = 0; i < 8; ++i) {
        rows(0, i) = numerator(x[i] * den);
        rows(1, i) = numerator(tx[i] * den);
    }
    Lattice row_lattice = Lattice::from_generators(rows, den);
    Lattice k = dual(row_lattice);

    // K is a fractional Z[tau]-ideal; its generator is the gcd of any Z-basis
    RatMat kb = k.basis();
    Int n = lcm(lcm(denominator(kb(0, 0)), denominator(kb(1, 0))),
                lcm(denominator(kb(0, 1)), denominator(kb(1, 1))));
    GoldenInt m1(numerator(kb(0, 0) * n), numerator(kb(1, 0) * n));
    GoldenInt m2(numerator(kb(0, 1) * n), numerator(kb(1, 1) * n));
    GoldenInt g = unit_normalize(golden_gcd(m1, m2)).first;
    return {Rat(g.a(), n), Rat(g.b(), n)};
}

bool IcosianRing::is_ring_primitive(const QuatG& q) const {
    std::vector<Int> cert;
    if (!contains(q, &cert)) return false;
    GoldenRat s = primitive_scale(q);
    return s.is_integral() && s.to_integer().is_unit();
}

bool IcosianRing::coords_primitive(const std::array<long long, 8>& x) const {
    long long tx[8];
    for (int i = 0; i < 8; ++i) {
        long long s = 0;
        for (int j = 0; j < 8; ++j) s += tau_ll_[i][j] * x[j];
        tx[i] = s;
    }
    long long g = 0;
    for (int i = 0; i < 8 && g != 1; ++i)
        for (int j = i + 1; j < 8; ++j) {
            long long minor = x[i] * tx[j] - x[j] * tx[i];
            g = std::gcd(g, minor < 0 ? -minor : minor);
            if (g == 1) break;
        }
    return g == 1;
}

void IcosianRing::scan(long long primary_bound, long long conj_bound,
                       const ScanVisitor& visit) const {
    if (primary_bound <= 0 || conj_bound <= 0) return;

    long long bas[8][8];
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) bas[i][j] = basis_(i, j).convert_to<long long>();

    // Fincke-Pohst on the (positive definite) trace form, with extra pruning
    // from the two Galois-embedding forms.  Each embedding form alone has
    // rank 4 only, so its clamped LDL contributes partial-sum bounds and the
    // trace form supplies the interval skeleton.  Floating bounds are widened
    // by one step; candidates are checked exactly before the visitor runs.
    const double phi[2] = {1.6180339887498949, -0.6180339887498949};
    double g[2][8][8], gs[8][8];
    for (int e = 0; e < 2; ++e) {
        double comp[8][4];
        for (int k = 0; k < 8; ++k)
            for (int c = 0; c < 4; ++c)
                comp[k][c] = (double(bas[2 * c][k]) + phi[e] * double(bas[2 * c + 1][k])) / 2.0;
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) {
                double s = 0;
                for (int c = 0; c < 4; ++c) s += comp[i][c] * comp[j][c];
                g[e][i][j] = s;
            }
    }
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) gs[i][j] = g[0][i][j] + g[1][i][j];

    auto ldl = [](const double (&m)[8][8], double (&l)[8][8], double (&d)[8]) {
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) l[i][j] = i == j ? 1.0 : 0.0;
        for (int i = 0; i < 8; ++i) {
            for (int j = 0; j <= i; ++j) {
                double s = m[i][j];
                for (int k = 0; k < j; ++k) s -= l[i][k] * l[j][k] * d[k];
                if (i == j) {
                    d[i] = s > 1e-9 ? s : 0.0;
                } else {
                    l[i][j] = d[j] > 0.0 ? s / d[j] : 0.0;
                }
            }
        }
    };
    double lS[8][8], dS[8], lE[2][8][8], dE[2][8];
    ldl(gs, lS, dS);
    ldl(g[0], lE[0], dE[0]);
    ldl(g[1], lE[1], dE[1]);
    const double budget0 = double(primary_bound) + 1e-9;
    const double budget1 = double(conj_bound) + 1e-9;

    std::array<long long, 8> x{};
    // exact per-point check of both embeddings of |q|^2
    long long normA = 0, normB = 0;
    auto exact_ok = [&](const std::array<long long, 8>& v) {
        long long amb[8];
        for (int i = 0; i < 8; ++i) {
            long long s = 0;
            for (int j = 0; j < 8; ++j) s += bas[i][j] * v[j];
            amb[i] = s;
        }
        long long A = 0, B = 0; // 4 |q|^2 = A + B tau in doubled coordinates
        for (int i = 0; i < 4; ++i) {
            long long a = amb[2 * i], b = amb[2 * i + 1];
            A += a * a + b * b;
            B += 2 * a * b + b * b;
        }
        normA = A;
        normB = B;
        // bound checks: A + B tau <= 4 T  <=>  (2A + B - 8T) + B sqrt5 <= 0
        auto le_zero = [](long long c, long long s5) {
            if (c <= 0 && s5 <= 0) return true;
            if (c >= 0 && s5 >= 0) return c == 0 && s5 == 0;
            // opposite signs: compare c^2 with 5 s5^2
            __int128 c2 = (__int128)c * c, s2 = (__int128)5 * s5 * s5;
            return c < 0 ? c2 >= s2 : c2 <= s2;
        };
        bool zero = A == 0 && B == 0;
        return !zero && le_zero(2 * A + B - 8 * primary_bound, B) &&
               le_zero(2 * A + B - 8 * conj_bound, -B);
    };

    std::function<bool(int, double, double, double)> rec = [&](int level, double remS,
                                                               double rem0, double rem1) {
        if (level < 0) {
            bool all_zero = true;
            for (long long c : x)
                if (c != 0) all_zero = false;
            if (all_zero) return true;
            if (!exact_ok(x)) return true;
            return visit(x, normA, normB);
        }
        double cS = 0;
        for (int j = level + 1; j < 8; ++j) cS += lS[j][level] * double(x[j]);
        cS = -cS;
        double radius = std::sqrt(std::max(0.0, remS) / dS[level]);
        double c0 = 0, c1 = 0;
        for (int j = level + 1; j < 8; ++j) {
            c0 += lE[0][j][level] * double(x[j]);
            c1 += lE[1][j][level] * double(x[j]);
        }
        c0 = -c0;
        c1 = -c1;
        long long lo = (long long)std::floor(cS - radius) - 1;
        long long hi = (long long)std::ceil(cS + radius) + 1;
        for (long long v = lo; v <= hi; ++v) {
            double dvS = double(v) - cS;
            double usedS = dS[level] * dvS * dvS;
            if (usedS > remS + 1.0) continue;
            double dv0 = double(v) - c0, dv1 = double(v) - c1;
            double used0 = dE[0][level] * dv0 * dv0, used1 = dE[1][level] * dv1 * dv1;
            if (used0 > rem0 + 1.0 || used1 > rem1 + 1.0) continue;
            x[level] = v;
            if (!rec(level - 1, remS - usedS, rem0 - used0, rem1 - used1)) return false;
        }
        x[level] = 0;
        return true;
    };
    rec(7, budget0 + budget1, budget0, budget1);
}

long long IcosianRing::default_embedding_bound(const Int& norm_bound) {
    // smallest integer T >= tau sqrt(N):  2 T^2 - 3 N >= N sqrt5, exactly
    long long n = norm_bound.convert_to<long long>();
    auto ok = [&](long long t) {
        __int128 lhs = (__int128)2 * t * t - (__int128)3 * n;
        return lhs >= 0 && lhs * lhs >= (__int128)5 * n * n;
    };
    long long t = (long long)std::ceil(1.6180339887498949 * std::sqrt((double)n));
    while (!ok(t)) ++t;
    while (t > 1 && ok(t - 1)) --t;
    return t;
}

std::vector<QuatG> IcosianRing::enumerate_icosians(const Int& norm_bound,
                                                   std::optional<long long> embedding_bound,
                                                   std::uint64_t cap) const {
    long long t = embedding_bound ? *embedding_bound : default_embedding_bound(norm_bound);
    long long nmax = norm_bound.convert_to<long long>();
    std::vector<QuatG> out;
    bool capped = false;
    scan(t, t, [&](const std::array<long long, 8>& coords, long long a, long long b) {
        __int128 n16 = (__int128)a * a + (__int128)a * b - (__int128)b * b;
        if (n16 > (__int128)16 * nmax) return true;
        std::vector<Int> x(coords.begin(), coords.end());
        QuatG q = from_ring_coords(x);
        if (!is_canonical_sign_golden(q)) return true;
        out.push_back(q);
        if (out.size() > cap) {
            capped = true;
            return false;
        }
        return true;
    });
    if (capped)
        throw resource_cap_error("enumerate_icosians: cap exceeded",
                                 "embedding_bound=" + std::to_string(t));
    std::sort(out.begin(), out.end(), [](const QuatG& a, const QuatG& b) {
        auto ca = a.components(), cb = b.components();
        for (int i = 0; i < 4; ++i) {
            if (ca[i].a() != cb[i].a()) return ca[i].a() < cb[i].a();
            if (ca[i].b() != cb[i].b()) return ca[i].b() < cb[i].b();
        }
        return false;
    });
    return out;
}

} // namespace csl
