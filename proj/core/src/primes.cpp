#include "csl/prime_split.hpp"

#include <algorithm>

namespace csl {

// ---------------------------------------------------------------------------
// rational integers

bool is_prime(const Int& n) {
    if (n < 2) return false;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    // deterministic Miller-Rabin for the sizes we meet
    Int d = n - 1;
    unsigned r = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++r;
    }
    for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        Int x = boost::multiprecision::powm(Int(a), d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (unsigned i = 1; i < r; ++i) {
            x = x * x % n;
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

std::map<Int, unsigned> factor_integer(Int n) {
    if (n < 0) n = -n;
    if (n == 0) throw std::domain_error("factor_integer: zero");
    std::map<Int, unsigned> out;
    for (Int p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    }
    if (n > 1) ++out[n];
    return out;
}

std::vector<Int> divisors(const Int& n) {
    auto fac = factor_integer(n);
    std::vector<Int> out{1};
    for (const auto& [p, e] : fac) {
        size_t sz = out.size();
        Int pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < sz; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// golden canonical associate

std::pair<GoldenInt, GoldenInt> unit_normalize(const GoldenInt& x) {
    if (x.is_zero()) throw std::domain_error("unit_normalize: zero has no associate class");
    const GoldenInt tau_sq(Int(1), Int(1));     // tau^2
    const GoldenInt tau_sq_inv(Int(2), Int(-1)); // tau^{-2}

    // make totally positive: the totally positive units are exactly tau^{2k}
    GoldenInt y = x;
    int sp = y.sign_primary(), sc = y.sign_conjugate();
    if (sp < 0 && sc < 0) {
        y = -y;
    } else if (sp != sc) {
        y = y * golden_tau; // N(tau) = -1 flips one embedding
        if (y.sign_primary() < 0) y = -y;
    }

    // trace is strictly convex along the tau^{2k} orbit; walk to the minimum
    while ((y * tau_sq).trace() < y.trace()) y = y * tau_sq;
    while ((y * tau_sq_inv).trace() < y.trace()) y = y * tau_sq_inv;
    // at most one neighbour can tie; break ties by the smaller rational part
    GoldenInt up = y * tau_sq, dn = y * tau_sq_inv;
    if (up.trace() == y.trace() && up.a() < y.a()) y = up;
    else if (dn.trace() == y.trace() && dn.a() < y.a()) y = dn;

    // unit = x / y
    GoldenInt unit;
    if (!x.divides_into(y, unit) || !unit.is_unit())
        throw std::logic_error("unit_normalize: associate reconstruction failed");
    return {y, unit};
}

// ---------------------------------------------------------------------------
// prime splitting

static void require_prime(const Int& p) {
    if (!is_prime(p)) throw std::domain_error("split_prime: argument is not prime");
}

PrimeSplit<GaussInt> split_prime_gaussian(const Int& p) {
    require_prime(p);
    PrimeSplit<GaussInt> out{p, RingTag::gaussian, SplitKind::inert, {}};
    if (p == 2) {
        out.kind = SplitKind::ramified;
        GaussInt w = unit_normalize(GaussInt(Int(1), Int(1))).first;
        out.factors = {w, w};
        return out;
    }
    if (p % 4 == 3) {
        out.factors = {GaussInt(p, Int(0))};
        return out;
    }
    // p = 1 (mod 4): find a^2 + b^2 = p
    for (Int a = 1; a * a <= p; ++a) {
        Int b2 = p - a * a, b;
        if (perfect_square(b2, b)) {
            GaussInt w(a, b);
            out.kind = SplitKind::split;
            out.factors = {unit_normalize(w).first, unit_normalize(w.conj()).first};
            return out;
        }
    }
    throw std::logic_error("split_prime_gaussian: no two-square representation found");
}

PrimeSplit<GoldenInt> split_prime_golden(const Int& p) {
    require_prime(p);
    PrimeSplit<GoldenInt> out{p, RingTag::golden, SplitKind::inert, {}};
    if (p == 5) {
        out.kind = SplitKind::ramified;
        GoldenInt w = unit_normalize(GoldenInt(Int(-1), Int(2))).first; // sqrt(5) = 2 tau - 1
        out.factors = {w, w};
        return out;
    }
    Int r = p % 5;
    if (r == 2 || r == 3) {
        out.factors = {GoldenInt(p, Int(0))};
        return out;
    }
    // p = +-1 (mod 5): solve |a^2 + a b - b^2| = p
    for (Int b = 0;; ++b) {
        for (int sgn : {+1, -1}) {
            Int disc = 5 * b * b + sgn * 4 * p, s;
            if (disc < 0 || !perfect_square(disc, s)) continue;
            if ((s - b) % 2 != 0) continue;
            GoldenInt w((s - b) / 2, b);
            if (abs(w.norm()) != p) continue;
            out.kind = SplitKind::split;
            GoldenInt w1 = unit_normalize(w).first;
            GoldenInt w2 = unit_normalize(w.conj()).first;
            out.factors = {w1, w2};
            return out;
        }
        if (b * b > 4 * p) throw std::logic_error("split_prime_golden: search exhausted");
    }
}

PrimeSplit<CycloInt> split_prime_cyclotomic(const Int& p) {
    require_prime(p);
    PrimeSplit<CycloInt> out{p, RingTag::cyclotomic, SplitKind::inert, {}};
    if (p == 5) {
        out.kind = SplitKind::ramified;
        CycloInt w = unit_normalize(CycloInt(Int(1), Int(-1), Int(0), Int(0))).first; // 1 - x
        out.factors = {w, w, w, w};
        return out;
    }
    Int r = p % 5;
    if (r == 2 || r == 3) {
        out.factors = {CycloInt(p, Int(0), Int(0), Int(0))};
        return out;
    }
    if (r == 4) {
        // inertia degree 2: the two golden primes above p stay prime in Z[x]
        auto g = split_prime_golden(p);
        out.kind = SplitKind::split;
        for (const auto& f : g.factors)
            out.factors.push_back(unit_normalize(CycloInt::from_golden(f)).first);
        return out;
    }
    // p = 1 (mod 5): four conjugate degree-one primes. Bounded coefficient box,
    // doubled on failure; split primes have representatives of size ~ p^{1/4}.
    Int bound = isqrt(isqrt(p)) + 3;
    for (int attempt = 0; attempt < 8; ++attempt, bound *= 2) {
        for (Int c0 = 0; c0 <= bound; ++c0)
            for (Int c1 = -bound; c1 <= bound; ++c1)
                for (Int c2 = -bound; c2 <= bound; ++c2)
                    for (Int c3 = -bound; c3 <= bound; ++c3) {
                        CycloInt w(c0, c1, c2, c3);
                        if (w.norm() != p) continue;
                        out.kind = SplitKind::split;
                        for (int k = 1; k <= 4; ++k)
                            out.factors.push_back(unit_normalize(w.galois(k)).first);
                        return out;
                    }
    }
    throw std::logic_error("split_prime_cyclotomic: search exhausted");
}

// ---------------------------------------------------------------------------
// element factorization: factor the absolute norm over Z, then peel off the
// ring primes above each rational prime by exact trial division.

namespace {

template <typename E, typename SplitFn, typename NormalizeFn>
Factorization<E> factor_generic(const E& x, const Int& abs_norm, SplitFn split,
                                NormalizeFn normalize) {
    if (x.is_zero()) throw std::domain_error("factor_element: zero");
    Factorization<E> out;
    E rest = x;
    for (const auto& [p, e] : factor_integer(abs_norm)) {
        (void)e;
        for (const E& w : split(p).factors) {
            unsigned k = 0;
            E q;
            while (rest.divides_into(w, q)) {
                rest = q;
                ++k;
            }
            if (k > 0) {
                // the same canonical prime may be listed twice (ramified case)
                bool merged = false;
                for (auto& pr : out.primes)
                    if (pr.first == w) {
                        pr.second += k;
                        merged = true;
                    }
                if (!merged) out.primes.emplace_back(w, k);
            }
        }
    }
    if (!normalize(rest)) throw std::logic_error("factor_element: non-unit remainder");
    out.unit = rest;
    return out;
}

} // namespace

Factorization<GaussInt> factor_element(const GaussInt& x) {
    if (x.is_zero()) throw std::domain_error("factor_element: zero");
    return factor_generic(
        x, x.norm(), [](const Int& p) { return split_prime_gaussian(p); },
        [](const GaussInt& u) { return u.is_unit(); });
}

Factorization<GoldenInt> factor_element(const GoldenInt& x) {
    if (x.is_zero()) throw std::domain_error("factor_element: zero");
    return factor_generic(
        x, abs(x.norm()), [](const Int& p) { return split_prime_golden(p); },
        [](const GoldenInt& u) { return u.is_unit(); });
}

Factorization<CycloInt> factor_element(const CycloInt& x) {
    if (x.is_zero()) throw std::domain_error("factor_element: zero");
    return factor_generic(
        x, x.norm(), [](const Int& p) { return split_prime_cyclotomic(p); },
        [](const CycloInt& u) { return u.is_unit(); });
}

} // namespace csl
