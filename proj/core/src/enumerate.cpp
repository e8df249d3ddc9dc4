#include "csl/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "csl/errors.hpp"
#include "csl/icosian.hpp"
#include "csl/prime_split.hpp"
#include "csl/textio.hpp"

namespace csl {

namespace {

Int odd_part(Int n) {
    while (n % 2 == 0) n /= 2;
    return n;
}

// run fn(i) for i in [0, n) on `threads` workers; fn must be data-parallel
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn) {
    if (threads <= 1 || n < 64) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(64);
                if (i >= n) return;
                std::size_t hi = std::min(n, i + 64);
                for (; i < hi; ++i) fn(i);
            }
        });
    for (auto& th : pool) th.join();
}

void push_entry(std::vector<RotationEntry>& out, IsometryHandle h, Int sigma, std::string key,
                std::uint64_t cap) {
    if (out.size() >= cap)
        throw resource_cap_error("enumerate_rotations: cap exceeded", "sigma=" + sigma.str());
    out.push_back({std::move(h), std::move(sigma), std::move(key)});
}

bool index_allowed_z2(const Int& m) {
    if (m == 1) return true;
    for (const auto& [p, e] : factor_integer(m)) {
        (void)e;
        if (p % 4 != 1) return false;
    }
    return true;
}

bool index_allowed_m10(const Int& m) {
    if (m == 1) return true;
    for (const auto& [p, e] : factor_integer(m)) {
        (void)e;
        if (p % 5 != 1) return false;
    }
    return true;
}

// numerators of the planar parametrization: one Gaussian prime choice per
// rational prime divisor
void gauss_numerators(const Int& m, const std::function<void(const GaussInt&)>& emit) {
    std::vector<std::pair<GaussInt, unsigned>> primes;
    for (const auto& [p, e] : factor_integer(m)) {
        auto split = split_prime_gaussian(p);
        primes.push_back({split.factors.at(0), e});
    }
    std::function<void(std::size_t, GaussInt)> rec = [&](std::size_t i, GaussInt acc) {
        if (i == primes.size()) {
            emit(acc);
            return;
        }
        const auto& [w, e] = primes[i];
        GaussInt pw(Int(1), Int(0)), cw(Int(1), Int(0));
        for (unsigned k = 0; k < e; ++k) {
            pw = pw * w;
            cw = cw * w.conj();
        }
        rec(i + 1, acc * pw);
        rec(i + 1, acc * cw);
    };
    rec(0, GaussInt(Int(1), Int(0)));
}

void enumerate_z2(const Int& sigma_max, std::vector<RotationEntry>& out, std::uint64_t cap) {
    static const GaussInt units[4] = {GaussInt(Int(1), Int(0)), GaussInt(Int(0), Int(1)),
                                      GaussInt(Int(-1), Int(0)), GaussInt(Int(0), Int(-1))};
    for (Int m = 1; m <= sigma_max; ++m) {
        if (!index_allowed_z2(m)) continue;
        gauss_numerators(m, [&](const GaussInt& alpha) {
            for (const GaussInt& u : units) {
                GaussInt num = alpha * u, den = alpha.conj();
                push_entry(out, IsometryHandle::from_gauss_quotient(num, den), m,
                           "z2:" + format_gauss(num) + "/" + format_gauss(den), cap);
            }
        });
    }
}

void enumerate_cubic(StructureId id, const Int& sigma_max, std::vector<RotationEntry>& out,
                     unsigned threads, std::uint64_t cap) {
    auto qs = enumerate_quaternions(4 * sigma_max, true);
    std::vector<RotationEntry> scratch(qs.size());
    std::vector<char> keep(qs.size(), 0);
    parallel_for(qs.size(), threads, [&](std::size_t i) {
        Int s = odd_part(qs[i].norm());
        if (s > sigma_max) return;
        scratch[i] = {IsometryHandle::from_quaternion(qs[i]), s, "q:" + format_quaternion(qs[i])};
        keep[i] = 1;
    });
    for (std::size_t i = 0; i < qs.size(); ++i) {
        if (!keep[i]) continue;
        if (out.size() >= cap)
            throw resource_cap_error("enumerate_rotations: cap exceeded",
                                     "norm=" + qs[i].norm().str());
        out.push_back(std::move(scratch[i]));
    }
    (void)id;
}

// all admissible norm pairs (n1, n2) with both <= bound and n1 n2 a square
std::vector<std::pair<Int, Int>> admissible_norm_pairs(const Int& bound) {
    std::vector<std::pair<Int, Int>> out;
    for (Int n1 = 1; n1 <= bound; ++n1)
        for (Int n2 = 1; n2 <= bound; ++n2) {
            Int s;
            if (perfect_square(n1 * n2, s)) out.emplace_back(n1, n2);
        }
    return out;
}

Int pair_denominator(const QuatZ& q1, const QuatZ& q2, const Int& scale) {
    Mat<Int> m = pair_map(q1, q2);
    Int g = 0;
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) g = gcd(g, m(i, j));
    return scale / gcd(scale, g);
}

void enumerate_d4_family(StructureId id, const Int& sigma_max, std::vector<RotationEntry>& out,
                         std::uint64_t cap) {
    auto qs = enumerate_quaternions(4 * sigma_max, true);
    std::map<Int, std::vector<QuatZ>> by_norm;
    for (const auto& q : qs) by_norm[q.norm()].push_back(q);
    for (const auto& [n1, n2] : admissible_norm_pairs(4 * sigma_max)) {
        auto it1 = by_norm.find(n1), it2 = by_norm.find(n2);
        if (it1 == by_norm.end() || it2 == by_norm.end()) continue;
        Int sf = lcm(odd_part(n1), odd_part(n2));
        if (sf > sigma_max) continue;
        Int root;
        perfect_square(n1 * n2, root);
        for (const QuatZ& q1 : it1->second)
            for (const QuatZ& q2c : it2->second)
                for (int sign : {+1, -1}) {
                    QuatZ q2 = sign > 0 ? q2c : -q2c;
                    Int sigma = sf;
                    if (id == StructureId::Z4) {
                        sigma = lcm(sf, pair_denominator(q1, q2, root));
                        if (sigma > sigma_max) continue;
                    }
                    push_entry(out, IsometryHandle::from_pair(q1, q2), sigma,
                               "p:" + format_quaternion(q1) + format_quaternion(q2), cap);
                }
    }
}

void enumerate_m10(const Int& sigma_max, std::vector<RotationEntry>& out, std::uint64_t cap) {
    // ten torsion units: +- x^j
    std::vector<CycloInt> units;
    CycloInt pow(1L);
    const CycloInt xi(Int(0), Int(1), Int(0), Int(0));
    for (int j = 0; j < 5; ++j) {
        units.push_back(pow);
        units.push_back(-pow);
        pow = pow * xi;
    }
    for (Int m = 1; m <= sigma_max; ++m) {
        if (!index_allowed_m10(m)) continue;
        // per Galois orbit: two independent conjugate pairs (s1, s4), (s2, s3)
        std::vector<std::array<CycloInt, 2>> pairs;
        std::vector<unsigned> exps;
        for (const auto& [p, e] : factor_integer(m)) {
            auto split = split_prime_cyclotomic(p);
            pairs.push_back({split.factors.at(0), split.factors.at(3)});
            pairs.push_back({split.factors.at(1), split.factors.at(2)});
            exps.push_back(e);
            exps.push_back(e);
        }
        // choose exponents n1, n2 per prime with |n1| + |n2| = e
        std::function<void(std::size_t, CycloInt)> rec = [&](std::size_t prime_idx, CycloInt acc) {
            if (prime_idx == exps.size()) {
                for (const CycloInt& u : units) {
                    CycloInt num = acc * u, den = acc.conj();
                    push_entry(out, IsometryHandle::from_cyclo_quotient(num, den), m,
                               "m10:" + format_cyclo(num) + "/" + format_cyclo(den), cap);
                }
                return;
            }
            unsigned e = exps[prime_idx];
            auto power = [&](const CycloInt& w, unsigned k) {
                CycloInt r(1L);
                for (unsigned i = 0; i < k; ++i) r = r * w;
                return r;
            };
            for (int n1 = -int(e); n1 <= int(e); ++n1) {
                unsigned a1 = unsigned(n1 < 0 ? -n1 : n1);
                unsigned a2 = e - a1;
                CycloInt f1 = power(pairs[prime_idx][n1 >= 0 ? 0 : 1], a1);
                if (a2 == 0) {
                    rec(prime_idx + 2, acc * f1);
                    continue;
                }
                for (int s2 : {+1, -1}) {
                    CycloInt f2 = power(pairs[prime_idx + 1][s2 > 0 ? 0 : 1], a2);
                    rec(prime_idx + 2, acc * f1 * f2);
                }
            }
        };
        rec(0, CycloInt(1L));
    }
}

// canonical representative of { +- tau^k q } : trace-minimal norm, canonical sign
QuatG canonical_scaling(const QuatG& q) {
    const GoldenRat tau(Rat(0), Rat(1)), tau_inv(Rat(-1), Rat(1)); // tau^{-1} = tau - 1
    auto tr = [](const QuatG& v) {
        GoldenRat u = v.norm();
        return Rat(2) * u.a() + u.b();
    };
    QuatG cur = q;
    auto scale = [](const QuatG& v, const GoldenRat& s) {
        return QuatG{v.w * s, v.x * s, v.y * s, v.z * s};
    };
    for (;;) {
        QuatG up = scale(cur, tau);
        if (tr(up) < tr(cur)) {
            cur = up;
            continue;
        }
        QuatG dn = scale(cur, tau_inv);
        if (tr(dn) < tr(cur)) {
            cur = dn;
            continue;
        }
        // break trace ties toward the larger rational part of the norm
        if (tr(up) == tr(cur) && up.norm().a() < cur.norm().a()) cur = up;
        else if (tr(dn) == tr(cur) && dn.norm().a() < cur.norm().a()) cur = dn;
        break;
    }
    if (!is_canonical_sign_golden(cur)) cur = -cur;
    return cur;
}

struct IcosianSweep {
    std::vector<QuatG> primitives; // canonical, deduplicated
    std::vector<Int> sigma;        // matching icosahedral indices
};

// squarefree part and squarefree test of a small positive integer
std::pair<long long, bool> squarefree_part(long long n) {
    long long sf = 1;
    bool clean = true;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e % 2) sf *= p;
        if (e >= 2) clean = false;
    }
    return {sf * n, clean};
}

// Primitive icosians covering every rotation with sigma <= sigma_cover.
// Rotations and primitive quaternions correspond up to the scalings +-tau^k,
// and a trace-minimal scaling always fits the scan box, so restricting to
// primitive points loses nothing.
IcosianSweep sweep_icosians(const Int& sigma_cover, unsigned threads) {
    const auto& ring = IcosianRing::instance();
    long long bound = IcosianRing::default_embedding_bound(sigma_cover);
    long long cover = sigma_cover.convert_to<long long>();
    std::vector<std::array<long long, 8>> coords;
    std::vector<long long> norms;
    ring.scan(bound, bound, [&](const std::array<long long, 8>& x, long long a, long long b) {
        long long n = (a * a + a * b - b * b) / 16;
        if (n > cover) return true; // primitive points index exactly their norm
        if (!ring.coords_primitive(x)) return true;
        coords.push_back(x);
        norms.push_back(n);
        return true;
    });
    std::vector<QuatG> prim(coords.size());
    parallel_for(coords.size(), threads, [&](std::size_t i) {
        std::vector<Int> x(coords[i].begin(), coords[i].end());
        prim[i] = canonical_scaling(ring.from_ring_coords(x));
    });
    IcosianSweep out;
    std::map<std::string, std::size_t> seen;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        std::string key = format_golden_quaternion(prim[i]);
        if (seen.emplace(std::move(key), i).second) {
            out.primitives.push_back(prim[i]);
            out.sigma.push_back(Int(norms[i]));
        }
    }
    return out;
}

void enumerate_icosahedral(StructureId id, const Int& sigma_max, std::vector<RotationEntry>& out,
                           unsigned threads, std::uint64_t cap) {
    // MC indices can exceed the icosahedral index of the same rotation by at
    // most the factor-4 spread of the commensurate modules
    Int cover = id == StructureId::MC ? 4 * sigma_max : sigma_max;
    IcosianSweep sweep = sweep_icosians(cover, threads);
    for (std::size_t i = 0; i < sweep.primitives.size(); ++i) {
        const QuatG& q = sweep.primitives[i];
        Int sigma = sweep.sigma[i];
        IsometryHandle h = IsometryHandle::from_golden_quaternion(q);
        if (id == StructureId::MC) {
            GoldenInt d = matrix_denominator_golden(*h.golden);
            sigma = abs(d.norm());
        }
        if (sigma > sigma_max) continue;
        push_entry(out, std::move(h), sigma, "gq:" + format_golden_quaternion(q), cap);
    }
}

void enumerate_h4(const Int& sigma_max, std::vector<RotationEntry>& out, std::uint64_t cap) {
    // no arithmetic index formula exists here; search admissible pairs inside
    // a heuristic norm box and keep what the oracle admits
    const auto& ring = IcosianRing::instance();
    std::vector<QuatG> qs;
    for (const QuatG& q : ring.enumerate_icosians(4 * sigma_max))
        if (ring.is_ring_primitive(q)) qs.push_back(q);
    for (const QuatG& q1 : qs) {
        for (const QuatG& q2c : qs) {
            for (int sign : {+1, -1}) {
                QuatG q2 = sign > 0 ? q2c : -q2c;
                IsometryHandle h = IsometryHandle::from_golden_pair(q1, q2);
                if (!h.golden) continue; // pair not admissible
                auto res = sigma_oracle(StructureId::H4, h);
                if (!res.finite || res.sigma > sigma_max) continue;
                push_entry(out, std::move(h), res.sigma,
                           "gp:" + format_golden_quaternion(q1) + format_golden_quaternion(q2),
                           cap);
            }
        }
    }
}

} // namespace

std::vector<RotationEntry> enumerate_rotations(StructureId id, const Int& sigma_max,
                                               unsigned threads, std::uint64_t cap) {
    if (sigma_max < 1) throw std::invalid_argument("enumerate_rotations: sigma_max < 1");
    std::vector<RotationEntry> out;
    switch (id) {
    case StructureId::Z2: enumerate_z2(sigma_max, out, cap); break;
    case StructureId::Z3:
    case StructureId::FCC:
    case StructureId::BCC: enumerate_cubic(id, sigma_max, out, threads, cap); break;
    case StructureId::Z4:
    case StructureId::D4: enumerate_d4_family(id, sigma_max, out, cap); break;
    case StructureId::M10: enumerate_m10(sigma_max, out, cap); break;
    case StructureId::MB:
    case StructureId::MP:
    case StructureId::MF:
    case StructureId::MC: enumerate_icosahedral(id, sigma_max, out, threads, cap); break;
    case StructureId::H4: enumerate_h4(sigma_max, out, cap); break;
    }
    std::sort(out.begin(), out.end(), [](const RotationEntry& a, const RotationEntry& b) {
        if (a.sigma != b.sigma) return a.sigma < b.sigma;
        return a.key < b.key;
    });
    return out;
}

std::map<Int, Int> rotation_counts(StructureId id, const Int& sigma_max, unsigned threads) {
    std::map<Int, Int> counts;
    if (id == StructureId::D4) {
        // bucket combinatorics; the pair map is 1:1 on (canonical q1, free-sign q2)
        auto qs = enumerate_quaternions(4 * sigma_max, true);
        std::map<Int, Int> per_norm;
        for (const auto& q : qs) per_norm[q.norm()] += 1;
        for (const auto& [n1, n2] : admissible_norm_pairs(4 * sigma_max)) {
            Int sf = lcm(odd_part(n1), odd_part(n2));
            if (sf > sigma_max) continue;
            auto i1 = per_norm.find(n1), i2 = per_norm.find(n2);
            if (i1 == per_norm.end() || i2 == per_norm.end()) continue;
            counts[sf] += i1->second * i2->second * 2;
        }
        return counts;
    }
    for (const auto& e : enumerate_rotations(id, sigma_max, threads)) counts[e.sigma] += 1;
    return counts;
}

std::set<Int> icosahedral_sigma_spectrum(const Int& norm_bound, long long embedding_bound,
                                         Int* covered) {
    const auto& ring = IcosianRing::instance();
    long long bound =
        embedding_bound > 0 ? embedding_bound : IcosianRing::default_embedding_bound(norm_bound);
    // every rotation of index sigma has a trace-minimal primitive preimage with
    // both embeddings of |q|^2 at most tau * sqrt(sigma), so the scan covers
    // sigma <= floor((bound / tau)^2); certify the floor exactly:
    // k <= b^2 (3 - sqrt5)/2  <=>  5 b^4 <= (3 b^2 - 2k)^2 while 3 b^2 >= 2k
    Int b2 = Int(bound) * bound;
    Int cov = Int((double(bound) / 1.6180339887498949) * (double(bound) / 1.6180339887498949));
    auto fits = [&](const Int& k) {
        Int rest = 3 * b2 - 2 * k;
        return rest >= 0 && 5 * b2 * b2 <= rest * rest;
    };
    while (!fits(cov)) --cov;
    while (fits(cov + 1)) ++cov;
    if (cov > norm_bound) cov = norm_bound;
    if (covered) *covered = cov;

    // primitive icosians realize their norm as the index, and every realized
    // index within the covered range is hit by a balanced primitive point
    std::set<Int> spectrum;
    std::set<long long> seen_norms;
    long long nmax = norm_bound.convert_to<long long>();
    ring.scan(bound, bound, [&](const std::array<long long, 8>& c, long long a, long long b) {
        long long n = (a * a + a * b - b * b) / 16;
        if (n > nmax || seen_norms.count(n)) return true;
        auto [sf, clean] = squarefree_part(n);
        (void)sf;
        if (!clean && !ring.coords_primitive(c)) return true;
        seen_norms.insert(n);
        spectrum.insert(Int(n));
        return true;
    });
    return spectrum;
}

CslOrbits classify_csls(StructureId id, const Int& sigma, std::uint64_t cap) {
    auto entries = enumerate_rotations(id, sigma, 1, cap);
    std::map<std::string, IntMat> csl_by_key;
    for (const auto& e : entries) {
        if (e.sigma != sigma) continue;
        auto res = sigma_oracle(id, e.handle);
        if (!res.finite || res.sigma != sigma || !res.csl_basis)
            throw std::logic_error("classify_csls: oracle disagrees with enumeration");
        csl_by_key.emplace(format_matrix(*res.csl_basis), *res.csl_basis);
    }
    CslOrbits out;
    std::map<std::string, std::size_t> index_of;
    for (auto& [key, mat] : csl_by_key) {
        index_of[key] = out.csls.size();
        out.csls.push_back(mat);
    }
    // orbit closure under the rotation point group
    std::vector<char> assigned(out.csls.size(), 0);
    const auto& group = point_rotations(id);
    for (std::size_t i = 0; i < out.csls.size(); ++i) {
        if (assigned[i]) continue;
        std::vector<std::size_t> orbit;
        std::vector<std::size_t> frontier{i};
        assigned[i] = 1;
        while (!frontier.empty()) {
            std::size_t cur = frontier.back();
            frontier.pop_back();
            orbit.push_back(cur);
            for (const IntMat& g : group) {
                IntMat moved = hnf(g * out.csls[cur]);
                auto it = index_of.find(format_matrix(moved));
                if (it == index_of.end())
                    throw std::logic_error("classify_csls: group action left the CSL set");
                if (!assigned[it->second]) {
                    assigned[it->second] = 1;
                    frontier.push_back(it->second);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        out.orbits.push_back(std::move(orbit));
    }
    return out;
}

} // namespace csl
