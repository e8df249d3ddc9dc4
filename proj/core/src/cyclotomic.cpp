#include "csl/cyclotomic.hpp"

namespace csl {

CycloInt CycloInt::operator*(const CycloInt& o) const {
    // schoolbook product, then reduce x^4 = -(1+x+x^2+x^3), x^5 = 1, x^6 = x
    Int acc[7];
    for (int k = 0; k < 7; ++k) acc[k] = 0;
    for (int i = 0; i < 4; ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; j < 4; ++j) acc[i + j] += c_[i] * o.c_[j];
    }
    acc[0] += acc[5];
    acc[1] += acc[6];
    return {acc[0] - acc[4], acc[1] - acc[4], acc[2] - acc[4], acc[3] - acc[4]};
}

CycloInt CycloInt::galois(int k) const {
    if (k < 1 || k > 4) throw std::domain_error("CycloInt::galois: k must be 1..4");
    Int acc[5];
    for (int i = 0; i < 5; ++i) acc[i] = 0;
    for (int i = 0; i < 4; ++i) acc[(i * k) % 5] += c_[i];
    return {acc[0] - acc[4], acc[1] - acc[4], acc[2] - acc[4], acc[3] - acc[4]};
}

GoldenInt CycloInt::abs_squared() const {
    CycloInt y = *this * conj();
    return y.to_golden();
}

bool CycloInt::divides_into(const CycloInt& y, CycloInt& q) const {
    if (y.is_zero()) return false;
    CycloInt p = *this * y.galois(2) * y.galois(3) * y.galois(4);
    Int n = y.norm();
    for (int k = 0; k < 4; ++k)
        if (p[k] % n != 0) return false;
    q = CycloInt(p[0] / n, p[1] / n, p[2] / n, p[3] / n);
    return true;
}

std::pair<CycloInt, CycloInt> CycloInt::divmod(const CycloInt& y) const {
    if (y.is_zero()) throw std::domain_error("CycloInt::divmod: division by zero");
    CycloInt p = *this * y.galois(2) * y.galois(3) * y.galois(4);
    Int n = y.norm();
    Int q0[4];
    for (int k = 0; k < 4; ++k) q0[k] = round_div(p[k], n);
    // Q(x) is norm-Euclidean; search the rounding neighbourhood for a
    // remainder of smaller norm.
    CycloInt best_q, best_r;
    Int best = -1;
    for (int d0 = -1; d0 <= 1; ++d0)
        for (int d1 = -1; d1 <= 1; ++d1)
            for (int d2 = -1; d2 <= 1; ++d2)
                for (int d3 = -1; d3 <= 1; ++d3) {
                    CycloInt q(q0[0] + d0, q0[1] + d1, q0[2] + d2, q0[3] + d3);
                    CycloInt r = *this - y * q;
                    Int nr = r.norm();
                    if (best < 0 || nr < best) {
                        best = nr;
                        best_q = q;
                        best_r = r;
                    }
                }
    if (best >= y.norm()) throw std::logic_error("CycloInt::divmod: Euclidean step failed");
    return {best_q, best_r};
}

CycloInt cyclo_gcd(CycloInt x, CycloInt y) {
    if (x.is_zero() && y.is_zero())
        throw std::domain_error("cyclo_gcd: gcd(0, 0) is undefined");
    while (!y.is_zero()) {
        CycloInt r = x.divmod(y).second;
        x = y;
        y = r;
    }
    return x;
}

std::pair<CycloInt, CycloInt> unit_normalize(const CycloInt& x) {
    if (x.is_zero()) throw std::domain_error("unit_normalize: zero has no associate class");
    const CycloInt xi(Int(0), Int(1), Int(0), Int(0));
    CycloInt best = x, best_unit(1L);
    CycloInt pow(1L);
    for (int j = 0; j < 5; ++j) {
        for (int s = 0; s < 2; ++s) {
            CycloInt u = s ? -pow : pow;
            CycloInt cand = x * u;
            if (cand < best) {
                best = cand;
                best_unit = u;
            }
        }
        pow = pow * xi;
    }
    // x = unit * canonical; conjugation inverts every torsion unit
    return {best, best_unit.galois(4)};
}

} // namespace csl
