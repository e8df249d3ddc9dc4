#include "csl/hnf.hpp"

#include <stdexcept>

namespace csl {

Int xgcd(const Int& a, const Int& b, Int& s, Int& t) {
    Int r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        r0 = r1; r1 = r2;
        Int s2 = s0 - q * s1;
        s0 = s1; s1 = s2;
        Int t2 = t0 - q * t1;
        t0 = t1; t1 = t2;
    }
    if (r0 < 0) {
        r0 = -r0; s0 = -s0; t0 = -t0;
    }
    s = s0; t = t0;
    return r0;
}

IntMat hnf(const IntMat& generators) {
    size_t n = generators.rows(), k = generators.cols();
    if (k < n) throw std::invalid_argument("hnf: fewer generators than rank");
    IntMat a = generators;

    for (size_t row = 0; row < n; ++row) {
        size_t c = row;
        // bring a nonzero entry into the pivot column
        size_t j = c;
        while (j < k && a(row, j) == 0) ++j;
        if (j == k) throw std::domain_error("hnf: rank-deficient generators");
        if (j != c)
            for (size_t i = 0; i < n; ++i) std::swap(a(i, c), a(i, j));
        // clear the rest of the row with column gcd combinations
        for (size_t jj = c + 1; jj < k; ++jj) {
            if (a(row, jj) == 0) continue;
            Int s, t;
            Int g = xgcd(a(row, c), a(row, jj), s, t);
            Int u = a(row, c) / g, v = a(row, jj) / g;
            for (size_t i = row; i < n; ++i) {
                Int x = a(i, c), y = a(i, jj);
                a(i, c) = s * x + t * y;
                a(i, jj) = u * y - v * x;
            }
        }
        if (a(row, c) < 0)
            for (size_t i = row; i < n; ++i) a(i, c) = -a(i, c);
    }

    IntMat h(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) h(i, j) = a(i, j);

    // reduce entries left of each pivot into [0, diag)
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < i; ++j) {
            Int q = floor_div(h(i, j), h(i, i));
            if (q == 0) continue;
            for (size_t r = i; r < n; ++r) h(r, j) -= q * h(r, i);
        }
    }
    return h;
}

bool is_hnf(const IntMat& m) {
    if (m.rows() != m.cols()) return false;
    size_t n = m.rows();
    for (size_t i = 0; i < n; ++i) {
        if (m(i, i) <= 0) return false;
        for (size_t j = i + 1; j < n; ++j)
            if (m(i, j) != 0) return false;
        for (size_t j = 0; j < i; ++j)
            if (m(i, j) < 0 || m(i, j) >= m(i, i)) return false;
    }
    return true;
}

std::vector<Int> smith_divisors(IntMat m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("smith_divisors: not square");
    size_t n = m.rows();

    for (size_t k = 0; k < n; ++k) {
        // move a nonzero pivot to (k, k)
        size_t pi = k, pj = k;
        bool found = false;
        for (size_t i = k; i < n && !found; ++i)
            for (size_t j = k; j < n && !found; ++j)
                if (m(i, j) != 0) {
                    pi = i;
                    pj = j;
                    found = true;
                }
        if (!found) throw std::domain_error("smith_divisors: singular matrix");
        if (pi != k)
            for (size_t j = 0; j < n; ++j) std::swap(m(k, j), m(pi, j));
        if (pj != k)
            for (size_t i = 0; i < n; ++i) std::swap(m(i, k), m(i, pj));

        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (size_t i = k + 1; i < n; ++i) {
                if (m(i, k) == 0) continue;
                Int s, t;
                Int g = xgcd(m(k, k), m(i, k), s, t);
                Int u = m(k, k) / g, v = m(i, k) / g;
                for (size_t j = k; j < n; ++j) {
                    Int x = m(k, j), y = m(i, j);
                    m(k, j) = s * x + t * y;
                    m(i, j) = u * y - v * x;
                }
            }
            for (size_t j = k + 1; j < n; ++j) {
                if (m(k, j) == 0) continue;
                Int s, t;
                Int g = xgcd(m(k, k), m(k, j), s, t);
                Int u = m(k, k) / g, v = m(k, j) / g;
                for (size_t i = k; i < n; ++i) {
                    Int x = m(i, k), y = m(i, j);
                    m(i, k) = s * x + t * y;
                    m(i, j) = u * y - v * x;
                }
                dirty = true; // the column step may have refilled the row
            }
        }
    }

    std::vector<Int> d(n);
    for (size_t i = 0; i < n; ++i) d[i] = abs(m(i, i));
    // enforce the divisibility chain
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (d[i] != 0 && d[j] % d[i] != 0) {
                Int g = gcd(d[i], d[j]);
                d[j] = d[i] * d[j] / g;
                d[i] = g;
            }
    return d;
}

} // namespace csl
