#include "csl/lattice.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

#include "csl/errors.hpp"

namespace csl {

namespace {

Int content_with_den(const IntMat& h, const Int& den) {
    Int g = den;
    for (size_t i = 0; i < h.rows(); ++i)
        for (size_t j = 0; j < h.cols(); ++j) g = gcd(g, h(i, j));
    return g;
}

// lower-triangular forward substitution: solve H * x = b over Q
std::vector<Rat> solve_lower(const IntMat& h, const std::vector<Rat>& b) {
    size_t n = h.rows();
    std::vector<Rat> x(n);
    for (size_t i = 0; i < n; ++i) {
        Rat acc = b[i];
        for (size_t j = 0; j < i; ++j) acc -= Rat(h(i, j)) * x[j];
        x[i] = acc / Rat(h(i, i));
    }
    return x;
}

} // namespace

Lattice Lattice::standard(size_t n) { return {IntMat::identity(n), Int(1)}; }

Lattice Lattice::from_generators(const IntMat& gens, const Int& den) {
    if (den <= 0) throw std::invalid_argument("Lattice: denominator must be positive");
    IntMat h = hnf(gens);
    Int g = content_with_den(h, den);
    if (g > 1) {
        IntMat r(h.rows(), h.cols());
        for (size_t i = 0; i < h.rows(); ++i)
            for (size_t j = 0; j < h.cols(); ++j) r(i, j) = h(i, j) / g;
        return {std::move(r), den / g};
    }
    return {std::move(h), den};
}

Lattice Lattice::from_integer_basis(const IntMat& basis) {
    if (basis.rows() != basis.cols())
        throw std::invalid_argument("Lattice: basis must be square");
    return from_generators(basis, Int(1));
}

Lattice Lattice::from_basis(const RatMat& basis) {
    if (basis.rows() != basis.cols())
        throw std::invalid_argument("Lattice: basis must be square");
    Int den = 1;
    for (size_t i = 0; i < basis.rows(); ++i)
        for (size_t j = 0; j < basis.cols(); ++j) den = lcm(den, denominator(basis(i, j)));
    IntMat m(basis.rows(), basis.cols());
    for (size_t i = 0; i < basis.rows(); ++i)
        for (size_t j = 0; j < basis.cols(); ++j) {
            Rat v = basis(i, j) * Rat(den);
            m(i, j) = csl::numerator(v);
        }
    return from_generators(m, den);
}

RatMat Lattice::basis() const {
    RatMat b(h_.rows(), h_.cols());
    for (size_t i = 0; i < h_.rows(); ++i)
        for (size_t j = 0; j < h_.cols(); ++j) b(i, j) = Rat(h_(i, j), den_);
    return b;
}

bool commensurate(const Lattice& a, const Lattice& b) {
    // over Q the coordinate matrix is always rational, so full-rank lattices
    // of equal dimension are automatically commensurate
    return a.dim() == b.dim();
}

namespace {

// coordinates of inner in the basis of outer: outer_basis^{-1} * inner_basis
RatMat coordinate_matrix(const Lattice& outer, const Lattice& inner) {
    size_t n = outer.dim();
    RatMat z(n, n);
    Rat scale = Rat(outer.den(), inner.den());
    for (size_t col = 0; col < n; ++col) {
        std::vector<Rat> b(n);
        for (size_t i = 0; i < n; ++i) b[i] = Rat(inner.numerator()(i, col)) * scale;
        auto x = solve_lower(outer.numerator(), b);
        for (size_t i = 0; i < n; ++i) z(i, col) = x[i];
    }
    return z;
}

} // namespace

bool is_sublattice(const Lattice& outer, const Lattice& inner) {
    if (outer.dim() != inner.dim()) return false;
    RatMat z = coordinate_matrix(outer, inner);
    for (size_t i = 0; i < z.rows(); ++i)
        for (size_t j = 0; j < z.cols(); ++j)
            if (denominator(z(i, j)) != 1) return false;
    return true;
}

Int lattice_index(const Lattice& outer, const Lattice& inner) {
    if (outer.dim() != inner.dim())
        throw std::domain_error("lattice_index: dimension mismatch");
    RatMat z = coordinate_matrix(outer, inner);
    for (size_t i = 0; i < z.rows(); ++i)
        for (size_t j = 0; j < z.cols(); ++j)
            if (denominator(z(i, j)) != 1) {
                std::ostringstream os;
                os << "lattice_index: not a sublattice, coordinate (" << i << "," << j
                   << ") = " << z(i, j) << " is non-integral";
                throw std::domain_error(os.str());
            }
    Rat d = z.det();
    Int idx = abs(numerator(d));
    if (idx == 0) throw std::domain_error("lattice_index: singular coordinates");
    return idx;
}

Lattice lattice_sum(const Lattice& a, const Lattice& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("lattice_sum: dimension mismatch");
    size_t n = a.dim();
    Int d = lcm(a.den(), b.den());
    Int fa = d / a.den(), fb = d / b.den();
    IntMat gens(n, 2 * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            gens(i, j) = a.numerator()(i, j) * fa;
            gens(i, n + j) = b.numerator()(i, j) * fb;
        }
    return Lattice::from_generators(gens, d);
}

Lattice dual(const Lattice& a) {
    // basis of the dual is (B^{-1})^t; with B = H/den this is den * (H^{-1})^t,
    // and det(H) clears the triangular inverse to an integer matrix
    size_t n = a.dim();
    const IntMat& h = a.numerator();
    Int dh = h.det(); // positive: Hermite diagonal
    IntMat num(n, n);
    for (size_t col = 0; col < n; ++col) {
        std::vector<Rat> e(n, Rat(0));
        e[col] = Rat(dh);
        auto x = solve_lower(h, e); // column of det * H^{-1}
        for (size_t i = 0; i < n; ++i) {
            Rat v = x[i] * Rat(a.den());
            if (denominator(v) != 1) throw std::logic_error("dual: non-integral adjugate");
            num(col, i) = numerator(v); // transposed placement
        }
    }
    return Lattice::from_generators(num, dh);
}

Lattice intersect(const Lattice& a, const Lattice& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("intersect: dimension mismatch");
    return dual(lattice_sum(dual(a), dual(b)));
}

std::vector<Int> snf_divisors(const Lattice& outer, const Lattice& inner) {
    RatMat z = coordinate_matrix(outer, inner);
    IntMat zi(z.rows(), z.cols());
    for (size_t i = 0; i < z.rows(); ++i)
        for (size_t j = 0; j < z.cols(); ++j) {
            if (denominator(z(i, j)) != 1)
                throw std::domain_error("snf_divisors: not a sublattice");
            zi(i, j) = numerator(z(i, j));
        }
    return smith_divisors(zi);
}

namespace {

void diagonal_tuples(unsigned n, const Int& m,
                     const std::function<void(const std::vector<Int>&)>& emit) {
    std::vector<Int> diag(n);
    std::function<void(unsigned, Int)> rec = [&](unsigned pos, Int rest) {
        if (pos + 1 == n) {
            diag[pos] = rest;
            emit(diag);
            return;
        }
        for (const Int& d : divisors(rest)) {
            diag[pos] = d;
            rec(pos + 1, rest / d);
        }
    };
    rec(0, m);
}

} // namespace

Int count_sublattices_by_enumeration(unsigned n, const Int& m) {
    Int total = 0;
    diagonal_tuples(n, m, [&](const std::vector<Int>& diag) {
        Int cells = 1;
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < i; ++j) cells *= diag[i];
        total += cells;
    });
    return total;
}

std::vector<IntMat> enumerate_sublattices(unsigned n, const Int& m, std::uint64_t cap) {
    if (n == 0 || m < 1) throw std::invalid_argument("enumerate_sublattices: bad arguments");
    Int predicted = count_sublattices_by_enumeration(n, m);
    if (predicted > Int(cap)) {
        std::ostringstream os;
        os << "rank=" << n << " index=" << m << " count=" << predicted;
        throw resource_cap_error("enumerate_sublattices: count exceeds cap", os.str());
    }

    std::vector<IntMat> out;
    diagonal_tuples(n, m, [&](const std::vector<Int>& diag) {
        // mixed-radix counter over the below-diagonal cells, row-major
        std::vector<std::pair<unsigned, unsigned>> cells;
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < i; ++j) cells.emplace_back(i, j);
        std::vector<Int> val(cells.size(), Int(0));
        for (;;) {
            IntMat h(n, n);
            for (unsigned i = 0; i < n; ++i) h(i, i) = diag[i];
            for (size_t c = 0; c < cells.size(); ++c) h(cells[c].first, cells[c].second) = val[c];
            out.push_back(std::move(h));
            // increment
            size_t c = cells.size();
            while (c > 0) {
                --c;
                val[c] += 1;
                if (val[c] < diag[cells[c].first]) break;
                val[c] = 0;
                if (c == 0) return;
            }
            if (cells.empty()) return;
        }
    });
    return out;
}

} // namespace csl
