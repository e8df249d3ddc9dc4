#include "csl/counting.hpp"

#include <cmath>
#include <stdexcept>

#include "csl/prime_split.hpp"

namespace csl {

Int MultiplicativeFunction::operator()(const Int& m) const {
    if (m < 1) throw std::domain_error("MultiplicativeFunction: argument < 1");
    Int out = 1;
    for (const auto& [p, r] : factor_integer(m)) out *= rule_(p, r);
    return out;
}

std::vector<Int> MultiplicativeFunction::table(std::uint64_t n) const {
    // factor sieve: spf[m] = smallest prime factor
    std::vector<std::uint32_t> spf(n + 1, 0);
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (spf[i]) continue;
        for (std::uint64_t j = i; j <= n; j += i)
            if (!spf[j]) spf[j] = std::uint32_t(i);
    }
    std::vector<Int> f(n + 1, Int(0));
    if (n >= 1) f[1] = 1;
    for (std::uint64_t m = 2; m <= n; ++m) {
        std::uint64_t p = spf[m], q = m, r = 0;
        while (q % p == 0) {
            q /= p;
            ++r;
        }
        // m = p^r * q with q coprime to p and q < m
        f[m] = f[q] * rule_(Int(p), unsigned(r));
    }
    f.erase(f.begin()); // 1-based table as f[0] -> f(1)
    return f;
}

namespace {

Int exact_div(const Int& a, const Int& b) {
    if (a % b != 0) throw std::logic_error("counting: non-exact division in a closed form");
    return a / b;
}

} // namespace

const MultiplicativeFunction& f_square() {
    static const MultiplicativeFunction f("square-csl", [](const Int& p, unsigned r) -> Int {
        (void)r;
        return p % 4 == 1 ? Int(2) : Int(0);
    });
    return f;
}

const MultiplicativeFunction& f_cubic3() {
    static const MultiplicativeFunction f("cubic-csl", [](const Int& p, unsigned r) -> Int {
        if (p == 2) return 0;
        return (p + 1) * pow_int(p, r - 1);
    });
    return f;
}

const MultiplicativeFunction& f_d4() {
    static const MultiplicativeFunction f("d4-csl", [](const Int& p, unsigned r) -> Int {
        if (p == 2) return 0;
        Int num = (p + 1) * pow_int(p, r - 1) * (pow_int(p, r + 1) + pow_int(p, r - 1) - 2);
        return exact_div(num, p - 1);
    });
    return f;
}

Int f_d4_prime_power_by_sum(const Int& p, unsigned r) {
    if (p == 2) return 0;
    auto f3 = [&](unsigned k) { return k == 0 ? Int(1) : f_cubic3().prime_power(p, k); };
    Int inner = f3(r);
    for (unsigned l = 1; 2 * l <= r; ++l) inner += 2 * f3(r - 2 * l);
    return f3(r) * inner;
}

const MultiplicativeFunction& f_z4() {
    static const MultiplicativeFunction f("z4-csl", [](const Int& p, unsigned r) -> Int {
        if (p == 2) return r == 1 ? Int(2) : Int(0);
        return f_d4().prime_power(p, r);
    });
    return f;
}

const MultiplicativeFunction& f_tenfold() {
    static const MultiplicativeFunction f("tenfold-csm", [](const Int& p, unsigned r) -> Int {
        // split primes contribute two independent generators; the coefficient
        // counts the exponent splittings |n1| + |n2| = r, which is 4r
        return p % 5 == 1 ? Int(4) * r : Int(0);
    });
    return f;
}

const MultiplicativeFunction& f_icosahedral() {
    static const MultiplicativeFunction f("icosahedral-csm", [](const Int& p, unsigned r) -> Int {
        if (p == 5) return 6 * pow_int(5, r - 1);
        Int res = p % 5;
        if (res == 2 || res == 3) {
            if (r % 2 != 0) return 0;
            return (p * p + 1) * pow_int(p, r - 2);
        }
        Int second = r >= 2 ? (r - 1) * pow_int(p, r - 2) : Int(0);
        return (p + 1) * ((r + 1) * pow_int(p, r - 1) + second);
    });
    return f;
}

const MultiplicativeFunction& f_mc() {
    static const MultiplicativeFunction f("golden-cubic-csm", [](const Int& p, unsigned r) -> Int {
        if (p == 2) {
            // Euler factor (1 + 4^{1-s}) / (1 - 4^{-s}) expands to 2 * 4^k at 4^k
            if (r % 2 != 0) return 0;
            return 2 * pow_int(4, r / 2);
        }
        return f_icosahedral().prime_power(p, r);
    });
    return f;
}

const MultiplicativeFunction& f_h4() {
    static const MultiplicativeFunction f("h4-csm", [](const Int& p, unsigned r) -> Int {
        if (p == 5) {
            Int num = 3 * pow_int(5, r - 1) * (pow_int(5, r + 1) + pow_int(5, r - 1) - 2);
            return exact_div(num, Int(2));
        }
        Int res = p % 5;
        if (res == 2 || res == 3) {
            if (r % 2 != 0) return 0;
            Int p2 = p * p;
            Int num = (p2 + 1) * pow_int(p, r - 2) * (pow_int(p, r + 2) + pow_int(p, r - 2) - 2);
            return exact_div(num, p2 - 1);
        }
        // split case: assemble in exact arithmetic, dividing at the end
        Int p2 = p * p, p4 = p2 * p2;
        Int head = 4 * p2 * (2 * (p2 + 1) + Int(r) * (p2 - 1));
        Int tail = pow_int(p, r) * (p2 + 1) *
                   (Int(r) * (p4 - 1) + p4 - 4 * p * p2 - 2 * p2 - 4 * p + 1);
        Int num = (p + 1) * (head + tail);
        Int den = (p - 1) * (p - 1) * (p - 1);
        // the closed form carries p^{r-4}; fold it in without negative powers
        if (r >= 4) return exact_div(num * pow_int(p, r - 4), den);
        return exact_div(num, den * pow_int(p, 4 - r));
    });
    return f;
}

const MultiplicativeFunction& sigma1() {
    static const MultiplicativeFunction f("sigma1", [](const Int& p, unsigned r) -> Int {
        Int s = 1, pk = 1;
        for (unsigned k = 1; k <= r; ++k) {
            pk *= p;
            s += pk;
        }
        return s;
    });
    return f;
}

const MultiplicativeFunction& structure_counting_function(StructureId id) {
    switch (id) {
    case StructureId::Z2: return f_square();
    case StructureId::Z3:
    case StructureId::FCC:
    case StructureId::BCC: return f_cubic3();
    case StructureId::D4: return f_d4();
    case StructureId::Z4: return f_z4();
    case StructureId::M10: return f_tenfold();
    case StructureId::MB:
    case StructureId::MP:
    case StructureId::MF: return f_icosahedral();
    case StructureId::MC: return f_mc();
    case StructureId::H4: return f_h4();
    }
    throw std::logic_error("structure_counting_function: unhandled structure");
}

Int f_sublattices(unsigned n, const Int& m) {
    if (n == 0 || m < 1) throw std::domain_error("f_sublattices: bad arguments");
    // sum over ordered factorizations d_1 ... d_n = m of prod d_i^{i-1}
    Int total = 0;
    std::function<void(unsigned, Int, Int)> rec = [&](unsigned pos, Int rest, Int weight) {
        if (pos + 1 == n) {
            total += weight * pow_int(rest, n - 1);
            return;
        }
        for (const Int& d : divisors(rest)) rec(pos + 1, rest / d, weight * pow_int(d, pos));
    };
    rec(0, m, 1);
    return total;
}

Int f_sublattices_recursive(unsigned n, const Int& m) {
    if (n == 0 || m < 1) throw std::domain_error("f_sublattices_recursive: bad arguments");
    if (n == 1) return 1;
    Int total = 0;
    for (const Int& d : divisors(m)) total += d * f_sublattices_recursive(n - 1, d);
    return total;
}

namespace {

const MultiplicativeFunction& square_sublattice_rule() {
    // ideals of the Gaussian ring by norm (Dedekind zeta coefficients)
    static const MultiplicativeFunction f("gauss-ideals", [](const Int& p, unsigned r) -> Int {
        if (p == 2) return 1;
        if (p % 4 == 1) return Int(r) + 1;
        return r % 2 == 0 ? Int(1) : Int(0);
    });
    return f;
}

const MultiplicativeFunction& primitive_square_rule() {
    static const MultiplicativeFunction f("primitive-square", [](const Int& p, unsigned r) -> Int {
        if (p == 2) return r == 1 ? Int(1) : Int(0);
        if (p % 4 == 1) return 2;
        return 0;
    });
    return f;
}

} // namespace

HierarchyCounts hierarchy_counts(const Int& m) {
    return {sigma1()(m), square_sublattice_rule()(m), primitive_square_rule()(m), f_square()(m)};
}

HierarchyCounts hierarchy_counts_by_enumeration(const Int& m) {
    // lattice points on the circle x^2 + y^2 = m, divided by the 4 units
    long long mm = m.convert_to<long long>();
    long long points = 0, primitive_points = 0;
    for (long long x = 0; x * x <= mm; ++x) {
        long long y2 = mm - x * x;
        long long y = (long long)std::sqrt((double)y2);
        while (y * y > y2) --y;
        while ((y + 1) * (y + 1) <= y2) ++y;
        if (y * y != y2) continue;
        int xs = x == 0 ? 1 : 2, ys = y == 0 ? 1 : 2;
        long long combos = (long long)xs * ys;
        points += combos;
        if (gcd(Int(x), Int(y)) == 1) primitive_points += combos;
    }
    HierarchyCounts h = hierarchy_counts(m);
    h.square = Int(points) / 4;
    h.primitive_square = Int(primitive_points) / 4;
    return h;
}

SeriesTable SeriesTable::materialize(const MultiplicativeFunction& f, std::uint64_t n) {
    return {f.name(), f.table(n)};
}

SeriesTable SeriesTable::zeta(std::uint64_t n) {
    return {"zeta", std::vector<Int>(n, Int(1))};
}

SeriesTable SeriesTable::zeta_shifted(std::uint64_t n) {
    std::vector<Int> c(n);
    for (std::uint64_t m = 1; m <= n; ++m) c[m - 1] = Int(m);
    return {"zeta(s-1)", std::move(c)};
}

SeriesTable SeriesTable::unit(std::uint64_t n) {
    std::vector<Int> c(n, Int(0));
    if (n) c[0] = 1;
    return {"unit", std::move(c)};
}

Int SeriesTable::at(std::uint64_t m) const {
    if (m < 1 || m > c_.size()) throw std::out_of_range("SeriesTable::at");
    return c_[m - 1];
}

SeriesTable SeriesTable::convolve(const SeriesTable& g, std::string name) const {
    std::uint64_t n = std::min(bound(), g.bound());
    std::vector<Int> h(n, Int(0));
    for (std::uint64_t a = 1; a <= n; ++a) {
        if (c_[a - 1] == 0) continue;
        for (std::uint64_t b = 1; a * b <= n; ++b) h[a * b - 1] += c_[a - 1] * g.c_[b - 1];
    }
    return {name.empty() ? name_ + "*" + g.name_ : std::move(name), std::move(h)};
}

SeriesTable SeriesTable::shifted() const {
    std::vector<Int> c = c_;
    for (std::uint64_t m = 1; m <= c.size(); ++m) c[m - 1] *= Int(m);
    return {name_ + "(s-1)", std::move(c)};
}

SeriesTable SeriesTable::inverse() const {
    if (c_.empty() || (c_[0] != 1 && c_[0] != -1))
        throw std::domain_error("SeriesTable::inverse: leading coefficient must be a unit");
    std::uint64_t n = bound();
    std::vector<Int> g(n, Int(0));
    g[0] = c_[0]; // 1/(+-1)
    for (std::uint64_t m = 2; m <= n; ++m) {
        Int acc = 0;
        for (const Int& d : divisors(Int(m))) {
            std::uint64_t dd = d.convert_to<std::uint64_t>();
            if (dd == m) continue;
            acc += g[dd - 1] * c_[m / dd - 1];
        }
        g[m - 1] = -c_[0] * acc;
    }
    return {name_ + "^-1", std::move(g)};
}

double summatory_deviation(const std::vector<Int>& table, double c, double k) {
    Int sum = 0;
    for (const Int& v : table) sum += v;
    double n = double(table.size());
    double expected = c * std::pow(n, k);
    return std::abs(sum.convert_to<double>() / expected - 1.0);
}

} // namespace csl
