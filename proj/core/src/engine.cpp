#include "csl/engine.hpp"

#include <sstream>
#include <stdexcept>

#include "csl/icosian.hpp"
#include "csl/prime_split.hpp"

namespace csl {

// ---------------------------------------------------------------------------
// handle construction

namespace {

void validate_rational(const RatMat& m) {
    if (m.rows() != m.cols()) throw std::domain_error("isometry: matrix not square");
    if (!is_orthogonal(m)) throw std::domain_error("isometry: matrix not orthogonal");
}

void validate_golden(const Mat<GoldenRat>& m) {
    if (m.rows() != m.cols()) throw std::domain_error("isometry: matrix not square");
    if (!is_orthogonal_golden(m)) throw std::domain_error("isometry: matrix not orthogonal");
}

std::optional<RatMat> golden_to_rational(const Mat<GoldenRat>& m) {
    RatMat r(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j).b() != 0) return std::nullopt;
            r(i, j) = m(i, j).a();
        }
    return r;
}

Mat<GoldenRat> rational_to_golden(const RatMat& m) {
    Mat<GoldenRat> g(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) g(i, j) = GoldenRat(m(i, j), Rat(0));
    return g;
}

} // namespace

bool is_orthogonal(const RatMat& m) {
    return m * m.transposed() == RatMat::identity(m.rows());
}

bool is_orthogonal_golden(const Mat<GoldenRat>& m) {
    Mat<GoldenRat> p = m * m.transposed(), id(m.rows(), m.rows());
    for (size_t i = 0; i < m.rows(); ++i) id(i, i) = GoldenRat(Rat(1), Rat(0));
    return p == id;
}

IsometryHandle IsometryHandle::from_matrix(RatMat m) {
    validate_rational(m);
    IsometryHandle h;
    h.rational = std::move(m);
    return h;
}

IsometryHandle IsometryHandle::from_golden_matrix(Mat<GoldenRat> m) {
    validate_golden(m);
    IsometryHandle h;
    if (auto r = golden_to_rational(m)) h.rational = *r;
    h.golden = std::move(m);
    return h;
}

IsometryHandle IsometryHandle::from_quaternion(const QuatZ& q) {
    if (q.is_zero()) throw std::domain_error("isometry: zero quaternion");
    IsometryHandle h;
    h.rational = cayley_rotation(to_rational(q));
    h.quat = q;
    return h;
}

IsometryHandle IsometryHandle::from_pair(const QuatZ& q1, const QuatZ& q2) {
    if (q1.is_zero() || q2.is_zero()) throw std::domain_error("isometry: zero quaternion");
    IsometryHandle h;
    h.quat_pair = {q1, q2};
    Int s;
    if (perfect_square(q1.norm() * q2.norm(), s)) {
        RatMat m = pair_map(to_rational(q1), to_rational(q2));
        RatMat r(4, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) r(i, j) = m(i, j) / Rat(s);
        validate_rational(r);
        h.rational = std::move(r);
    }
    return h;
}

IsometryHandle IsometryHandle::from_golden_quaternion(const QuatG& q) {
    if (q.is_zero()) throw std::domain_error("isometry: zero quaternion");
    IsometryHandle h;
    h.golden = cayley_rotation(q);
    if (auto r = golden_to_rational(*h.golden)) h.rational = *r;
    h.golden_quat = q;
    return h;
}

IsometryHandle IsometryHandle::from_golden_pair(const QuatG& q1, const QuatG& q2) {
    if (q1.is_zero() || q2.is_zero()) throw std::domain_error("isometry: zero quaternion");
    IsometryHandle h;
    h.golden_pair = {q1, q2};
    GoldenRat n = q1.norm() * q2.norm();
    if (n.is_integral()) {
        if (auto s = golden_sqrt(n.to_integer())) {
            GoldenRat inv = GoldenRat(*s).inverse();
            Mat<GoldenRat> m = pair_map(q1, q2);
            Mat<GoldenRat> r(4, 4);
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) r(i, j) = m(i, j) * inv;
            validate_golden(r);
            h.golden = std::move(r);
            if (auto rr = golden_to_rational(*h.golden)) h.rational = *rr;
        }
    }
    return h;
}

IsometryHandle IsometryHandle::from_gauss_quotient(const GaussInt& num, const GaussInt& den) {
    if (num.is_zero() || den.is_zero()) throw std::domain_error("isometry: zero quotient");
    IsometryHandle h;
    h.gauss_quotient = {num, den};
    if (num.norm() == den.norm()) {
        // multiplication by num/den as a rotation of the plane
        GaussInt p = num * den.conj();
        Rat n(den.norm());
        RatMat r(2, 2);
        r(0, 0) = Rat(p.re()) / n;
        r(0, 1) = -Rat(p.im()) / n;
        r(1, 0) = Rat(p.im()) / n;
        r(1, 1) = Rat(p.re()) / n;
        validate_rational(r);
        h.rational = std::move(r);
    }
    return h;
}

IsometryHandle IsometryHandle::from_cyclo_quotient(const CycloInt& num, const CycloInt& den) {
    if (num.is_zero() || den.is_zero()) throw std::domain_error("isometry: zero quotient");
    IsometryHandle h;
    h.cyclo_quotient = {num, den};
    return h;
}

// ---------------------------------------------------------------------------
// denominators

Int matrix_denominator(const RatMat& m) {
    Int d = 1;
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) d = lcm(d, denominator(m(i, j)));
    return d;
}

GoldenInt matrix_denominator_golden(const Mat<GoldenRat>& m) {
    GoldenInt l(Int(1), Int(0));
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) {
            const GoldenRat& x = m(i, j);
            if (x.is_zero()) continue;
            Int n = lcm(denominator(x.a()), denominator(x.b()));
            if (n == 1) continue;
            GoldenInt alpha(numerator(x.a() * n), numerator(x.b() * n));
            // entry denominator ideal: n / gcd(alpha, n)
            GoldenInt g = golden_gcd(alpha, GoldenInt(n, Int(0)));
            GoldenInt d;
            if (!GoldenInt(n, Int(0)).divides_into(g, d))
                throw std::logic_error("matrix_denominator_golden: gcd does not divide");
            // lcm(l, d) = l * d / gcd(l, d)
            GoldenInt gg = golden_gcd(l, d), q;
            GoldenInt prod = l * d;
            if (!prod.divides_into(gg, q))
                throw std::logic_error("matrix_denominator_golden: lcm failure");
            l = q;
        }
    return unit_normalize(l).first;
}

// ---------------------------------------------------------------------------
// coincidence test and oracle

bool is_coincidence(StructureId id, const IsometryHandle& h) {
    const auto& inf = structure_info(id);
    if (id == StructureId::M10) {
        if (!h.cyclo_quotient) return false;
        const auto& [num, den] = *h.cyclo_quotient;
        return !num.is_zero() && !den.is_zero() && num.abs_squared() == den.abs_squared();
    }
    if (inf.golden_field) {
        return (h.golden && h.golden->rows() == inf.dim) ||
               (h.rational && h.rational->rows() == inf.dim);
    }
    // rational structures: entries must be rational of the right dimension
    return h.rational && h.rational->rows() == inf.dim;
}

namespace {

RatMat oracle_action(StructureId id, const IsometryHandle& h) {
    const auto& inf = structure_info(id);
    if (id == StructureId::M10) return action_matrix_tenfold(h.cyclo_quotient->first,
                                                             h.cyclo_quotient->second);
    if (inf.golden_field) {
        if (h.golden) return action_matrix_golden(id, *h.golden);
        return action_matrix_golden(id, rational_to_golden(*h.rational));
    }
    return action_matrix(id, *h.rational);
}

} // namespace

CoincidenceResult sigma_oracle(StructureId id, const IsometryHandle& h) {
    CoincidenceResult res;
    res.method = "oracle";
    if (!is_coincidence(id, h)) return res;
    RatMat a = oracle_action(id, h);
    Rat da = a.det();
    if (da != 1 && da != -1)
        throw std::logic_error("sigma_oracle: action matrix is not unimodular");
    size_t r = a.rows();
    Lattice std_lattice = Lattice::standard(r);
    Lattice image = Lattice::from_basis(a);
    Lattice meet = intersect(std_lattice, image);
    if (meet.den() != 1) throw std::logic_error("sigma_oracle: intersection left Z^r");
    Int sigma = 1;
    for (size_t i = 0; i < r; ++i) sigma *= meet.numerator()(i, i);
    res.finite = true;
    res.sigma = sigma;
    res.csl_basis = meet.numerator();
    return res;
}

// ---------------------------------------------------------------------------
// closed forms

namespace {

Int odd_part(Int n) {
    while (n % 2 == 0) n /= 2;
    return n;
}

QuatZ integer_quaternion_from(const Quat<Rat>& q) {
    Int d = 1;
    for (const Rat& c : q.components()) d = lcm(d, denominator(c));
    QuatZ z{numerator(q.w * d), numerator(q.x * d), numerator(q.y * d), numerator(q.z * d)};
    return make_primitive(z).first;
}

Int sigma_square_lattice(const GaussInt& num, const GaussInt& den) {
    GaussInt g = gauss_gcd(num, den);
    GaussInt a, b;
    if (!num.divides_into(g, a) || !den.divides_into(g, b))
        throw std::logic_error("gauss quotient reduction failed");
    if (a.norm() != b.norm())
        throw std::domain_error("sigma_closed_form: quotient is not unimodular");
    return a.norm();
}

Int sigma_tenfold(const CycloInt& num, const CycloInt& den) {
    CycloInt g = cyclo_gcd(num, den);
    CycloInt a, b;
    if (!num.divides_into(g, a) || !den.divides_into(g, b))
        throw std::logic_error("cyclo quotient reduction failed");
    if (a.abs_squared() != b.abs_squared())
        throw std::domain_error("sigma_closed_form: quotient is not unimodular");
    // the index collects one factor p per prime of the reduced numerator
    auto fac = factor_element(a);
    Int sigma = 1;
    for (const auto& [w, e] : fac.primes) sigma *= pow_int(w.norm(), e);
    Int check = a.norm();
    if (sigma != check) throw std::logic_error("sigma_tenfold: factor/norm mismatch");
    return sigma;
}

QuatZ require_primitive_quat(const IsometryHandle& h, const char* who) {
    QuatZ q;
    if (h.quat) {
        q = *h.quat;
    } else if (h.rational && h.rational->rows() == 3) {
        q = integer_quaternion_from(cayley_invert(*h.rational));
    } else {
        throw std::domain_error(std::string(who) + ": needs a quaternion parametrization");
    }
    if (!is_primitive(q))
        throw std::domain_error(std::string(who) +
                                ": quaternion not primitive; divide out its content first");
    return q;
}

} // namespace

template <typename F>
Quat<F> cayley_invert(const Mat<F>& r) {
    if (r.rows() != 3 || r.cols() != 3)
        throw std::invalid_argument("cayley_invert: need a 3x3 matrix");
    F t = r(0, 0) + r(1, 1) + r(2, 2);
    Quat<F> q;
    if (t + F(1L) != F(0L)) {
        q = Quat<F>(t + F(1L), r(2, 1) - r(1, 2), r(0, 2) - r(2, 0), r(1, 0) - r(0, 1));
    } else {
        // angle pi: read the axis off a nonzero row of r + 1
        for (size_t i = 0; i < 3; ++i) {
            F d = r(i, i) + F(1L);
            if (d == F(0L)) continue;
            Quat<F> cand(F(0L), r(i, 0), r(i, 1), r(i, 2));
            (i == 0 ? cand.x : i == 1 ? cand.y : cand.z) = d;
            q = cand;
            break;
        }
    }
    if (q.is_zero() || cayley_rotation(q) != r)
        throw std::domain_error("cayley_invert: matrix is not a rotation");
    return q;
}

template Quat<Rat> cayley_invert(const Mat<Rat>&);
template Quat<GoldenRat> cayley_invert(const Mat<GoldenRat>&);

Int icosian_gcd_sigma(const Mat<GoldenRat>& r0) {
    validate_golden(r0);
    Quat<GoldenRat> q = cayley_invert(r0);
    const auto& ring = IcosianRing::instance();
    GoldenRat scale = ring.primitive_scale(q);
    QuatG qm{q.w * scale, q.x * scale, q.y * scale, q.z * scale};
    GoldenRat u = qm.norm();
    Rat n = u.norm();
    if (denominator(n) != 1 || n <= 0)
        throw std::logic_error("icosian_gcd_sigma: norm of primitive preimage not a positive integer");
    return numerator(n);
}

Int sigma_closed_form(StructureId id, const IsometryHandle& h) {
    switch (id) {
    case StructureId::Z2: {
        if (h.gauss_quotient) return sigma_square_lattice(h.gauss_quotient->first,
                                                          h.gauss_quotient->second);
        if (h.rational && h.rational->rows() == 2) {
            const RatMat& m = *h.rational;
            if (m.det() != 1)
                throw std::domain_error("sigma_closed_form: reflections go through reflection_sigma");
            Int d = matrix_denominator(m);
            GaussInt num(numerator(m(0, 0) * d), numerator(m(1, 0) * d));
            return sigma_square_lattice(num, GaussInt(d, Int(0)));
        }
        throw std::domain_error("sigma_closed_form: Z2 needs a quotient or rational matrix");
    }
    case StructureId::Z3:
    case StructureId::FCC:
    case StructureId::BCC: {
        QuatZ q = require_primitive_quat(h, "sigma_closed_form");
        return odd_part(q.norm());
    }
    case StructureId::D4:
    case StructureId::Z4: {
        if (!h.quat_pair)
            throw std::domain_error("sigma_closed_form: needs an admissible quaternion pair");
        const auto& [q1, q2] = *h.quat_pair;
        if (!is_primitive(q1) || !is_primitive(q2))
            throw std::domain_error(
                "sigma_closed_form: pair not primitive; divide out the contents first");
        if (!h.rational)
            throw std::domain_error("sigma_closed_form: pair is not admissible");
        Int sf = lcm(odd_part(q1.norm()), odd_part(q2.norm()));
        if (id == StructureId::D4) return sf;
        return lcm(sf, matrix_denominator(*h.rational));
    }
    case StructureId::M10: {
        if (!h.cyclo_quotient)
            throw std::domain_error("sigma_closed_form: M10 needs a cyclotomic quotient");
        return sigma_tenfold(h.cyclo_quotient->first, h.cyclo_quotient->second);
    }
    case StructureId::MB:
    case StructureId::MP:
    case StructureId::MF: {
        if (h.golden) return icosian_gcd_sigma(*h.golden);
        if (h.rational && h.rational->rows() == 3)
            return icosian_gcd_sigma(rational_to_golden(*h.rational));
        throw std::domain_error("sigma_closed_form: needs a 3d matrix over Q(tau)");
    }
    case StructureId::MC: {
        Mat<GoldenRat> m;
        if (h.golden) m = *h.golden;
        else if (h.rational && h.rational->rows() == 3) m = rational_to_golden(*h.rational);
        else throw std::domain_error("sigma_closed_form: needs a 3d matrix over Q(tau)");
        GoldenInt d = matrix_denominator_golden(m);
        return abs(d.norm());
    }
    case StructureId::H4:
        throw std::domain_error(
            "sigma_closed_form: no arithmetic formula for the H4 module; use sigma_oracle");
    }
    throw std::logic_error("sigma_closed_form: unhandled structure");
}

namespace {

// canonical structure-preserving reflections: the x-axis mirror in the plane,
// the inversion in 3-space, quaternion conjugation in 4-space
template <typename F>
Mat<F> canonical_reflection(size_t d) {
    Mat<F> s(d, d);
    for (size_t i = 0; i < d; ++i) s(i, i) = F(d == 3 ? -1L : (i == 0 ? 1L : -1L));
    return s;
}

} // namespace

Int reflection_sigma(StructureId id, const IsometryHandle& h) {
    const auto& inf = structure_info(id);
    if (h.rational && !inf.golden_field && id != StructureId::M10) {
        const RatMat& m = *h.rational;
        if (m.det() != -1)
            throw std::domain_error("reflection_sigma: determinant is not -1");
        RatMat rot = m * canonical_reflection<Rat>(m.rows());
        if (rot.det() != 1) throw std::logic_error("reflection_sigma: factorization failed");
        return sigma_oracle(id, IsometryHandle::from_matrix(rot)).sigma;
    }
    if (h.golden && inf.golden_field) {
        Mat<GoldenRat> rot = *h.golden * canonical_reflection<GoldenRat>(h.golden->rows());
        auto res = sigma_oracle(id, IsometryHandle::from_golden_matrix(rot));
        if (!res.finite) throw std::domain_error("reflection_sigma: rotation part not coincident");
        return res.sigma;
    }
    throw std::domain_error("reflection_sigma: unsupported handle for this structure");
}

Int sigma_on_lattice(const Lattice& l, const RatMat& iso) {
    validate_rational(iso);
    RatMat b = l.basis();
    RatMat a = b.inverse() * iso * b;
    Lattice std_lattice = Lattice::standard(a.rows());
    Lattice meet = intersect(std_lattice, Lattice::from_basis(a));
    return lattice_index(std_lattice, meet);
}

bool module_dual_check(StructureId id) {
    std::vector<RatMat> samples;
    auto add_quat = [&](long w, long x, long y, long z) {
        samples.push_back(cayley_rotation(to_rational(QuatZ{Int(w), Int(x), Int(y), Int(z)})));
    };
    Lattice primal = Lattice::standard(1), partner = Lattice::standard(1);
    switch (id) {
    case StructureId::Z2: {
        for (auto [a, b] : {std::pair<long, long>{2, 1}, {3, 2}, {4, 1}}) {
            auto h = IsometryHandle::from_gauss_quotient(GaussInt(Int(a), Int(b)),
                                                         GaussInt(Int(a), Int(-b)));
            samples.push_back(*h.rational);
        }
        primal = structure_lattice(id);
        partner = dual(primal);
        break;
    }
    case StructureId::Z3:
    case StructureId::FCC:
    case StructureId::BCC: {
        add_quat(0, 1, 1, 1);
        add_quat(1, 1, 1, 0);
        add_quat(2, 1, 0, 0);
        add_quat(1, 2, 3, 4);
        add_quat(3, 1, 1, 1);
        primal = structure_lattice(id);
        partner = id == StructureId::FCC
                      ? structure_lattice(StructureId::BCC)
                      : (id == StructureId::BCC ? structure_lattice(StructureId::FCC)
                                                : dual(primal));
        break;
    }
    case StructureId::Z4:
    case StructureId::D4: {
        std::vector<std::pair<QuatZ, QuatZ>> pairs = {
            {{Int(0), Int(1), Int(1), Int(1)}, {Int(0), Int(1), Int(1), Int(1)}},
            {{Int(1), Int(1), Int(1), Int(0)}, {Int(1), Int(1), Int(1), Int(0)}},
            {{Int(1), Int(0), Int(0), Int(0)}, {Int(1), Int(1), Int(1), Int(1)}},
            {{Int(1), Int(1), Int(0), Int(0)}, {Int(1), Int(1), Int(0), Int(0)}},
            {{Int(1), Int(2), Int(2), Int(0)}, {Int(0), Int(1), Int(1), Int(1)}},
        };
        for (const auto& [q1, q2] : pairs) {
            auto h = IsometryHandle::from_pair(q1, q2);
            if (h.rational) samples.push_back(*h.rational);
        }
        primal = structure_lattice(id);
        partner = dual(primal);
        break;
    }
    default:
        throw std::domain_error("module_dual_check: no declared dual for this structure");
    }
    for (const RatMat& r : samples)
        if (sigma_on_lattice(primal, r) != sigma_on_lattice(partner, r)) return false;
    return !samples.empty();
}

} // namespace csl
