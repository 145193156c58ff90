#include "hclat/zform.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>

namespace hclat {

Matrix2 operator*(const Matrix2& a, const Matrix2& b) {
    return {{a.m[0] * b.m[0] + a.m[1] * b.m[2], a.m[0] * b.m[1] + a.m[1] * b.m[3], a.m[2] * b.m[0] + a.m[3] * b.m[2],
             a.m[2] * b.m[1] + a.m[3] * b.m[3]}};
}

Matrix2 operator+(const Matrix2& a, const Matrix2& b) {
    return {{a.m[0] + b.m[0], a.m[1] + b.m[1], a.m[2] + b.m[2], a.m[3] + b.m[3]}};
}

Matrix2 operator-(const Matrix2& a, const Matrix2& b) {
    return {{a.m[0] - b.m[0], a.m[1] - b.m[1], a.m[2] - b.m[2], a.m[3] - b.m[3]}};
}

Matrix2 operator*(const Rational& s, const Matrix2& a) { return {{s * a.m[0], s * a.m[1], s * a.m[2], s * a.m[3]}}; }

Matrix2 commutator(const Matrix2& a, const Matrix2& b) { return a * b - b * a; }

std::string to_string(const LieElement& x) {
    std::ostringstream os;
    os << to_string(x.e) << "*E + " << to_string(x.f) << "*F + " << to_string(x.h) << "*H";
    return os.str();
}

ZForm::ZForm(long n, long m, Rational q) : n_(n), m_(m), q_(std::move(q)) {
    if (n_ < 1) throw DomainError("covering degree n must be positive, got " + std::to_string(n_));
    if (m_ < 1) throw DomainError("bracket scale m must be positive, got " + std::to_string(m_));
    if (q_ == 0) throw DomainError("realization parameter q must be nonzero");
}

ZForm make_zform(long n, long m, const Rational& q) { return ZForm(n, m, q); }

LieElement ZForm::bracket(const LieElement& x, const LieElement& y) const {
    // [E,F] = mH, [H,E] = nE, [H,F] = -nF.
    Rational n(n_), m(m_);
    LieElement out;
    out.h = m * (x.e * y.f - x.f * y.e);
    out.e = n * (x.h * y.e - x.e * y.h);
    out.f = -n * (x.h * y.f - x.f * y.h);
    return out;
}

Matrix2 ZForm::realize(const LieElement& x) const {
    Rational n(n_), m(m_);
    return x.e * q_ * Matrix2::elementary_e() + x.f * (n * m / (2 * q_)) * Matrix2::elementary_f() +
           x.h * (n / 2) * Matrix2::elementary_h();
}

FormPresentation presentation_of(const ZForm& g) {
    FormPresentation p;
    const std::array<LieElement, 3> basis{LieElement::E(), LieElement::F(), LieElement::H()};
    p.weights = g.weights();
    for (int i = 0; i < 3; ++i) {
        p.realization[static_cast<std::size_t>(i)] = g.realize(basis[static_cast<std::size_t>(i)]);
        for (int j = 0; j < 3; ++j) {
            LieElement b = g.bracket(basis[static_cast<std::size_t>(i)], basis[static_cast<std::size_t>(j)]);
            p.structure[i][j] = {to_long(b.e), to_long(b.f), to_long(b.h)};
        }
    }
    return p;
}

namespace {

[[noreturn]] void not_split(const std::string& why) { throw DomainError("not a split Z-form: " + why); }

bool is_multiple_of(const Matrix2& a, const Matrix2& unit, Rational& factor) {
    // unit is one of e, f, h; factor is read from its first nonzero slot.
    for (std::size_t i = 0; i < 4; ++i) {
        if (unit.m[i] != 0) {
            factor = a.m[i] / unit.m[i];
            return a == factor * unit;
        }
    }
    return false;
}

}  // namespace

FormClass classify(const FormPresentation& t) {
    int pos = -1, zero = -1, neg = -1;
    for (int i = 0; i < 3; ++i) {
        long w = t.weights[static_cast<std::size_t>(i)];
        if (w > 0 && pos < 0) pos = i;
        else if (w == 0 && zero < 0) zero = i;
        else if (w < 0 && neg < 0) neg = i;
        else not_split("weight spaces are not free of rank 1");
    }
    if (pos < 0 || zero < 0 || neg < 0) not_split("weight spaces are not free of rank 1");
    long n = t.weights[static_cast<std::size_t>(pos)];
    if (t.weights[static_cast<std::size_t>(neg)] != -n) not_split("weights are not of the form n, 0, -n");

    for (const auto& a : t.realization)
        if (a.trace() != 0) not_split("realization is not traceless");

    auto coords = [&](int i, int j) { return t.structure[i][j]; };
    // Antisymmetry and bracket compatibility of the realization.
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            auto c = coords(i, j);
            auto d = coords(j, i);
            for (int k = 0; k < 3; ++k)
                if (c[static_cast<std::size_t>(k)] != -d[static_cast<std::size_t>(k)])
                    not_split("bracket table is not antisymmetric");
            Matrix2 lhs;
            for (std::size_t k = 0; k < 3; ++k) lhs = lhs + Rational(c[k]) * t.realization[k];
            if (lhs != commutator(t.realization[static_cast<std::size_t>(i)], t.realization[static_cast<std::size_t>(j)]))
                not_split("realization does not preserve brackets");
        }
    }

    // H = psi(1) must realize to (n/2) h; allow the table to list -H.
    Rational hs;
    if (!is_multiple_of(t.realization[static_cast<std::size_t>(zero)], Matrix2::elementary_h(), hs) ||
        abs(hs) != make_rational(n, 2))
        not_split("weight-0 generator does not realize to +-(n/2) h");
    long h_sign = hs > 0 ? 1 : -1;

    Rational q;
    if (!is_multiple_of(t.realization[static_cast<std::size_t>(pos)], Matrix2::elementary_e(), q) || q == 0)
        not_split("positive root vector does not realize into the upper corner");

    // [E, F0] must be c * H0 with H = h_sign * H0.
    auto ef = coords(pos, neg);
    if (ef[static_cast<std::size_t>(pos)] != 0 || ef[static_cast<std::size_t>(neg)] != 0)
        not_split("[g_n, g_-n] is not contained in Z H");
    long c = ef[static_cast<std::size_t>(zero)] * h_sign;  // [E, F0] = c H
    if (c == 0) not_split("[g_n, g_-n] = 0");

    // [H, E] = nE must hold with the normalized H.
    auto he = coords(zero, pos);
    if (he[static_cast<std::size_t>(pos)] * h_sign != n || he[static_cast<std::size_t>(zero)] != 0 ||
        he[static_cast<std::size_t>(neg)] != 0)
        not_split("[H, E] != nE");

    return FormClass{n, std::labs(c), abs(q)};
}

std::string to_string(SubalgebraLabel label) {
    switch (label) {
        case SubalgebraLabel::Borel: return "b";
        case SubalgebraLabel::OppositeBorel: return "bbar";
        case SubalgebraLabel::Parabolic: return "q";
        case SubalgebraLabel::ParabolicPrime: return "qp";
        case SubalgebraLabel::ParabolicDoublePrime: return "qpp";
        case SubalgebraLabel::MaximalParabolic: return "qmax";
    }
    return "?";
}

SubalgebraLabel parse_subalgebra_label(const std::string& text) {
    if (text == "b") return SubalgebraLabel::Borel;
    if (text == "bbar") return SubalgebraLabel::OppositeBorel;
    if (text == "q") return SubalgebraLabel::Parabolic;
    if (text == "qp") return SubalgebraLabel::ParabolicPrime;
    if (text == "qpp") return SubalgebraLabel::ParabolicDoublePrime;
    if (text == "qmax") return SubalgebraLabel::MaximalParabolic;
    throw DomainError("unknown subalgebra label '" + text + "' (expected b, bbar, q, qp, qpp, qmax)");
}

namespace {

LieElement ints(long e, long f, long h) { return {Rational(e), Rational(f), Rational(h)}; }

}  // namespace

Subalgebra subalgebra(const ZForm& g, SubalgebraLabel label) {
    const long n = g.n(), m = g.m();
    const long nm = n * m;
    switch (label) {
        case SubalgebraLabel::Borel: return {label, {ints(1, 0, 0), ints(0, 0, 1)}, CoefficientRing::integers()};
        case SubalgebraLabel::OppositeBorel:
            return {label, {ints(0, 1, 0), ints(0, 0, 1)}, CoefficientRing::integers()};
        case SubalgebraLabel::Parabolic:
            if (g.q() != make_rational(1, 2))
                throw DomainError("the parabolic q requires realization parameter q = 1/2, got " + to_string(g.q()));
            return {label, {ints(-2 * nm, 1, 2 * m), ints(2 * nm, 1, 0)}, CoefficientRing::integers()};
        case SubalgebraLabel::MaximalParabolic:
            if (g.q() != make_rational(1, 2))
                throw DomainError("the maximal parabolic form requires q = 1/2, got " + to_string(g.q()));
            return {label, {ints(-2 * nm, 1, 2 * m), ints(-2 * n, 0, 1)}, CoefficientRing::integers()};
        case SubalgebraLabel::ParabolicPrime:
            if (g.q() != Rational(nm))
                throw DomainError("the parabolic q' requires q = nm = " + std::to_string(nm) + ", got " + to_string(g.q()));
            return {label, {ints(-1, 2 * nm, 2 * m), ints(1, 2 * nm, 0)}, CoefficientRing::integers()};
        case SubalgebraLabel::ParabolicDoublePrime:
            if (m != 2 * n || g.q() != Rational(n))
                throw DomainError("the parabolic q'' requires m = 2n and q = n (n = " + std::to_string(n) +
                                  ", m = " + std::to_string(m) + ", q = " + to_string(g.q()) + ")");
            return {label, {ints(-1, 1, 2), ints(1, 1, 0)}, CoefficientRing::integers()};
    }
    throw DomainError("unknown subalgebra label");
}

namespace {

Rational det3(const std::array<std::array<Rational, 3>, 3>& a) {
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

// Solves x*u + y*v = target over Q if possible (u, v independent).
bool solve_in_span(const LieElement& u, const LieElement& v, const LieElement& target, Rational& x, Rational& y) {
    const std::array<std::array<Rational, 2>, 3> rows{{{u.e, v.e}, {u.f, v.f}, {u.h, v.h}}};
    const std::array<Rational, 3> rhs{target.e, target.f, target.h};
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            Rational d = rows[i][0] * rows[j][1] - rows[i][1] * rows[j][0];
            if (d == 0) continue;
            x = (rhs[i] * rows[j][1] - rows[i][1] * rhs[j]) / d;
            y = (rows[i][0] * rhs[j] - rhs[i] * rows[j][0]) / d;
            return x * u + y * v == target;
        }
    }
    return false;
}

}  // namespace

bool is_closed(const ZForm& g, const Subalgebra& s) {
    if (s.basis.size() != 2) return false;
    LieElement b = g.bracket(s.basis[0], s.basis[1]);
    Rational x, y;
    if (!solve_in_span(s.basis[0], s.basis[1], b, x, y)) return false;
    return s.base_ring.contains(x) && s.base_ring.contains(y);
}

IwasawaCoefficients solve_in_basis(const LieElement& xv, const LieElement& yv, const LieElement& t) {
    const LieElement hv = LieElement::H();
    // Columns X, Y, H; rows E, F, H coordinates.
    std::array<std::array<Rational, 3>, 3> a{{{xv.e, yv.e, hv.e}, {xv.f, yv.f, hv.f}, {xv.h, yv.h, hv.h}}};
    Rational d = det3(a);
    if (d == 0) throw DomainError("X, Y, H are linearly dependent; no Iwasawa splitting");
    const std::array<Rational, 3> rhs{t.e, t.f, t.h};
    std::array<Rational, 3> sol;
    for (std::size_t col = 0; col < 3; ++col) {
        auto b = a;
        for (std::size_t row = 0; row < 3; ++row) b[row][col] = rhs[row];
        sol[col] = det3(b) / d;
    }
    return {sol[0], sol[1], sol[2]};
}

namespace {

// Smallest prime factor of the denominator that the ring does not invert.
long offending_prime(const Rational& x, const CoefficientRing& ring) {
    Integer d = x.get_den();
    for (long p = 2; d != 1; ++p) {
        if (mpz_divisible_ui_p(d.get_mpz_t(), static_cast<unsigned long>(p))) {
            if (!ring.contains(make_rational(1, p))) return p;
            while (mpz_divisible_ui_p(d.get_mpz_t(), static_cast<unsigned long>(p))) d /= p;
        }
    }
    return 0;
}

}  // namespace

IwasawaDecomposition iwasawa_decompose(const ZForm& g, const Subalgebra& s) {
    CoefficientRing ring = CoefficientRing::integers();
    switch (s.label) {
        case SubalgebraLabel::Parabolic:
        case SubalgebraLabel::ParabolicPrime: ring = CoefficientRing::localized(2 * g.n() * g.m()); break;
        case SubalgebraLabel::ParabolicDoublePrime: ring = CoefficientRing::localized(2); break;
        default: throw DomainError("Iwasawa decomposition is only defined for q, qp, qpp; got " + to_string(s.label));
    }
    IwasawaDecomposition out{s.label, solve_in_basis(s.basis[0], s.basis[1], LieElement::E()),
                             solve_in_basis(s.basis[0], s.basis[1], LieElement::F()), ring};
    for (const auto* c : {&out.e, &out.f}) {
        for (const auto* v : {&c->x, &c->y, &c->h}) {
            if (!ring.contains(*v)) {
                throw DomainError("Iwasawa coefficient " + to_string(*v) + " needs " +
                                  std::to_string(offending_prime(*v, ring)) + " inverted, which " + ring.name() +
                                  " does not do");
            }
        }
    }
    return out;
}

}  // namespace hclat
