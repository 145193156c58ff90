#pragma once

#include "hclat/rational.hpp"
#include "hclat/scalar.hpp"

#include <array>
#include <string>
#include <vector>

namespace hclat {

/// 2x2 rational matrix, row-major: {a, b, c, d} = [[a, b], [c, d]].
struct Matrix2 {
    std::array<Rational, 4> m{Rational(0), Rational(0), Rational(0), Rational(0)};

    static Matrix2 elementary_e() { return {{Rational(0), Rational(1), Rational(0), Rational(0)}}; }
    static Matrix2 elementary_f() { return {{Rational(0), Rational(0), Rational(1), Rational(0)}}; }
    static Matrix2 elementary_h() { return {{Rational(1), Rational(0), Rational(0), Rational(-1)}}; }

    Rational trace() const { return m[0] + m[3]; }
    friend Matrix2 operator*(const Matrix2& a, const Matrix2& b);
    friend Matrix2 operator+(const Matrix2& a, const Matrix2& b);
    friend Matrix2 operator-(const Matrix2& a, const Matrix2& b);
    friend Matrix2 operator*(const Rational& s, const Matrix2& a);
    friend bool operator==(const Matrix2&, const Matrix2&) = default;
};

Matrix2 commutator(const Matrix2& a, const Matrix2& b);

/// Element cE*E + cF*F + cH*H of g_{n,m} (possibly after base change to Q).
struct LieElement {
    Rational e{0}, f{0}, h{0};

    static LieElement E() { return {Rational(1), Rational(0), Rational(0)}; }
    static LieElement F() { return {Rational(0), Rational(1), Rational(0)}; }
    static LieElement H() { return {Rational(0), Rational(0), Rational(1)}; }

    friend LieElement operator+(const LieElement& a, const LieElement& b) { return {a.e + b.e, a.f + b.f, a.h + b.h}; }
    friend LieElement operator-(const LieElement& a, const LieElement& b) { return {a.e - b.e, a.f - b.f, a.h - b.h}; }
    friend LieElement operator*(const Rational& s, const LieElement& a) { return {s * a.e, s * a.f, s * a.h}; }
    friend bool operator==(const LieElement&, const LieElement&) = default;
};

std::string to_string(const LieElement& x);

/// The split Z-form g_{n,m} of (sl2, T^1) with realization parameter q:
/// [H,E] = nE, [H,F] = -nF, [E,F] = mH; weights n, -n, 0;
/// alpha(E) = q e, alpha(F) = (nm/2q) f, alpha(H) = (n/2) h.
class ZForm {
public:
    ZForm(long n, long m, Rational q);

    long n() const { return n_; }
    long m() const { return m_; }
    const Rational& q() const { return q_; }

    LieElement bracket(const LieElement& x, const LieElement& y) const;
    Matrix2 realize(const LieElement& x) const;
    /// T^1-weight of E, F, H respectively: n, -n, 0.
    std::array<long, 3> weights() const { return {n_, -n_, 0}; }

    friend bool operator==(const ZForm&, const ZForm&) = default;

private:
    long n_;
    long m_;
    Rational q_;
};

ZForm make_zform(long n, long m, const Rational& q);

/// A rank-3 presentation of a candidate split Z-form: a basis x0, x1, x2 of
/// weight vectors, integer structure constants and a realization.
struct FormPresentation {
    std::array<long, 3> weights{};
    /// structure[i][j][k]: coefficient of x_k in [x_i, x_j].
    std::array<std::array<std::array<long, 3>, 3>, 3> structure{};
    std::array<Matrix2, 3> realization{};
};

FormPresentation presentation_of(const ZForm& g);

struct FormClass {
    long n;
    long m;
    Rational q_abs;  // representative of q in Q^x / {+-1}
    friend bool operator==(const FormClass&, const FormClass&) = default;
};

/// Normalizes a presentation to the (E, F, H) basis and reads off (n, m, |q|).
/// Throws DomainError("not a split Z-form: ...") on malformed input.
FormClass classify(const FormPresentation& table);

enum class SubalgebraLabel { Borel, OppositeBorel, Parabolic, ParabolicPrime, ParabolicDoublePrime, MaximalParabolic };

std::string to_string(SubalgebraLabel label);
SubalgebraLabel parse_subalgebra_label(const std::string& text);

struct Subalgebra {
    SubalgebraLabel label;
    std::vector<LieElement> basis;  // integer combinations of E, F, H
    CoefficientRing base_ring;
};

/// Throws DomainError naming the required specialization when the form's
/// parameters do not admit the label (q needs q = 1/2, q' needs q = nm,
/// q'' needs q = n and m = 2n).
Subalgebra subalgebra(const ZForm& g, SubalgebraLabel label);

/// True when [x, y] stays in the Z-span (over the subalgebra's base ring)
/// of the basis for every pair of basis vectors.
bool is_closed(const ZForm& g, const Subalgebra& s);

/// Coefficients of a generator in X, Y, H where (X, Y) is a parabolic basis.
struct IwasawaCoefficients {
    Rational x, y, h;
    friend bool operator==(const IwasawaCoefficients&, const IwasawaCoefficients&) = default;
};

struct IwasawaDecomposition {
    SubalgebraLabel label;
    IwasawaCoefficients e;
    IwasawaCoefficients f;
    CoefficientRing ring;
};

/// Splits E and F along g = q + t^1. Only defined for the labels q, q', q''.
IwasawaDecomposition iwasawa_decompose(const ZForm& g, const Subalgebra& s);

/// Writes `target` as x*X + y*Y + h*H; throws if X, Y, H are dependent.
IwasawaCoefficients solve_in_basis(const LieElement& x_vec, const LieElement& y_vec, const LieElement& target);

}  // namespace hclat
