#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hclat/zform.hpp"

using namespace hclat;

namespace {

// realization written out by hand: E -> q e, F -> (nm/2q) f, H -> (n/2) h
Matrix2 by_hand(long n, long m, const Rational& q, char x) {
    switch (x) {
        case 'E': return q * Matrix2::elementary_e();
        case 'F': return (Rational(n * m) / (2 * q)) * Matrix2::elementary_f();
        default: return make_rational(n, 2) * Matrix2::elementary_h();
    }
}

}  // namespace

TEST_CASE("realization matches the matrices written out") {
    for (long n = 1; n <= 4; ++n)
        for (long m = 1; m <= 4; ++m)
            for (const Rational& q : {Rational(1), make_rational(-1, 2), Rational(3)}) {
                ZForm g(n, m, q);
                CHECK(g.realize(LieElement::E()) == by_hand(n, m, q, 'E'));
                CHECK(g.realize(LieElement::F()) == by_hand(n, m, q, 'F'));
                CHECK(g.realize(LieElement::H()) == by_hand(n, m, q, 'H'));
                // [H,E] = nE, [H,F] = -nF, [E,F] = mH through the realization
                CHECK(commutator(by_hand(n, m, q, 'H'), by_hand(n, m, q, 'E')) == Rational(n) * by_hand(n, m, q, 'E'));
                CHECK(commutator(by_hand(n, m, q, 'H'), by_hand(n, m, q, 'F')) == Rational(-n) * by_hand(n, m, q, 'F'));
                CHECK(commutator(by_hand(n, m, q, 'E'), by_hand(n, m, q, 'F')) == Rational(m) * by_hand(n, m, q, 'H'));
            }
}

TEST_CASE("bracket table") {
    ZForm g(3, 2, Rational(1));
    CHECK(g.bracket(LieElement::H(), LieElement::E()) == Rational(3) * LieElement::E());
    CHECK(g.bracket(LieElement::F(), LieElement::E()) == Rational(-2) * LieElement::H());
    CHECK(g.bracket(LieElement::E(), LieElement::E()) == LieElement{});
}

TEST_CASE("zero q is rejected") {
    CHECK_THROWS_AS(make_zform(1, 1, Rational(0)), DomainError);
    CHECK_THROWS_AS(make_zform(0, 1, Rational(1)), DomainError);
}

TEST_CASE("classification") {
    for (long n = 1; n <= 5; ++n)
        for (long m = 1; m <= 5; ++m)
            for (const Rational& q : {Rational(1), make_rational(1, 2), Rational(2)}) {
                FormClass c = classify(presentation_of(make_zform(n, m, q)));
                CHECK(c == FormClass{n, m, q});
                CHECK(classify(presentation_of(make_zform(n, m, -q))) == c);
            }
}

TEST_CASE("classification of a permuted, sign-flipped basis") {
    // basis (H, -F, E) of g_{2,3} with q = 5
    FormPresentation p = presentation_of(make_zform(2, 3, Rational(5)));
    FormPresentation r;
    const int perm[3] = {2, 1, 0};
    const long sign[3] = {1, -1, 1};
    for (int i = 0; i < 3; ++i) {
        r.weights[i] = p.weights[perm[i]];
        r.realization[i] = Rational(sign[i]) * p.realization[perm[i]];
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                r.structure[i][j][k] = sign[i] * sign[j] * sign[k] * p.structure[perm[i]][perm[j]][perm[k]];
    }
    CHECK(classify(r) == FormClass{2, 3, Rational(5)});
}

TEST_CASE("malformed presentations") {
    FormPresentation p = presentation_of(make_zform(1, 1, Rational(1)));
    FormPresentation bad = p;
    bad.structure[0][1][2] += 1;  // breaks antisymmetry
    CHECK_THROWS_AS(classify(bad), DomainError);
    bad = p;
    bad.weights = {0, 0, 0};
    CHECK_THROWS_AS(classify(bad), DomainError);
}

TEST_CASE("subalgebras are closed and labels round trip") {
    for (long n = 1; n <= 3; ++n)
        for (long m = 1; m <= 3; ++m) {
            std::vector<std::pair<ZForm, SubalgebraLabel>> cases{
                {ZForm(n, m, Rational(1)), SubalgebraLabel::Borel},
                {ZForm(n, m, Rational(1)), SubalgebraLabel::OppositeBorel},
                {ZForm(n, m, make_rational(1, 2)), SubalgebraLabel::Parabolic},
                {ZForm(n, m, Rational(n * m)), SubalgebraLabel::ParabolicPrime},
                {ZForm(n, m, make_rational(1, 2)), SubalgebraLabel::MaximalParabolic}};
            if (m == 2 * n) cases.push_back({ZForm(n, m, Rational(n)), SubalgebraLabel::ParabolicDoublePrime});
            for (const auto& [g, label] : cases) {
                CHECK(is_closed(g, subalgebra(g, label)));
                CHECK(parse_subalgebra_label(to_string(label)) == label);
            }
        }
    CHECK_THROWS_AS(subalgebra(ZForm(1, 1, Rational(1)), SubalgebraLabel::Parabolic), DomainError);
    CHECK_THROWS_AS(subalgebra(ZForm(1, 1, Rational(1)), SubalgebraLabel::ParabolicDoublePrime), DomainError);
}

TEST_CASE("iwasawa coefficients re-expand E and F") {
    for (long n = 1; n <= 3; ++n)
        for (long m = 1; m <= 3; ++m) {
            ZForm g(n, m, make_rational(1, 2));
            Subalgebra s = subalgebra(g, SubalgebraLabel::Parabolic);
            IwasawaDecomposition d = iwasawa_decompose(g, s);
            auto back = [&](const IwasawaCoefficients& c) { return c.x * s.basis[0] + c.y * s.basis[1] + c.h * LieElement::H(); };
            CHECK(back(d.e) == LieElement::E());
            CHECK(back(d.f) == LieElement::F());
            // E = (1/4nm) y-part + (1/2n) H-part, read off the q principal series
            CHECK(d.e.y == make_rational(1, 4 * n * m));
            CHECK(d.e.h * Rational(n) == make_rational(1, 2));
        }
}
