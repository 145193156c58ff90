#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hclat/hecke.hpp"

using namespace hclat;

TEST_CASE("idempotents multiply orthogonally") {
    for (long a = -4; a <= 4; ++a)
        for (long b = -4; b <= 4; ++b) {
            auto prod = hecke_mul(HeckeElement::idempotent(a), HeckeElement::idempotent(b));
            if (a == b)
                CHECK(prod == HeckeElement::idempotent(a));
            else
                CHECK(prod.is_zero());
        }
}

TEST_CASE("cyclic characters reduce mod n") {
    auto c3 = CharacterLattice::cyclic(3);
    CHECK(c3.reduce(-1) == 2);
    CHECK(c3.reduce(7) == 1);
    CHECK(c3.add(2, 2) == 1);
    CHECK(c3.sub(0, 1) == 2);
    CHECK_THROWS_AS(CharacterLattice::cyclic(0), DomainError);
    CHECK_THROWS_AS(HeckeElement::idempotent(4, c3), DomainError);
}

TEST_CASE("projections split a vector into its weights") {
    GradedVector v{{-2, Rational(3)}, {0, make_rational(1, 2)}, {5, Rational(-1)}};
    CHECK(project(v, 0) == GradedVector{{0, make_rational(1, 2)}});
    CHECK(project(v, 1).empty());
    HeckeElement x = HeckeElement::idempotent(-2) + Rational(2) * HeckeElement::idempotent(5);
    CHECK(x.apply(v) == GradedVector{{-2, Rational(3)}, {5, Rational(-2)}});
}

TEST_CASE("restriction to Z/n groups weights by residue") {
    GradedVector v{{-1, Rational(1)}, {1, Rational(2)}, {2, Rational(3)}, {4, Rational(4)}};
    GradedVector r = restrict_to(v, CharacterLattice::cyclic(3));
    // -1, 2 -> 2 ; 1, 4 -> 1
    CHECK(r == GradedVector{{1, Rational(6)}, {2, Rational(4)}});
    GradedVector sum;
    for (long l = 0; l < 3; ++l)
        for (const auto& [k, c] : project(r, l)) sum[k] += c;
    CHECK(sum == r);
}

TEST_CASE("tensor weight components") {
    GradedVector v{{0, Rational(1)}, {1, Rational(2)}}, w{{-1, Rational(3)}, {1, Rational(5)}};
    TensorVector t = tensor_action(0, v, w);
    CHECK(t == TensorVector{{{1, -1}, Rational(6)}});
    CHECK(tensor_action(2, v, w) == TensorVector{{{1, 1}, Rational(10)}});
}

TEST_CASE("hom components by weight shift") {
    HomMatrix f{{{1, 0}, Rational(2)}, {{0, 0}, Rational(7)}, {{-1, 1}, Rational(3)}};
    CHECK(hom_project(1, f) == HomMatrix{{{1, 0}, Rational(2)}});
    CHECK(hom_project(-2, f) == HomMatrix{{{-1, 1}, Rational(3)}});
    GradedVector v{{0, Rational(1)}, {1, Rational(1)}};
    CHECK(hom_action(0, f, v) == GradedVector{{0, Rational(7)}});
    CHECK(hclat::apply(f, v) == GradedVector{{-1, Rational(3)}, {0, Rational(7)}, {1, Rational(2)}});
}

TEST_CASE("t-finite part drops zero components") {
    auto fam = [](long l) { return l % 2 == 0 ? Rational(l) : Rational(0); };
    GradedVector v = t_finite_part(fam, {-2, -1, 0, 1, 2});
    CHECK(v == GradedVector{{-2, Rational(-2)}, {2, Rational(2)}});
}

TEST_CASE("smash product rule") {
    ZForm g(1, 1, Rational(1));
    // (E # p_1)(F # p_0): p_{1-0} F = F only if wt F = 1; wt F = -1, so zero.
    auto x = SmashElement::term(UEAElement::generator(Generator::E), 1);
    auto y = SmashElement::term(UEAElement::generator(Generator::F), 0);
    CHECK(smash_mul(x, y, g).is_zero());
    // (E # p_-1)(F # p_0) = EF # p_0
    auto x2 = SmashElement::term(UEAElement::generator(Generator::E), -1);
    auto prod = smash_mul(x2, y, g);
    SmashElement want;
    want.add({1, 0, 1}, 0, Rational(1));  // FE
    want.add({0, 1, 0}, 0, Rational(1));  // H
    CHECK(prod == want);
}

TEST_CASE("weight components of U(g)") {
    ZForm g(2, 1, Rational(1));
    UEAElement u = normal_form({Generator::E, Generator::F}, g) + UEAElement::generator(Generator::E);
    CHECK(weight_component(u, 2, 2) == UEAElement::generator(Generator::E));
    CHECK(weight_component(u, 0, 2) == normal_form({Generator::E, Generator::F}, g));
    CHECK(weight_component(u, -2, 2).is_zero());
}

TEST_CASE("hecke json round trip") {
    HeckeElement x = HeckeElement::idempotent(1, CharacterLattice::cyclic(4)) +
                     make_rational(1, 3) * HeckeElement::idempotent(3, CharacterLattice::cyclic(4));
    auto j = to_json(x);
    CHECK(hecke_from_json(j) == x);
    CHECK(to_json(hecke_from_json(j)).dump() == j.dump());
}
