#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hclat/weight_module.hpp"

using namespace hclat;

namespace {

Rational r(long a, long b = 1) { return make_rational(a, b); }

// [E,F] v_p = (E(p-1) F(p) - F(p+1) E(p)) v_p for a module supported on all p
Rational ef_commutator(const WeightModule& mod, long p) { return mod.f_coeff(p) * mod.e_coeff(p - 1) - mod.e_coeff(p) * mod.f_coeff(p + 1); }

}  // namespace

TEST_CASE("induced and produced coefficients") {
    for (long n = 1; n <= 3; ++n)
        for (long m = 1; m <= 3; ++m)
            for (long lam = -4; lam <= 4; ++lam) {
                ZForm g(n, m, Rational(1));
                WeightModule ind = induced_module(g, lam), pro = produced_module(g, lam);
                for (long p = 0; p <= 10; ++p) {
                    CHECK(ind.e_coeff(p) == 1);
                    CHECK(ind.f_coeff(p) == r(-m * p * (n * p - n + 2 * lam), 2));
                    CHECK(pro.f_coeff(p) == 1);
                    CHECK(pro.e_coeff(p) == r(-m * (p + 1) * (n * p + 2 * lam), 2));
                    CHECK(ind.weight(p) == lam + n * p);
                }
                CHECK(check_module_axioms(ind, -5, 30).ok());
                CHECK(check_module_axioms(pro, -5, 30).ok());
                CHECK_FALSE(ind.exists(-1));
            }
}

TEST_CASE("principal series coefficients") {
    const std::vector<Rational> mus{r(-3), r(1, 2), r(0), r(7, 3)};
    for (long n = 1; n <= 3; ++n)
        for (long m = 1; m <= 4; ++m)
            for (long k = 0; k < n; ++k)
                for (const auto& mu : mus) {
                    const Rational eps = r(k, n);
                    auto x = [&](long p) -> Rational { return Rational(p) + eps; };
                    const Rational nm(n * m);
                    WeightModule q = principal_series(ZForm(n, m, r(1, 2)), SubalgebraLabel::Parabolic,
                                                      {eps, mu, SubalgebraLabel::Parabolic});
                    WeightModule qp = principal_series(ZForm(n, m, nm), SubalgebraLabel::ParabolicPrime,
                                                       {eps, mu, SubalgebraLabel::ParabolicPrime});
                    for (long p = -6; p <= 6; ++p) {
                        CHECK(q.e_coeff(p) == mu / (4 * nm) + x(p) / 2);
                        CHECK(q.f_coeff(p) == mu / 2 - nm * x(p));
                        CHECK(qp.e_coeff(p) == mu / 2 + nm * x(p));
                        CHECK(qp.f_coeff(p) == (mu / (2 * nm) - x(p)) / 2);
                        CHECK(q.weight(p) == n * x(p));
                        CHECK(ef_commutator(q, p) == m * q.weight(p));
                        CHECK(ef_commutator(qp, p) == m * qp.weight(p));
                    }
                    if (m == 2 * n) {
                        WeightModule qpp = principal_series(ZForm(n, m, Rational(n)), SubalgebraLabel::ParabolicDoublePrime,
                                                            {eps, mu, SubalgebraLabel::ParabolicDoublePrime});
                        for (long p = -6; p <= 6; ++p) {
                            CHECK(qpp.e_coeff(p) == mu / 2 + n * x(p));
                            CHECK(qpp.f_coeff(p) == mu / 2 - n * x(p));
                            CHECK(ef_commutator(qpp, p) == m * qpp.weight(p));
                        }
                    }
                }
}

TEST_CASE("q-prime: the printed F coefficient fails, the derived one holds") {
    for (long n = 1; n <= 3; ++n)
        for (long m = 1; m <= 3; ++m) {
            ZForm g(n, m, Rational(n * m));
            PrincipalSeriesAction forms = derive_ps_action(g, subalgebra(g, SubalgebraLabel::ParabolicPrime));
            WeightModule good = principal_series_from_forms(g, forms, Rational(0), r(5), "ps-qp");
            forms.f = printed_qprime_f_form(g);
            WeightModule printed = principal_series_from_forms(g, forms, Rational(0), r(5), "ps-qp");
            CHECK(check_module_axioms(good, -20, 20).ok());
            AxiomReport bad = check_module_axioms(printed, -20, 20);
            REQUIRE_FALSE(bad.ok());
            CHECK(bad.failures.front().relation == "[E,F]=mH");
            // printed coefficient is exactly twice the derived one
            for (long p = -5; p <= 5; ++p) CHECK(printed.f_coeff(p) == 2 * good.f_coeff(p));
        }
}

TEST_CASE("axiom checker catches a perturbed coefficient") {
    ZForm g(2, 1, Rational(1));
    WeightModule mod = induced_module(g, 1);
    auto f = mod.f_coeff;
    mod.f_coeff = [f](long p) -> Rational { return p == 3 ? f(p) + 1 : f(p); };
    AxiomReport rep = check_module_axioms(mod, 0, 10);
    REQUIRE_FALSE(rep.ok());
    CHECK(rep.failures.front().index == 2);
}

TEST_CASE("preconditions") {
    ZForm g(2, 2, r(1, 2));
    CHECK_THROWS_AS(require_eps(2, r(1, 3)), DomainError);
    CHECK_THROWS_AS(require_eps(2, Rational(1)), DomainError);
    CHECK_NOTHROW(require_eps(2, r(1, 2)));
    CharacterModule chi{Rational(0), Rational(1), SubalgebraLabel::Parabolic};
    CHECK_THROWS_AS(principal_series(g, SubalgebraLabel::Parabolic, chi, CoefficientRing::integers()), DomainError);
    CHECK_NOTHROW(principal_series(g, SubalgebraLabel::Parabolic, chi, CoefficientRing::localized(8)));
    CHECK_THROWS_AS(principal_series(g, SubalgebraLabel::ParabolicPrime, chi), DomainError);
    CharacterModule half{Rational(0), r(1, 3), SubalgebraLabel::Parabolic};
    CHECK_THROWS_AS(principal_series(g, SubalgebraLabel::Parabolic, half, CoefficientRing::localized(8)), DomainError);
}

TEST_CASE("counit") {
    WeightModule ps = principal_series(ZForm(1, 1, r(1, 2)), SubalgebraLabel::Parabolic,
                                       {Rational(0), Rational(2), SubalgebraLabel::Parabolic});
    CHECK(ps.counit({{0, r(1, 2)}, {3, r(2)}}) == r(5, 2));
    CHECK_THROWS_AS(induced_module(ZForm(1, 1, Rational(1)), 0).counit({{0, Rational(1)}}), DomainError);
}
