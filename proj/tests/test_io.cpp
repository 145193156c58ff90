#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hclat/io.hpp"
#include "hclat/verify.hpp"

using namespace hclat;

namespace {

template <typename Parse>
void check_reemission(const json& j, Parse parse) {
    const std::string text = j.dump(2);
    CHECK(to_json(parse(json::parse(text))).dump(2) == text);
}

}  // namespace

TEST_CASE("module tables") {
    ZForm g(2, 3, make_rational(1, 2));
    ModuleTable t = tabulate(principal_series(g, SubalgebraLabel::Parabolic,
                                              {make_rational(1, 2), make_rational(-5, 3), SubalgebraLabel::Parabolic}),
                             -4, 4);
    CHECK(t.rows.size() == 9);
    CHECK(module_table_from_json(to_json(t)) == t);
    check_reemission(to_json(t), module_table_from_json);
    ModuleTable ind = tabulate(induced_module(ZForm(1, 1, Rational(1)), 2), -2, 3);
    CHECK(ind.rows.front().index == 0);
    CHECK(ind.rows.front().f == 0);
    CHECK(to_csv(ind).rfind("index,weight,E,F,H\n0,2,1,0,2\n", 0) == 0);
}

TEST_CASE("contraction tables") {
    ContractionTable t = tabulate(contracted_ps(2, make_rational(1, 2), parse_laurent("z + 3*z^2"), CoefficientRing::poly()), -3, 3);
    CHECK(contraction_table_from_json(to_json(t)) == t);
    check_reemission(to_json(t), contraction_table_from_json);
    ContractionTable zero = tabulate(contracted_ps(1, Rational(0), Laurent(1), CoefficientRing::poly()), -3, 3);
    CHECK(zero.vanishing);
    CHECK(zero.rows.empty());
    check_reemission(to_json(zero), contraction_table_from_json);
}

TEST_CASE("lattice reports") {
    LatticeReport r = integral_model(LatticeVariant::Q, {1, 1, Rational(0), -2}, -3, 1);
    check_reemission(to_json(r), lattice_report_from_json);
    attach_oracle(r);
    json j = to_json(r);
    CHECK(j["oracle_agrees"] == true);
    CHECK(j["exponents"].dump() == "[[-3,1],[-2,2],[-1,1],[0,1],[1,0]]");
    check_reemission(j, lattice_report_from_json);
    LatticeReport empty = integral_model(LatticeVariant::QPrime, {2, 1, Rational(0), 1}, -3, 3);
    check_reemission(to_json(empty), lattice_report_from_json);
    CHECK(parse_support(to_string(Support::at_least(-4))) == Support::at_least(-4));
    CHECK_THROWS_AS(parse_support("p < 3"), DomainError);
}

TEST_CASE("finite lattices rebuild their ambient module") {
    for (long lam = 0; lam <= 5; ++lam) {
        FiniteLattice l = maximal_lattice(lam);
        FiniteLattice back = finite_lattice_from_json(to_json(l));
        CHECK(back.gens == l.gens);
        CHECK(back.ambient.e == l.ambient.e);
        CHECK(back.ambient.f == l.ambient.f);
        check_reemission(to_json(l), finite_lattice_from_json);
    }
    json j = to_json(minimal_lattice(2));
    // basis v_0, v_1, 2 v_2 of the explicit lattice
    CHECK(j["F"].dump() == "[[0,0,0],[1,0,0],[0,1,0]]");
    CHECK(j["E"].dump() == "[[0,2,0],[0,0,2],[0,0,0]]");
}

TEST_CASE("forms, classes and witnesses") {
    FormPresentation p = presentation_of(make_zform(3, 2, make_rational(-7, 2)));
    check_reemission(to_json(p), form_presentation_from_json);
    CHECK(classify(presentation_from_json(to_json(p))) == FormClass{3, 2, make_rational(7, 2)});
    CHECK(classify(presentation_from_json(json{{"n", 2}, {"m", 1}, {"q", "-1/2"}})) == FormClass{2, 1, make_rational(1, 2)});
    check_reemission(to_json(FormClass{1, 4, Rational(2)}), form_class_from_json);
    check_reemission(to_json(realize_fraction(-3, 5)), counit_witness_from_json);
    CHECK_THROWS_AS(presentation_from_json(json{{"n", 1}}), DomainError);
}

TEST_CASE("verify report json") {
    auto reps = run_verify("borelweil");
    REQUIRE(reps.size() == 1);
    json j = to_json(reps[0]);
    CHECK(j["ok"] == true);
    CHECK(j["results"].size() == reps[0].results.size());
    CHECK_THROWS_AS(run_verify("nope"), DomainError);
}
