#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hclat/borel_weil.hpp"

using namespace hclat;

namespace {

std::vector<Rational> apply(const QMatrix& a, const std::vector<Rational>& v) {
    std::vector<Rational> out(a.size(), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
    return out;
}

// Per-coordinate gcd of all E/F words of length <= depth applied to v.
std::vector<Rational> brute_generated(const AmbientModule& a, const std::vector<Rational>& v, int depth) {
    std::vector<Rational> gens(v.size(), Rational(0));
    std::vector<std::vector<Rational>> layer{v};
    for (int d = 0; d <= depth; ++d) {
        std::vector<std::vector<Rational>> next;
        for (const auto& w : layer) {
            bool nonzero = false;
            for (std::size_t i = 0; i < w.size(); ++i) {
                gens[i] = rational_gcd(gens[i], w[i]);
                nonzero = nonzero || w[i] != 0;
            }
            if (!nonzero) continue;
            next.push_back(apply(a.e, w));
            next.push_back(apply(a.f, w));
        }
        layer = std::move(next);
    }
    return gens;
}

std::vector<Rational> rats(std::initializer_list<std::pair<long, long>> xs) {
    std::vector<Rational> out;
    for (auto [a, b] : xs) out.push_back(make_rational(a, b));
    return out;
}

}  // namespace

TEST_CASE("explicit lattice for lambda = 1, n = 1") {
    FiniteLattice l = theorem615_lattice(1, 1);
    CHECK(l.weights() == std::vector<long>{3, 1, -1, -3});
    CHECK(satisfies_sl2_relations(l.ambient));
    CHECK(l.is_lattice());
    // E v_1 = (lambda + 2n - 1 + 1) v_0 = 3 v_0, F v_0 = v_1
    CHECK(l.ambient.e[0][1] == 3);
    CHECK(l.ambient.f[1][0] == 1);
}

TEST_CASE("lambda = 2 values") {
    FiniteLattice mn = minimal_lattice(2), mx = maximal_lattice(2);
    CHECK(mn.gens == rats({{1, 1}, {1, 1}, {2, 1}}));
    CHECK(mx.gens == rats({{1, 1}, {1, 2}, {1, 2}}));
    CHECK(*inclusion_index(mn, mx) == 8);
    CHECK_FALSE(inclusion_index(mx, mn).has_value());
    CHECK(*inclusion_index(minimal_lattice(2, true), maximal_lattice(2, true)) == 2);
}

TEST_CASE("generated lattices agree with brute-force word closure") {
    for (long lam = 0; lam <= 6; ++lam) {
        FiniteLattice mn = minimal_lattice(lam);
        std::vector<Rational> top(mn.rank(), Rational(0));
        top[mn.ambient.index_of_weight(lam)] = 1;
        CHECK(brute_generated(mn.ambient, top, 2 * static_cast<int>(lam) + 3) == mn.gens);
        CHECK(generated_lattice(mn.ambient, top).gens == mn.gens);
    }
}

TEST_CASE("lattices are stable and satisfy the relations") {
    for (long lam = 0; lam <= 12; ++lam) {
        for (const auto& l : {minimal_lattice(lam), maximal_lattice(lam), dual_lattice(minimal_lattice(lam))}) {
            CHECK(satisfies_sl2_relations(l.ambient));
            CHECK(l.is_lattice());
        }
        CHECK(inclusion_index(minimal_lattice(lam), maximal_lattice(lam)).has_value());
    }
}

TEST_CASE("dual of dual") {
    for (long lam = 0; lam <= 6; ++lam) {
        FiniteLattice l = maximal_lattice(lam);
        FiniteLattice dd = dual_lattice(dual_lattice(l));
        CHECK(dd.gens == l.gens);
        CHECK(dd.weights() == l.weights());
    }
}

TEST_CASE("hom from minimal to maximal has rank one") {
    for (long lam = 0; lam <= 8; ++lam) {
        auto basis = integral_intertwiners(minimal_lattice(lam), maximal_lattice(lam));
        REQUIRE(basis.size() == 1);
        auto q = rational_intertwiners(minimal_lattice(lam).ambient, maximal_lattice(lam).ambient);
        CHECK(q.size() == 1);
    }
}

TEST_CASE("maximality certificate") {
    for (long lam = 0; lam <= 12; ++lam) CHECK(maximality_certificate(maximal_lattice(lam), {2, 3, 5}).certified);
    MaximalityReport r = maximality_certificate(minimal_lattice(2), {2, 3});
    CHECK_FALSE(r.certified);
    REQUIRE_FALSE(r.enlargeable.empty());
    CHECK(r.enlargeable.front().prime == 2);
    CHECK(greedy_maximalization(minimal_lattice(2), {2}).gens == maximal_lattice(2).gens);
}

TEST_CASE("counit witnesses") {
    CounitWitness w = counit_fraction_witness(-3, 5);
    CHECK(w.ok());
    CHECK(w.fraction == make_rational(1, 5));
    CHECK_THROWS_AS(counit_fraction_witness(-5, 1), DomainError);
    for (long lam = -5; lam <= 5; ++lam)
        for (long n = 1; n <= 20; ++n) {
            CounitWitness r = realize_fraction(lam, n);
            CHECK(r.ok());
            CHECK(r.fraction == frac_mod1(make_rational(1, n)));
            CHECK(lam + r.scale * n >= 0);
        }
}

TEST_CASE("weights are simple") {
    for (long lam = 0; lam <= 12; ++lam) {
        auto w = maximal_lattice(lam).weights();
        std::sort(w.begin(), w.end());
        CHECK(std::adjacent_find(w.begin(), w.end()) == w.end());
        CHECK(w.size() == static_cast<std::size_t>(lam + 1));
    }
    CHECK_THROWS_AS(minimal_lattice(-1), DomainError);
}
