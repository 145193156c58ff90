#pragma once

#include "hclat/rational.hpp"
#include "hclat/scalar.hpp"
#include "hclat/zform.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hclat {

/// Index set of a weight module: all p, p >= bound, p <= bound, or nothing.
struct Support {
    enum class Kind { All, AtLeast, AtMost, Empty };
    Kind kind = Kind::All;
    long bound = 0;

    static Support all() { return {Kind::All, 0}; }
    static Support at_least(long b) { return {Kind::AtLeast, b}; }
    static Support at_most(long b) { return {Kind::AtMost, b}; }
    static Support empty() { return {Kind::Empty, 0}; }

    bool contains(long p) const;
    friend bool operator==(const Support&, const Support&) = default;
};

std::string to_string(const Support& s);

/// Coordinates in the module's weight basis, keyed by index p.
using ModuleVector = std::map<long, Rational>;

/// Affine form a*mu + b*p + c*eps in the principal-series parameters.
struct LinearForm {
    Rational mu{0}, p{0}, eps{0};
    Rational operator()(const Rational& mu_v, long p_v, const Rational& eps_v) const {
        return mu * mu_v + p * Rational(p_v) + eps * eps_v;
    }
    friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

std::string to_string(const LinearForm& f);

struct PrincipalSeriesAction {
    LinearForm e;  // E w_p = e(mu, p, eps) w_{p+1}
    LinearForm f;  // F w_p = f(mu, p, eps) w_{p-1}
};

/// The (q, M)-character k_{eps, mu}: X.1 = 0, Y.1 = mu, t.1 = t^{n eps}.
struct CharacterModule {
    Rational eps;
    Rational mu;
    SubalgebraLabel presentation = SubalgebraLabel::Parabolic;
};

/// A weight module with one basis vector per index p, of weight
/// weight_offset + n*p; E raises the index by one, F lowers it, H is diagonal.
/// Coefficient functions are exact and defined for every integer p; the
/// support predicate decides which basis vectors exist.
struct WeightModule {
    std::string family;  // "ind", "pro", "ps-q", ...
    long n = 1;
    Rational m{1};  // [E, F] = mH
    CoefficientRing ring = CoefficientRing::rationals();
    Support support;
    Rational weight_offset{0};
    std::function<Rational(long)> e_coeff;
    std::function<Rational(long)> f_coeff;

    // Principal-series bookkeeping.
    std::optional<CharacterModule> character;
    std::optional<PrincipalSeriesAction> action_forms;
    /// Counit w_p -> 1 for every p.
    bool has_counit = false;

    Rational weight(long p) const { return weight_offset + Rational(n) * Rational(p); }
    bool exists(long p) const { return support.contains(p); }

    ModuleVector basis_vector(long p) const;
    ModuleVector apply_e(const ModuleVector& v) const;
    ModuleVector apply_f(const ModuleVector& v) const;
    ModuleVector apply_h(const ModuleVector& v) const;
    /// Exponent of t in the T^1-action on basis vector p.
    long torus_exponent(long p) const;
    Rational counit(const ModuleVector& v) const;
};

WeightModule induced_module(const ZForm& g, long lambda, const CoefficientRing& ring = CoefficientRing::rationals());
WeightModule produced_module(const ZForm& g, long lambda, const CoefficientRing& ring = CoefficientRing::rationals());

/// E and F coefficient forms obtained from the Iwasawa splitting of s:
/// a generator c_X X + c_Y Y + c_H H acts on a weight-w vector by c_Y mu + c_H w.
PrincipalSeriesAction derive_ps_action(const ZForm& g, const Subalgebra& s);

/// The F-coefficient as printed for the q' family: mu/2nm - p - eps.
/// It is not bracket-consistent; kept so the verifier can report on it.
LinearForm printed_qprime_f_form(const ZForm& g);

/// Principal series over ring R for the parabolic `label`.
/// R must invert 2nm (q, q') or 2 (q''); mu must lie in R.
WeightModule principal_series(const ZForm& g, SubalgebraLabel label, const CharacterModule& chi,
                              const CoefficientRing& ring = CoefficientRing::rationals());

/// Same module built from explicit forms (used to test alternative coefficients).
WeightModule principal_series_from_forms(const ZForm& g, const PrincipalSeriesAction& forms, const Rational& eps,
                                         const Rational& mu, std::string family);

struct AxiomFailure {
    long index;
    std::string relation;  // "[H,E]=nE", "[H,F]=-nF", "[E,F]=mH", "torus"
    ModuleVector discrepancy;
};

struct AxiomReport {
    long checked = 0;
    std::vector<AxiomFailure> failures;
    bool ok() const { return failures.empty(); }
};

/// Evaluates the three bracket relations on every basis vector in [lo, hi].
AxiomReport check_module_axioms(const WeightModule& mod, long lo, long hi);

/// Checks eps is one of 0, 1/n, ..., (n-1)/n.
void require_eps(long n, const Rational& eps);

}  // namespace hclat
