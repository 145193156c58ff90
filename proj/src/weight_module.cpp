#include "hclat/weight_module.hpp"

#include <sstream>

namespace hclat {

bool Support::contains(long p) const {
    switch (kind) {
        case Kind::All: return true;
        case Kind::AtLeast: return p >= bound;
        case Kind::AtMost: return p <= bound;
        case Kind::Empty: return false;
    }
    return false;
}

std::string to_string(const Support& s) {
    switch (s.kind) {
        case Support::Kind::All: return "all p";
        case Support::Kind::AtLeast: return "p >= " + std::to_string(s.bound);
        case Support::Kind::AtMost: return "p <= " + std::to_string(s.bound);
        case Support::Kind::Empty: return "empty";
    }
    return "?";
}

std::string to_string(const LinearForm& f) {
    std::ostringstream os;
    os << to_string(f.mu) << "*mu + " << to_string(f.p) << "*p + " << to_string(f.eps) << "*eps";
    return os.str();
}

namespace {

void add_to(ModuleVector& v, long p, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = v.try_emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) v.erase(it);
    }
}

}  // namespace

ModuleVector WeightModule::basis_vector(long p) const {
    if (!exists(p)) return {};
    return {{p, Rational(1)}};
}

ModuleVector WeightModule::apply_e(const ModuleVector& v) const {
    ModuleVector out;
    for (const auto& [p, c] : v)
        if (exists(p) && exists(p + 1)) add_to(out, p + 1, c * e_coeff(p));
    return out;
}

ModuleVector WeightModule::apply_f(const ModuleVector& v) const {
    ModuleVector out;
    for (const auto& [p, c] : v)
        if (exists(p) && exists(p - 1)) add_to(out, p - 1, c * f_coeff(p));
    return out;
}

ModuleVector WeightModule::apply_h(const ModuleVector& v) const {
    ModuleVector out;
    for (const auto& [p, c] : v)
        if (exists(p)) add_to(out, p, c * weight(p));
    return out;
}

long WeightModule::torus_exponent(long p) const { return to_long(weight(p)); }

Rational WeightModule::counit(const ModuleVector& v) const {
    if (!has_counit) throw DomainError("module " + family + " carries no counit");
    Rational sum(0);
    for (const auto& [p, c] : v)
        if (exists(p)) sum += c;
    return sum;
}

void require_eps(long n, const Rational& eps) {
    if (eps < 0 || eps >= 1 || !is_integer(eps * Rational(n)))
        throw DomainError("eps must be one of 0, 1/n, ..., (n-1)/n for n = " + std::to_string(n) + ", got " +
                          to_string(eps));
}

WeightModule induced_module(const ZForm& g, long lambda, const CoefficientRing& ring) {
    WeightModule mod;
    mod.family = "ind";
    mod.n = g.n();
    mod.m = Rational(g.m());
    mod.ring = ring;
    mod.support = Support::at_least(0);
    mod.weight_offset = Rational(lambda);
    const Rational n(g.n()), m(g.m()), lam(lambda);
    mod.e_coeff = [](long) { return Rational(1); };
    mod.f_coeff = [=](long p) {
        Rational pp(p);
        return canonical(make_rational(-1, 2) * m * pp * (n * pp - n + 2 * lam));
    };
    return mod;
}

WeightModule produced_module(const ZForm& g, long lambda, const CoefficientRing& ring) {
    WeightModule mod;
    mod.family = "pro";
    mod.n = g.n();
    mod.m = Rational(g.m());
    mod.ring = ring;
    mod.support = Support::at_least(0);
    mod.weight_offset = Rational(lambda);
    const Rational n(g.n()), m(g.m()), lam(lambda);
    mod.e_coeff = [=](long p) {
        Rational pp(p);
        return canonical(make_rational(-1, 2) * m * (pp + 1) * (n * pp + 2 * lam));
    };
    mod.f_coeff = [](long) { return Rational(1); };
    return mod;
}

PrincipalSeriesAction derive_ps_action(const ZForm& g, const Subalgebra& s) {
    IwasawaDecomposition d = iwasawa_decompose(g, s);
    const Rational n(g.n());
    auto form = [&](const IwasawaCoefficients& c) { return LinearForm{c.y, c.h * n, c.h * n}; };
    return {form(d.e), form(d.f)};
}

LinearForm printed_qprime_f_form(const ZForm& g) {
    return LinearForm{make_rational(1, 2 * g.n() * g.m()), Rational(-1), Rational(-1)};
}

WeightModule principal_series_from_forms(const ZForm& g, const PrincipalSeriesAction& forms, const Rational& eps,
                                         const Rational& mu, std::string family) {
    require_eps(g.n(), eps);
    WeightModule mod;
    mod.family = std::move(family);
    mod.n = g.n();
    mod.m = Rational(g.m());
    mod.support = Support::all();
    mod.weight_offset = Rational(g.n()) * eps;
    mod.e_coeff = [e = forms.e, mu, eps](long p) { return e(mu, p, eps); };
    mod.f_coeff = [f = forms.f, mu, eps](long p) { return f(mu, p, eps); };
    mod.action_forms = forms;
    mod.has_counit = true;
    return mod;
}

WeightModule principal_series(const ZForm& g, SubalgebraLabel label, const CharacterModule& chi,
                              const CoefficientRing& ring) {
    if (chi.presentation != label)
        throw DomainError("character is presented for " + to_string(chi.presentation) + ", not " + to_string(label));
    Subalgebra s = subalgebra(g, label);
    const long needed = label == SubalgebraLabel::ParabolicDoublePrime ? 2 : 2 * g.n() * g.m();
    if (!ring.contains(make_rational(1, needed)))
        throw DomainError("ring " + ring.name() + " does not invert " + std::to_string(needed) +
                          "; integral models over Z are described by the lattice module");
    if (!ring.contains(chi.mu)) throw DomainError("mu = " + to_string(chi.mu) + " does not lie in " + ring.name());
    WeightModule mod = principal_series_from_forms(g, derive_ps_action(g, s), chi.eps, chi.mu, "ps-" + to_string(label));
    mod.ring = ring;
    mod.character = chi;
    return mod;
}

AxiomReport check_module_axioms(const WeightModule& mod, long lo, long hi) {
    AxiomReport report;
    const Rational n(mod.n);
    for (long p = lo; p <= hi; ++p) {
        if (!mod.exists(p)) continue;
        ++report.checked;
        ModuleVector v = mod.basis_vector(p);
        auto diff = [](ModuleVector a, const ModuleVector& b, const Rational& scale) {
            for (const auto& [k, c] : b) add_to(a, k, -scale * c);
            return a;
        };
        auto commutator = [&](auto&& x, auto&& y) { return diff(x(y(v)), y(x(v)), Rational(1)); };
        auto E = [&](const ModuleVector& w) { return mod.apply_e(w); };
        auto F = [&](const ModuleVector& w) { return mod.apply_f(w); };
        auto H = [&](const ModuleVector& w) { return mod.apply_h(w); };

        ModuleVector he = diff(commutator(H, E), E(v), n);
        if (!he.empty()) report.failures.push_back({p, "[H,E]=nE", he});
        ModuleVector hf = diff(commutator(H, F), F(v), -n);
        if (!hf.empty()) report.failures.push_back({p, "[H,F]=-nF", hf});
        ModuleVector ef = diff(commutator(E, F), H(v), mod.m);
        if (!ef.empty()) report.failures.push_back({p, "[E,F]=mH", ef});
        if (!is_integer(mod.weight(p))) report.failures.push_back({p, "torus", {{p, mod.weight(p)}}});
    }
    return report;
}

}  // namespace hclat
