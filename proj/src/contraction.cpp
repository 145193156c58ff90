#include "hclat/contraction.hpp"

#include <sstream>

namespace hclat {

std::string to_string(const LaurentTriple& x) {
    std::ostringstream os;
    os << "(" << to_string(x.e) << ")*e + (" << to_string(x.f) << ")*f + (" << to_string(x.h) << ")*h";
    return os.str();
}

LaurentTriple contraction_bracket(const LaurentTriple& x, const LaurentTriple& y) {
    const Laurent z = Laurent::z();
    const Laurent two(2);
    return {two * (x.h * y.e - x.e * y.h), two * (x.f * y.h - x.h * y.f), z * (x.e * y.f - x.f * y.e)};
}

LaurentTriple sl2_bracket(const LaurentTriple& x, const LaurentTriple& y) {
    const Laurent two(2);
    return {two * (x.h * y.e - x.e * y.h), two * (x.f * y.h - x.h * y.f), x.e * y.f - x.f * y.e};
}

namespace {

bool is_odd(const HomogeneousElement& x) {
    const bool odd = x.e != 0 || x.f != 0;
    const bool even = x.h != 0;
    if (odd && even) throw DomainError("element is not parity-homogeneous");
    return odd;
}

LaurentTriple lift(const HomogeneousElement& x) {
    return {Laurent::monomial(x.e, x.degree), Laurent::monomial(x.f, x.degree), Laurent::monomial(x.h, x.degree)};
}

}  // namespace

LaurentTriple contraction_bracket(const HomogeneousElement& x, const HomogeneousElement& y) {
    const bool both_odd = is_odd(x) && is_odd(y);
    LaurentTriple b = sl2_bracket(lift(x), lift(y));
    if (both_odd) {
        const Laurent z = Laurent::z();
        b = {z * b.e, z * b.f, z * b.h};
    }
    return b;
}

LaurentTriple phi_isomorphism(const LaurentTriple& x) { return {x.e, x.f * Laurent::z(-1), x.h}; }

ContractionModule contracted_induced(long lambda, long n) {
    if (n < 1) throw DomainError("n must be positive");
    ContractionModule mod;
    mod.family = "ind";
    mod.n = n;
    mod.support = Support::at_least(0);
    mod.weight_offset = Rational(lambda);
    mod.e_coeff = [](long) { return Laurent(1); };
    mod.f_coeff = [=](long p) { return Laurent::monomial(-make_rational(p * (n * p - n + 2 * lambda), n), 1); };
    mod.h_coeff = [=](long p) { return make_rational(2 * (lambda + n * p), n); };
    return mod;
}

ContractionModule contracted_produced(long lambda, long n) {
    if (n < 1) throw DomainError("n must be positive");
    ContractionModule mod;
    mod.family = "pro";
    mod.n = n;
    mod.support = Support::at_least(0);
    mod.weight_offset = Rational(lambda);
    mod.e_coeff = [=](long p) { return Laurent::monomial(-make_rational((p + 1) * (n * p + 2 * lambda), n), 1); };
    mod.f_coeff = [](long) { return Laurent(1); };
    mod.h_coeff = [=](long p) { return make_rational(2 * (lambda + n * p), n); };
    return mod;
}

ContractionModule contracted_ps(long n, const Rational& eps, const Laurent& mu, const CoefficientRing& ring) {
    require_eps(n, eps);
    if (!ring.is_polynomial()) throw DomainError("contraction modules live over Q[z] or Q[z^-1,z]");
    if (!ring.contains(mu)) throw DomainError("mu = " + to_string(mu) + " does not lie in " + ring.name());
    ContractionModule mod;
    mod.family = "ps";
    mod.n = n;
    mod.ring = ring;
    mod.eps = eps;
    mod.mu = mu;
    mod.weight_offset = Rational(n) * eps;
    if (ring.kind() == CoefficientRing::Kind::Poly && mu.constant_term() != 0) {
        mod.vanishing = true;
        mod.support = Support::empty();
    } else {
        mod.support = Support::all();
    }
    const Laurent half_mu_over_z = mu.div_monomial(Rational(2), 1);
    const Laurent half_mu = mu.div_monomial(Rational(2), 0);
    mod.e_coeff = [=](long p) { return half_mu_over_z + Laurent(Rational(p) + eps); };
    mod.f_coeff = [=](long p) { return half_mu - Laurent::monomial(Rational(p) + eps, 1); };
    mod.h_coeff = [=](long p) -> Rational { return Rational(2) * (Rational(p) + eps); };
    return mod;
}

ContractionAxiomReport check_contraction_axioms(const ContractionModule& mod, long lo, long hi) {
    ContractionAxiomReport report;
    auto e = [&](long p) { return mod.exists(p) && mod.exists(p + 1) ? mod.e_coeff(p) : Laurent(); };
    auto f = [&](long p) { return mod.exists(p) && mod.exists(p - 1) ? mod.f_coeff(p) : Laurent(); };
    const Laurent z = Laurent::z();
    for (long p = lo; p <= hi; ++p) {
        if (!mod.exists(p)) continue;
        ++report.checked;
        const Rational h = mod.h_coeff(p);
        if (mod.exists(p + 1) && mod.h_coeff(p + 1) - h != 2) report.failures.push_back({p, "[h,e]=2e"});
        if (mod.exists(p - 1) && mod.h_coeff(p - 1) - h != -2) report.failures.push_back({p, "[h,f]=-2f"});
        // (ef - fe) w_p = (f(p) e(p-1) - e(p) f(p+1)) w_p
        Laurent ef = f(p) * e(p - 1) - e(p) * f(p + 1);
        if (!(ef == z * Laurent(h))) report.failures.push_back({p, "[e,f]=zh"});
        if (!mod.ring.contains(e(p)) || !mod.ring.contains(f(p))) report.failures.push_back({p, "ring"});
    }
    return report;
}

namespace {

// mu = c z with c rational, or nothing.
std::optional<Rational> linear_coefficient(const Laurent& mu) {
    if (mu.is_zero()) return Rational(0);
    if (mu.lowest_exponent() != 1 || mu.highest_exponent() != 1) return std::nullopt;
    return mu.coeff(1);
}

}  // namespace

bool generic_irreducibility(const Rational& eps, const Laurent& mu) {
    auto c = linear_coefficient(mu);
    if (!c) return true;
    // mu = 2z(k - eps) or 2z(k + eps)
    const Rational k = *c / 2;
    return !is_integer(k + eps) && !is_integer(k - eps);
}

std::optional<long> coefficient_root(long n, const Rational& eps, const Laurent& mu, long lo, long hi) {
    ContractionModule mod = contracted_ps(n, eps, mu, CoefficientRing::laurent());
    for (long p = lo; p <= hi; ++p)
        if (mod.e_coeff(p).is_zero() || mod.f_coeff(p).is_zero()) return p;
    return std::nullopt;
}

PolynomialLatticeReport polynomial_lattice(long n, const Rational& eps, const Laurent& mu, long lo, long hi) {
    if (!mu.is_zero() && mu.lowest_exponent() < 1)
        throw DomainError("polynomial lattice needs mu in z*Q[z], got " + to_string(mu));
    PolynomialLatticeReport r;
    const CoefficientRing poly = CoefficientRing::poly();
    ContractionModule pm = contracted_ps(n, eps, mu, poly);
    ContractionModule lm = contracted_ps(n, eps, mu, CoefficientRing::laurent());
    r.base_change_identity = true;
    for (long p = lo; p <= hi; ++p) {
        if (!poly.contains(pm.e_coeff(p))) r.failures.push_back({"e", p});
        if (!poly.contains(pm.f_coeff(p))) r.failures.push_back({"f", p});
        if (!(pm.e_coeff(p) == lm.e_coeff(p)) || !(pm.f_coeff(p) == lm.f_coeff(p)) || pm.h_coeff(p) != lm.h_coeff(p))
            r.base_change_identity = false;
    }
    r.closed = r.failures.empty();
    return r;
}

long pole_order_growth(const Rational& eps, const Laurent& mu, long depth) {
    const Laurent half_mu_over_z = mu.div_monomial(Rational(2), 1);
    Laurent phi(1);
    long worst = 0;
    for (long s = 0; s < depth; ++s) {
        phi *= half_mu_over_z + Laurent(Rational(s) + eps);
        if (phi.is_zero()) break;
        worst = std::max(worst, -std::min(0L, phi.lowest_exponent()));
    }
    return worst;
}

WeightModule specialize(const ContractionModule& mod, const Rational& c) {
    WeightModule out;
    out.family = mod.family + "@z=" + to_string(c);
    out.n = mod.n;
    out.m = c;
    out.ring = CoefficientRing::rationals();
    out.support = mod.support;
    out.weight_offset = mod.weight_offset;
    const Rational half_n = make_rational(mod.n, 2);
    out.e_coeff = [e = mod.e_coeff, c](long p) { return e(p).evaluate(c); };
    out.f_coeff = [f = mod.f_coeff, c, half_n](long p) -> Rational { return half_n * f(p).evaluate(c); };
    out.has_counit = mod.family == "ps";
    // Weight check: (n/2) h agrees with the T^1-weight.
    for (long p = -1; p <= 1; ++p)
        if (mod.exists(p) && half_n * mod.h_coeff(p) != out.weight(p))
            throw DomainError("h-eigenvalue does not match the weight under H = (n/2)h");
    return out;
}

std::optional<std::vector<Rational>> rescaling_between(const WeightModule& a, const WeightModule& b, long lo,
                                                       long hi) {
    std::vector<Rational> d;
    for (long p = lo; p <= hi; ++p) {
        if (a.exists(p) != b.exists(p) || a.weight(p) != b.weight(p)) return std::nullopt;
        if (!a.exists(p)) {
            d.push_back(1);
            continue;
        }
        if (d.empty() || !a.exists(p - 1)) {
            d.push_back(1);
            continue;
        }
        const Rational prev = d.back();
        const Rational ea = a.e_coeff(p - 1), eb = b.e_coeff(p - 1);
        const Rational fa = a.f_coeff(p), fb = b.f_coeff(p);
        if ((ea == 0) != (eb == 0) || (fa == 0) != (fb == 0)) return std::nullopt;
        // e_b(p-1) = d_p/d_{p-1} e_a(p-1), f_b(p) = d_{p-1}/d_p f_a(p)
        Rational next = ea != 0 ? prev * eb / ea : (fb != 0 ? prev * fa / fb : Rational(1));
        if (ea != 0 && fa != 0 && prev / next * fa != fb) return std::nullopt;
        d.push_back(next);
    }
    return d;
}

}  // namespace hclat
