#pragma once

#include "hclat/laurent.hpp"
#include "hclat/rational.hpp"
#include "hclat/scalar.hpp"
#include "hclat/weight_module.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hclat {

/// a e + b f + c h with Laurent coefficients.
struct LaurentTriple {
    Laurent e, f, h;
    friend LaurentTriple operator+(const LaurentTriple& x, const LaurentTriple& y) {
        return {x.e + y.e, x.f + y.f, x.h + y.h};
    }
    friend LaurentTriple operator-(const LaurentTriple& x, const LaurentTriple& y) {
        return {x.e - y.e, x.f - y.f, x.h - y.h};
    }
    friend bool operator==(const LaurentTriple&, const LaurentTriple&) = default;
};

std::string to_string(const LaurentTriple& x);

/// Bracket of the contraction algebra: [e,f] = z h, [h,e] = 2e, [h,f] = -2f.
LaurentTriple contraction_bracket(const LaurentTriple& x, const LaurentTriple& y);

/// Bracket of sl2 over Q[z^{+-1}]: [e,f] = h, [h,e] = 2e, [h,f] = -2f.
LaurentTriple sl2_bracket(const LaurentTriple& x, const LaurentTriple& y);

/// A parity-homogeneous element x z^degree: x must lie in span{e, f} (odd) or span{h} (even).
struct HomogeneousElement {
    Rational e{0}, f{0}, h{0};
    long degree = 0;
};

/// Summandwise bracket; an extra z when both inputs are odd. Throws on mixed parity.
LaurentTriple contraction_bracket(const HomogeneousElement& x, const HomogeneousElement& y);

/// Phi(x) = x on span{e, h}, z^{-1} x on span{f}.
LaurentTriple phi_isomorphism(const LaurentTriple& x);

/// A module over the contraction algebra with one basis vector per index p.
struct ContractionModule {
    std::string family;  // "ind", "pro", "ps"
    long n = 1;
    CoefficientRing ring = CoefficientRing::laurent();
    Support support;
    Rational weight_offset{0};  // T^1-weight of index p is weight_offset + n p
    std::function<Laurent(long)> e_coeff;
    std::function<Laurent(long)> f_coeff;
    std::function<Rational(long)> h_coeff;
    /// Set when the polynomial-ring model is zero (mu has a nonzero constant term).
    bool vanishing = false;
    std::optional<Rational> eps;
    std::optional<Laurent> mu;

    bool exists(long p) const { return support.contains(p); }
};

ContractionModule contracted_induced(long lambda, long n);
ContractionModule contracted_produced(long lambda, long n);
/// Principal series over ring (Poly or Laurent). Over Poly a mu with nonzero
/// constant term yields the zero module with `vanishing` set.
ContractionModule contracted_ps(long n, const Rational& eps, const Laurent& mu, const CoefficientRing& ring);

struct ContractionAxiomReport {
    long checked = 0;
    std::vector<std::pair<long, std::string>> failures;
    bool ok() const { return failures.empty(); }
};

/// [h,e] = 2e, [h,f] = -2f, [e,f] = z h on each basis vector in [lo, hi].
ContractionAxiomReport check_contraction_axioms(const ContractionModule& mod, long lo, long hi);

/// False iff mu lies in 2z(Z - eps) or 2z(Z + eps), i.e. an e- or f-coefficient
/// vanishes at some integer index.
bool generic_irreducibility(const Rational& eps, const Laurent& mu);

/// Direct search for an integer index p in [lo, hi] where an e- or f-coefficient is zero.
std::optional<long> coefficient_root(long n, const Rational& eps, const Laurent& mu, long lo, long hi);

struct PolynomialLatticeReport {
    bool closed = true;
    std::vector<std::pair<std::string, long>> failures;  // (generator, index)
    /// The Q[z]-basis, viewed over Q[z^{+-1}], carries the Laurent module's coefficients.
    bool base_change_identity = false;
};

/// Requires mu in z Q[z]; checks every action coefficient in [lo, hi] is polynomial.
PolynomialLatticeReport polynomial_lattice(long n, const Rational& eps, const Laurent& mu, long lo, long hi);

/// Largest pole order of phi(e^s), s <= depth, along the e-chain from phi(1) = 1.
/// Equal to depth exactly when mu has a nonzero constant term (no polynomial extension).
long pole_order_growth(const Rational& eps, const Laurent& mu, long depth);

/// Fiber at z = c, read in g_{n,c} through E = e, F = (n/2) f, H = (n/2) h.
WeightModule specialize(const ContractionModule& mod, const Rational& c);

/// Diagonal d with B = D A D^{-1} on [lo, hi], if one exists.
std::optional<std::vector<Rational>> rescaling_between(const WeightModule& a, const WeightModule& b, long lo, long hi);

}  // namespace hclat
