#pragma once

#include "hclat/rational.hpp"
#include "hclat/weight_module.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hclat {

/// Which parabolic presentation the integral model is induced from.
enum class LatticeVariant { Q, QPrime, QDoublePrime };

std::string to_string(LatticeVariant v);
LatticeVariant parse_lattice_variant(const std::string& text);

struct LatticeParams {
    long n = 1;
    long m = 1;
    Rational eps{0};
    long mu = 0;
};

/// Integral models are nonzero iff mu/2nm + eps (q), mu/2nm - eps (q') is an
/// integer, or mu is even (q'', which needs m = 2n).
bool nonvanishing(LatticeVariant v, const LatticeParams& x);

/// Index support of the integral model (empty when it vanishes).
Support lattice_support(LatticeVariant v, const LatticeParams& x);

/// M_p = max({0} u { -sum_{l=0}^{s} ord2(mu/4nm + (l+p+eps)/2) : 0 <= s <= -(p + mu/2nm + eps + 1) }).
long exponent_M(long p, const LatticeParams& x);

/// N_p = max({0} u { -sum_{l=0}^{s} ord2(mu/4nm + (l-p-eps)/2) : 0 <= s <= p - mu/2nm + eps - 1 }).
long exponent_N(long p, const LatticeParams& x);

struct LatticeReport {
    LatticeVariant variant = LatticeVariant::Q;
    LatticeParams params;
    bool nonzero = false;
    Support support = Support::empty();
    std::map<long, long> exponents;  // p -> power of 2 scaling w_p
    std::optional<bool> oracle_agrees;
};

/// Exponent table over [lo, hi] intersected with the support.
LatticeReport integral_model(LatticeVariant v, const LatticeParams& x, long lo, long hi);

/// Least e >= 0 such that phi(1) = 2^e extends integrally along the
/// recurrences, found by direct iteration up to total degree `depth`.
/// Throws DomainError("no extension") when no such e exists: the main
/// chain does not terminate within depth (q, q'), or no e <= max_e works (default depth/2).
long oracle_min_exponent(LatticeVariant v, long p, const LatticeParams& x, long depth = 64, long max_e = -1);

/// Runs oracle_min_exponent over the report's exponents and records agreement.
void attach_oracle(LatticeReport& report, long depth = 64);

/// Running maxima of -sum ord2 along the main chain at depths 2^1 .. 2^a_max.
/// The chain multipliers are the same as in exponent_M / exponent_N.
std::vector<long> partial_sum_maxima(LatticeVariant v, long p, const LatticeParams& x, long a_max);

/// sum_{l=1}^{s} (1 - ord2(l)).
long lemma49_sum(long s);

}  // namespace hclat
