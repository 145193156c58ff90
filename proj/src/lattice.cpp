#include "hclat/lattice.hpp"

#include <algorithm>

namespace hclat {

std::string to_string(LatticeVariant v) {
    switch (v) {
        case LatticeVariant::Q: return "q";
        case LatticeVariant::QPrime: return "qp";
        case LatticeVariant::QDoublePrime: return "qpp";
    }
    return "?";
}

LatticeVariant parse_lattice_variant(const std::string& text) {
    if (text == "q") return LatticeVariant::Q;
    if (text == "qp") return LatticeVariant::QPrime;
    if (text == "qpp") return LatticeVariant::QDoublePrime;
    throw DomainError("unknown lattice variant '" + text + "' (expected q, qp or qpp)");
}

namespace {

void check_params(LatticeVariant v, const LatticeParams& x) {
    if (x.n < 1 || x.m < 1) throw DomainError("n and m must be positive");
    require_eps(x.n, x.eps);
    if (v == LatticeVariant::QDoublePrime && x.m != 2 * x.n)
        throw DomainError("qpp requires m = 2n (got n = " + std::to_string(x.n) + ", m = " + std::to_string(x.m) + ")");
}

Rational mu_over_2nm(const LatticeParams& x) { return make_rational(x.mu, 2 * x.n * x.m); }

// The integer top (q) or bottom (q') of the support.
long boundary(LatticeVariant v, const LatticeParams& x) {
    if (v == LatticeVariant::Q) return to_long(-mu_over_2nm(x) - x.eps);
    return to_long(mu_over_2nm(x) - x.eps);
}

// Multiplier of the main chain at step l: phi(X^{l+1}) = c_l phi(X^l).
Rational main_multiplier(LatticeVariant v, long p, long l, const LatticeParams& x) {
    const Rational base = make_rational(x.mu, 4 * x.n * x.m);
    switch (v) {
        case LatticeVariant::Q: return base + make_rational(1, 2) * (Rational(l + p) + x.eps);
        case LatticeVariant::QPrime: return base + make_rational(1, 2) * (Rational(l - p) - x.eps);
        case LatticeVariant::QDoublePrime:
            return make_rational(x.mu, 2) - Rational(x.n) * (Rational(l - p) - x.eps);
    }
    return 0;
}

// Multiplier of the secondary chain: phi(Y^{s+1} X^t) = d_{s,t} phi(Y^s X^t).
Rational secondary_multiplier(LatticeVariant v, long p, long s, long t, const LatticeParams& x) {
    const Rational half_mu = make_rational(x.mu, 2);
    switch (v) {
        case LatticeVariant::Q: return half_mu + Rational(x.n * x.m) * (Rational(s - t - p) - x.eps);
        case LatticeVariant::QPrime: return half_mu + Rational(x.n * x.m) * (Rational(s - t + p) + x.eps);
        case LatticeVariant::QDoublePrime: return half_mu + Rational(x.n) * (Rational(s - t + p) + x.eps);
    }
    return 0;
}

long max_partial_sum(LatticeVariant v, long p, long s_max, const LatticeParams& x) {
    long best = 0, sum = 0;
    for (long l = 0; l <= s_max; ++l) {
        sum -= ord2(main_multiplier(v, p, l, x));
        best = std::max(best, sum);
    }
    return best;
}

}  // namespace

bool nonvanishing(LatticeVariant v, const LatticeParams& x) {
    check_params(v, x);
    switch (v) {
        case LatticeVariant::Q: return is_integer(mu_over_2nm(x) + x.eps);
        case LatticeVariant::QPrime: return is_integer(mu_over_2nm(x) - x.eps);
        case LatticeVariant::QDoublePrime: return x.mu % 2 == 0;
    }
    return false;
}

Support lattice_support(LatticeVariant v, const LatticeParams& x) {
    if (!nonvanishing(v, x)) return Support::empty();
    switch (v) {
        case LatticeVariant::Q: return Support::at_most(boundary(v, x));
        case LatticeVariant::QPrime: return Support::at_least(boundary(v, x));
        case LatticeVariant::QDoublePrime: return Support::all();
    }
    return Support::empty();
}

long exponent_M(long p, const LatticeParams& x) {
    if (!nonvanishing(LatticeVariant::Q, x)) throw DomainError("integral model vanishes for these parameters");
    const long top = boundary(LatticeVariant::Q, x);
    if (p > top) throw DomainError("index above top weight");
    return max_partial_sum(LatticeVariant::Q, p, top - p - 1, x);
}

long exponent_N(long p, const LatticeParams& x) {
    if (!nonvanishing(LatticeVariant::QPrime, x)) throw DomainError("integral model vanishes for these parameters");
    const long bottom = boundary(LatticeVariant::QPrime, x);
    if (p < bottom) throw DomainError("index below bottom weight");
    return max_partial_sum(LatticeVariant::QPrime, p, p - bottom - 1, x);
}

LatticeReport integral_model(LatticeVariant v, const LatticeParams& x, long lo, long hi) {
    LatticeReport r;
    r.variant = v;
    r.params = x;
    r.nonzero = nonvanishing(v, x);
    r.support = lattice_support(v, x);
    if (!r.nonzero) return r;
    for (long p = lo; p <= hi; ++p) {
        if (!r.support.contains(p)) continue;
        switch (v) {
            case LatticeVariant::Q: r.exponents[p] = exponent_M(p, x); break;
            case LatticeVariant::QPrime: r.exponents[p] = exponent_N(p, x); break;
            case LatticeVariant::QDoublePrime: r.exponents[p] = 0; break;
        }
    }
    return r;
}

long oracle_min_exponent(LatticeVariant v, long p, const LatticeParams& x, long depth, long max_e) {
    check_params(v, x);
    // Values of phi with phi(1) = 1 along the main chain and, from each
    // nonzero main value, along the secondary chain.
    std::vector<Rational> values{Rational(1)};
    std::vector<Rational> main{Rational(1)};
    bool terminated = false;
    for (long l = 0; l < depth; ++l) {
        Rational next = main.back() * main_multiplier(v, p, l, x);
        if (next == 0) {
            terminated = true;
            break;
        }
        main.push_back(next);
        values.push_back(next);
    }
    if (!terminated && v != LatticeVariant::QDoublePrime) throw DomainError("no extension");
    for (long t = 0; t < static_cast<long>(main.size()); ++t) {
        Rational cur = main[t];
        for (long s = 0; s + t < depth; ++s) {
            cur *= secondary_multiplier(v, p, s, t, x);
            if (cur == 0) break;
            values.push_back(cur);
        }
    }
    // Exponents growing with the depth mean no finite scale works.
    if (max_e < 0) max_e = depth / 2;
    for (long e = 0; e <= max_e; ++e) {
        const Rational scale(Integer(1) << e);
        bool ok = std::all_of(values.begin(), values.end(), [&](const Rational& val) { return is_integer(scale * val); });
        if (ok) return e;
    }
    throw DomainError("no extension");
}

void attach_oracle(LatticeReport& report, long depth) {
    bool agree = true;
    for (const auto& [p, e] : report.exponents) {
        try {
            agree = agree && oracle_min_exponent(report.variant, p, report.params, depth) == e;
        } catch (const DomainError&) {
            agree = false;
        }
    }
    if (!report.nonzero) {
        // A vanishing model must have no extension at any index.
        for (long p = -4; p <= 4 && agree; ++p) {
            try {
                oracle_min_exponent(report.variant, p, report.params, depth);
                agree = false;
            } catch (const DomainError&) {
            }
        }
    }
    report.oracle_agrees = agree;
}

std::vector<long> partial_sum_maxima(LatticeVariant v, long p, const LatticeParams& x, long a_max) {
    check_params(v, x);
    std::vector<long> out;
    long best = 0, sum = 0, l = 0;
    for (long a = 1; a <= a_max; ++a) {
        for (; l < (1L << a); ++l) {
            Rational c = main_multiplier(v, p, l, x);
            if (c == 0) throw DomainError("main chain terminates at step " + std::to_string(l));
            sum -= ord2(c);
            best = std::max(best, sum);
        }
        out.push_back(best);
    }
    return out;
}

long lemma49_sum(long s) {
    if (s < 0) throw DomainError("lemma49_sum needs s >= 0");
    long total = 0;
    for (long l = 1; l <= s; ++l) total += 1 - ord2(Integer(l));
    return total;
}

}  // namespace hclat
