#include "hclat/scalar.hpp"

namespace hclat {

CoefficientRing CoefficientRing::localized(long inverted) {
    if (inverted < 1) throw DomainError("Z[1/N] requires N >= 1, got " + std::to_string(inverted));
    return CoefficientRing(Kind::LocalizedIntegers, inverted);
}

namespace {

// Strip from d every prime factor shared with n; d divides a power of n iff
// what remains is 1.
bool divides_power_of(Integer d, const Integer& n) {
    if (d < 0) d = -d;
    Integer g;
    while (d != 1) {
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        if (g == 1) return false;
        while (mpz_divisible_p(d.get_mpz_t(), g.get_mpz_t())) d /= g;
    }
    return true;
}

}  // namespace

bool CoefficientRing::contains(const Rational& x) const {
    switch (kind_) {
        case Kind::Integers: return is_integer(x);
        case Kind::LocalizedIntegers: return divides_power_of(x.get_den(), Integer(inverted_));
        case Kind::Rationals:
        case Kind::Poly:
        case Kind::Laurent: return true;
    }
    return false;
}

bool CoefficientRing::contains(const Laurent& x) const {
    switch (kind_) {
        case Kind::Laurent: return true;
        case Kind::Poly: return x.is_zero() || x.lowest_exponent() >= 0;
        default: return x.is_constant() && contains(x.constant_term());
    }
}

std::string CoefficientRing::name() const {
    switch (kind_) {
        case Kind::Integers: return "Z";
        case Kind::LocalizedIntegers: return "Z[1/" + std::to_string(inverted_) + "]";
        case Kind::Rationals: return "Q";
        case Kind::Poly: return "Q[z]";
        case Kind::Laurent: return "Q[z^-1,z]";
    }
    return "?";
}

Laurent Scalar::as_laurent() const {
    if (const auto* r = std::get_if<Rational>(&value)) return Laurent(*r);
    return std::get<Laurent>(value);
}

bool in_ring(const Scalar& x, const CoefficientRing& r) {
    if (const auto* q = std::get_if<Rational>(&x.value)) return r.contains(*q);
    return r.contains(std::get<Laurent>(x.value));
}

std::string to_string(const Scalar& s) {
    if (const auto* q = std::get_if<Rational>(&s.value)) return to_string(*q);
    return to_string(std::get<Laurent>(s.value));
}

nlohmann::json laurent_to_json(const Laurent& p) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [e, c] : p.terms()) out.push_back({e, to_string(c)});
    return out;
}

Laurent laurent_from_json(const nlohmann::json& j) {
    if (j.is_string()) return parse_laurent(j.get<std::string>());
    if (!j.is_array()) throw DomainError("polynomial JSON must be a string or a list of [exp, coeff]");
    Laurent out;
    for (const auto& term : j) {
        if (!term.is_array() || term.size() != 2) throw DomainError("polynomial term must be [exp, coeff]");
        const auto& c = term[1];
        Rational coeff = c.is_string() ? parse_rational(c.get<std::string>()) : Rational(c.get<long>());
        out += Laurent::monomial(coeff, term[0].get<long>());
    }
    return out;
}

}  // namespace hclat
