#pragma once

#include "hclat/rational.hpp"
#include "hclat/weight_module.hpp"
#include "hclat/zform.hpp"

#include <json.hpp>

#include <array>
#include <map>
#include <string>
#include <vector>

namespace hclat {

enum class Generator { E, F, H };

/// Exponents (a, b, c) of the PBW monomial F^a H^b E^c.
using PBWMonomial = std::array<long, 3>;

/// Element of U(g_{n,m}) in PBW normal form, order F < H < E.
class UEAElement {
public:
    UEAElement() = default;
    static UEAElement one() { return monomial({0, 0, 0}); }
    static UEAElement monomial(const PBWMonomial& m, const Rational& c = Rational(1));
    static UEAElement generator(Generator x);

    const std::map<PBWMonomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(const PBWMonomial& m) const;

    void add(const PBWMonomial& m, const Rational& c);
    UEAElement& operator+=(const UEAElement& o);
    UEAElement& operator-=(const UEAElement& o);
    friend UEAElement operator+(UEAElement a, const UEAElement& b) { return a += b; }
    friend UEAElement operator-(UEAElement a, const UEAElement& b) { return a -= b; }
    friend UEAElement operator*(const Rational& s, const UEAElement& a);
    friend bool operator==(const UEAElement&, const UEAElement&) = default;

private:
    std::map<PBWMonomial, Rational> terms_;
};

/// Adjoint T^1-weight of F^a H^b E^c: n(c - a).
long adjoint_weight(const PBWMonomial& m, long n);

/// Left multiplication of a normal-form element by one generator.
UEAElement left_multiply(Generator x, const UEAElement& u, const ZForm& g);

/// Product in U(g); both factors and the result are in normal form.
UEAElement multiply(const UEAElement& x, const UEAElement& y, const ZForm& g);

/// Normal form of coeff * x_1 x_2 ... x_k.
UEAElement normal_form(const std::vector<Generator>& word, const ZForm& g, const Rational& coeff = Rational(1));

/// Re-normalizes an element (identity on normal forms).
UEAElement normal_form(const UEAElement& u, const ZForm& g);

/// Raised by act() when a coefficient leaves the module's ring.
class RingEscape : public DomainError {
public:
    RingEscape(const Rational& value, const std::string& ring);
    const Rational& value() const { return value_; }

private:
    Rational value_;
};

/// Left action on a module vector, rightmost factor first.
ModuleVector act(const UEAElement& u, const WeightModule& mod, const ModuleVector& v);

std::string to_string(const UEAElement& u);
nlohmann::json to_json(const UEAElement& u);
UEAElement uea_from_json(const nlohmann::json& j);

}  // namespace hclat
