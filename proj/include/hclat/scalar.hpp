#pragma once

#include "hclat/laurent.hpp"
#include "hclat/rational.hpp"

#include <json.hpp>

#include <string>
#include <variant>

namespace hclat {

/// The coefficient rings that occur: Z, Z[1/N], Q, Q[z], Q[z^{+-1}].
class CoefficientRing {
public:
    enum class Kind { Integers, LocalizedIntegers, Rationals, Poly, Laurent };

    static CoefficientRing integers() { return CoefficientRing(Kind::Integers, 1); }
    static CoefficientRing localized(long inverted);  // Z[1/N], N >= 1
    static CoefficientRing rationals() { return CoefficientRing(Kind::Rationals, 1); }
    static CoefficientRing poly() { return CoefficientRing(Kind::Poly, 1); }
    static CoefficientRing laurent() { return CoefficientRing(Kind::Laurent, 1); }

    Kind kind() const { return kind_; }
    /// N for Z[1/N]; 1 otherwise.
    long inverted() const { return inverted_; }
    bool is_polynomial() const { return kind_ == Kind::Poly || kind_ == Kind::Laurent; }

    bool contains(const Rational& x) const;
    bool contains(const Laurent& x) const;

    std::string name() const;

    friend bool operator==(const CoefficientRing&, const CoefficientRing&) = default;

private:
    CoefficientRing(Kind kind, long inverted) : kind_(kind), inverted_(inverted) {}
    Kind kind_;
    long inverted_;
};

/// A value tagged with the ring it is declared to live in.
struct Scalar {
    std::variant<Rational, Laurent> value;
    CoefficientRing ring = CoefficientRing::rationals();

    static Scalar rational(Rational x, CoefficientRing r = CoefficientRing::rationals()) {
        return Scalar{std::move(x), r};
    }
    static Scalar poly(Laurent x, CoefficientRing r = CoefficientRing::laurent()) { return Scalar{std::move(x), r}; }

    bool is_rational() const { return std::holds_alternative<Rational>(value); }
    Laurent as_laurent() const;
};

/// True iff x lies in r under Z in Z[1/N] in Q in Q[z] in Q[z^{+-1}].
bool in_ring(const Scalar& x, const CoefficientRing& r);

std::string to_string(const Scalar& s);

/// Scalar JSON: a rational string, or [[exp, "num/den"], ...] for polynomials.
nlohmann::json laurent_to_json(const Laurent& p);
Laurent laurent_from_json(const nlohmann::json& j);

}  // namespace hclat
