#pragma once

#include "hclat/rational.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hclat {

/// Finite Laurent polynomial in z with rational coefficients, stored
/// densely from the lowest to the highest nonzero exponent.
///
/// Invariant: either coeffs_ is empty (the zero polynomial) or both
/// coeffs_.front() and coeffs_.back() are nonzero.
class Laurent {
public:
    Laurent() = default;
    Laurent(const Rational& c);  // NOLINT(google-explicit-constructor): constants promote
    Laurent(long c) : Laurent(Rational(c)) {}  // NOLINT
    Laurent(long lowest, std::vector<Rational> coeffs);

    static Laurent z(long exponent = 1) { return monomial(Rational(1), exponent); }
    static Laurent monomial(const Rational& c, long exponent);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return is_zero() || (lowest_ == 0 && coeffs_.size() == 1); }
    /// Only valid when is_zero() is false.
    long lowest_exponent() const { return lowest_; }
    long highest_exponent() const { return lowest_ + static_cast<long>(coeffs_.size()) - 1; }
    Rational coeff(long exponent) const;
    Rational constant_term() const { return coeff(0); }
    /// Terms as (exponent, coefficient), nonzero only, ascending.
    std::vector<std::pair<long, Rational>> terms() const;

    Rational evaluate(const Rational& at) const;  // throws on pole at 0

    Laurent& operator+=(const Laurent& other);
    Laurent& operator-=(const Laurent& other);
    Laurent& operator*=(const Laurent& other);
    Laurent operator-() const;

    /// Exact division by a nonzero monomial c*z^k.
    Laurent div_monomial(const Rational& c, long exponent) const;

    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator*(Laurent a, const Laurent& b) { return a *= b; }
    friend bool operator==(const Laurent& a, const Laurent& b) {
        return a.coeffs_ == b.coeffs_ && (a.is_zero() || a.lowest_ == b.lowest_);
    }

private:
    void trim();

    long lowest_ = 0;
    std::vector<Rational> coeffs_;
};

/// Human form: "1 + 2*z - 1/2*z^-1", terms in ascending exponent. "0" for zero.
std::string to_string(const Laurent& p);

/// Parses the human form above. Accepts "z", "z^3", "-z^-2", "3/4*z", "2z".
Laurent parse_laurent(std::string_view text);

}  // namespace hclat
