#include "hclat/rational.hpp"

#include <cctype>
#include <climits>

namespace hclat {

Rational make_rational(long num, long den) {
    if (den == 0) throw DomainError("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DomainError("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

bool is_integer(const Rational& x) { return x.get_den() == 1; }

Integer to_integer(const Rational& x) {
    if (!is_integer(x)) throw DomainError("not an integer: " + to_string(x));
    return x.get_num();
}

long to_long(const Rational& x) {
    Integer z = to_integer(x);
    if (!z.fits_slong_p()) throw DomainError("integer out of range: " + z.get_str());
    return z.get_si();
}

long ord2(const Integer& x) {
    if (x == 0) throw DomainError("valuation of zero undefined");
    return static_cast<long>(mpz_scan1(x.get_mpz_t(), 0));
}

long ord2(const Rational& x) {
    if (x == 0) throw DomainError("valuation of zero undefined");
    return ord2(x.get_num()) - ord2(x.get_den());
}

Integer floor(const Rational& x) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

Rational frac_mod1(const Rational& x) { return x - Rational(floor(x)); }

std::string to_string(const Rational& x) {
    if (is_integer(x)) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

namespace {

std::string normalize_minus(std::string_view text) {
    // U+2212 MINUS SIGN is E2 88 92 in UTF-8.
    std::string out;
    out.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
            static_cast<unsigned char>(text[i + 1]) == 0x88 &&
            static_cast<unsigned char>(text[i + 2]) == 0x92) {
            out.push_back('-');
            i += 2;
        } else if (!std::isspace(static_cast<unsigned char>(text[i]))) {
            out.push_back(text[i]);
        }
    }
    return out;
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string s = normalize_minus(text);
    bool negative = false;
    std::string_view body(s);
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw DomainError("malformed rational: '" + std::string(text) + "'");
    Integer n{std::string(num)}, d{std::string(den)};
    if (d == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
    Rational r(negative ? Integer(-n) : n, d);
    r.canonicalize();
    return r;
}

}  // namespace hclat
