#include "hclat/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hclat {

Laurent::Laurent(const Rational& c) {
    if (c != 0) coeffs_.push_back(c);
}

Laurent::Laurent(long lowest, std::vector<Rational> coeffs) : lowest_(lowest), coeffs_(std::move(coeffs)) {
    trim();
}

Laurent Laurent::monomial(const Rational& c, long exponent) {
    Laurent p;
    if (c != 0) {
        p.lowest_ = exponent;
        p.coeffs_.push_back(c);
    }
    return p;
}

void Laurent::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c != 0; });
    lowest_ += static_cast<long>(first - coeffs_.begin());
    coeffs_.erase(coeffs_.begin(), first);
    if (coeffs_.empty()) lowest_ = 0;
}

Rational Laurent::coeff(long exponent) const {
    if (is_zero() || exponent < lowest_ || exponent > highest_exponent()) return Rational(0);
    return coeffs_[static_cast<std::size_t>(exponent - lowest_)];
}

std::vector<std::pair<long, Rational>> Laurent::terms() const {
    std::vector<std::pair<long, Rational>> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) out.emplace_back(lowest_ + static_cast<long>(i), coeffs_[i]);
    return out;
}

Rational Laurent::evaluate(const Rational& at) const {
    if (is_zero()) return Rational(0);
    if (at == 0) {
        if (lowest_ < 0) throw DomainError("pole at z = 0 in " + to_string(*this));
        return coeff(0);
    }
    // Horner on the coefficient list, then scale by at^lowest.
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    Rational scale(1);
    Rational base = lowest_ >= 0 ? at : Rational(1) / at;
    for (long i = 0; i < std::labs(lowest_); ++i) scale *= base;
    return canonical(acc * scale);
}

Laurent& Laurent::operator+=(const Laurent& other) {
    if (other.is_zero()) return *this;
    if (is_zero()) return *this = other;
    long lo = std::min(lowest_, other.lowest_);
    long hi = std::max(highest_exponent(), other.highest_exponent());
    std::vector<Rational> out(static_cast<std::size_t>(hi - lo + 1), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[static_cast<std::size_t>(lowest_ - lo) + i] += coeffs_[i];
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
        out[static_cast<std::size_t>(other.lowest_ - lo) + i] += other.coeffs_[i];
    lowest_ = lo;
    coeffs_ = std::move(out);
    trim();
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& other) { return *this += -other; }

Laurent Laurent::operator-() const {
    Laurent out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

Laurent& Laurent::operator*=(const Laurent& other) {
    if (is_zero() || other.is_zero()) return *this = Laurent();
    std::vector<Rational> out(coeffs_.size() + other.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
    lowest_ += other.lowest_;
    coeffs_ = std::move(out);
    trim();
    return *this;
}

Laurent Laurent::div_monomial(const Rational& c, long exponent) const {
    if (c == 0) throw DomainError("division by zero monomial");
    Laurent out = *this;
    if (out.is_zero()) return out;
    for (auto& x : out.coeffs_) x /= c;
    out.lowest_ -= exponent;
    return out;
}

std::string to_string(const Laurent& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        Rational mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            os << to_string(mag);
            continue;
        }
        if (mag != 1) os << to_string(mag) << "*";
        os << "z";
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

namespace {

class LaurentParser {
public:
    explicit LaurentParser(std::string_view text) {
        for (std::size_t i = 0; i < text.size(); ++i) {
            unsigned char ch = static_cast<unsigned char>(text[i]);
            if (ch == 0xE2 && i + 2 < text.size() && static_cast<unsigned char>(text[i + 1]) == 0x88 &&
                static_cast<unsigned char>(text[i + 2]) == 0x92) {
                s_.push_back('-');
                i += 2;
            } else if (!std::isspace(ch)) {
                s_.push_back(text[i]);
            }
        }
        original_ = std::string(text);
    }

    Laurent parse() {
        if (s_.empty()) fail("empty polynomial");
        Laurent acc;
        bool first = true;
        while (pos_ < s_.size()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            acc += parse_term() * Laurent(Rational(sign));
        }
        return acc;
    }

private:
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    [[noreturn]] void fail(const std::string& why) const {
        throw DomainError("malformed polynomial '" + original_ + "': " + why);
    }

    std::string digits() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return s_.substr(start, pos_ - start);
    }

    Laurent parse_term() {
        Rational coeff(1);
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::string num = digits();
            std::string den = "1";
            if (peek() == '/') {
                ++pos_;
                den = digits();
                if (den.empty()) fail("missing denominator");
            }
            coeff = parse_rational(num + "/" + den);
            have_coeff = true;
            if (peek() == '*') ++pos_;
        }
        if (peek() != 'z') {
            if (!have_coeff) fail("expected a coefficient or 'z'");
            return Laurent(coeff);
        }
        ++pos_;
        long exponent = 1;
        if (peek() == '^') {
            ++pos_;
            int esign = 1;
            if (peek() == '-' || peek() == '+') {
                esign = peek() == '-' ? -1 : 1;
                ++pos_;
            }
            std::string e = digits();
            if (e.empty()) fail("missing exponent");
            exponent = esign * std::stol(e);
        }
        return Laurent::monomial(coeff, exponent);
    }

    std::string s_;
    std::string original_;
    std::size_t pos_ = 0;
};

}  // namespace

Laurent parse_laurent(std::string_view text) { return LaurentParser(text).parse(); }

}  // namespace hclat
