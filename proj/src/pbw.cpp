#include "hclat/pbw.hpp"

#include <sstream>

namespace hclat {

UEAElement UEAElement::monomial(const PBWMonomial& m, const Rational& c) {
    UEAElement u;
    u.add(m, c);
    return u;
}

UEAElement UEAElement::generator(Generator x) {
    switch (x) {
        case Generator::F: return monomial({1, 0, 0});
        case Generator::H: return monomial({0, 1, 0});
        case Generator::E: return monomial({0, 0, 1});
    }
    return {};
}

Rational UEAElement::coeff(const PBWMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void UEAElement::add(const PBWMonomial& m, const Rational& c) {
    if (m[0] < 0 || m[1] < 0 || m[2] < 0) throw DomainError("negative PBW exponent");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

UEAElement& UEAElement::operator+=(const UEAElement& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

UEAElement& UEAElement::operator-=(const UEAElement& o) {
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
}

UEAElement operator*(const Rational& s, const UEAElement& a) {
    UEAElement out;
    for (const auto& [m, c] : a.terms_) out.add(m, s * c);
    return out;
}

long adjoint_weight(const PBWMonomial& m, long n) { return n * (m[2] - m[0]); }

UEAElement left_multiply(Generator x, const UEAElement& u, const ZForm& g) {
    const Rational n(g.n()), m(g.m());
    UEAElement out;
    for (const auto& [mono, c] : u.terms()) {
        const long a = mono[0], b = mono[1], e = mono[2];
        switch (x) {
            case Generator::F: out.add({a + 1, b, e}, c); break;
            case Generator::H:
                // H F^a = F^a (H - na)
                out.add({a, b + 1, e}, c);
                out.add({a, b, e}, -n * Rational(a) * c);
                break;
            case Generator::E: {
                // E F^a = F^a E + m F^{a-1}(aH - n a(a-1)/2), and E H^b = (H - n)^b E
                Integer binom = 1;
                Rational pow_n = 1;
                for (long k = b; k >= 0; --k) {
                    // term C(b,k) H^k (-n)^{b-k}
                    out.add({a, k, e + 1}, c * Rational(binom) * pow_n);
                    binom = binom * k / (b - k + 1);
                    pow_n *= -n;
                }
                if (a > 0) {
                    out.add({a - 1, b + 1, e}, c * m * Rational(a));
                    out.add({a - 1, b, e}, -c * m * n * make_rational(a * (a - 1), 2));
                }
                break;
            }
        }
    }
    return out;
}

UEAElement multiply(const UEAElement& x, const UEAElement& y, const ZForm& g) {
    UEAElement out;
    for (const auto& [mono, c] : x.terms()) {
        UEAElement acc = y;
        for (long i = 0; i < mono[2]; ++i) acc = left_multiply(Generator::E, acc, g);
        for (long i = 0; i < mono[1]; ++i) acc = left_multiply(Generator::H, acc, g);
        for (long i = 0; i < mono[0]; ++i) acc = left_multiply(Generator::F, acc, g);
        out += c * acc;
    }
    return out;
}

UEAElement normal_form(const std::vector<Generator>& word, const ZForm& g, const Rational& coeff) {
    UEAElement acc = UEAElement::monomial({0, 0, 0}, coeff);
    for (auto it = word.rbegin(); it != word.rend(); ++it) acc = left_multiply(*it, acc, g);
    return acc;
}

UEAElement normal_form(const UEAElement& u, const ZForm& g) {
    // F^a H^b E^c applied to 1 in order reproduces the monomial.
    return multiply(u, UEAElement::one(), g);
}

RingEscape::RingEscape(const Rational& value, const std::string& ring)
    : DomainError("coefficient " + to_string(value) + " does not lie in " + ring), value_(value) {}

namespace {

void check_ring(const ModuleVector& v, const WeightModule& mod) {
    for (const auto& [p, c] : v)
        if (!mod.ring.contains(c)) throw RingEscape(c, mod.ring.name());
}

}  // namespace

ModuleVector act(const UEAElement& u, const WeightModule& mod, const ModuleVector& v) {
    ModuleVector out;
    for (const auto& [mono, c] : u.terms()) {
        ModuleVector w = v;
        for (long i = 0; i < mono[2]; ++i) w = mod.apply_e(w);
        for (long i = 0; i < mono[1]; ++i) w = mod.apply_h(w);
        for (long i = 0; i < mono[0]; ++i) w = mod.apply_f(w);
        for (const auto& [p, x] : w) {
            Rational s = out[p] + c * x;
            if (s == 0)
                out.erase(p);
            else
                out[p] = s;
        }
    }
    check_ring(out, mod);
    return out;
}

std::string to_string(const UEAElement& u) {
    if (u.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    auto power = [&](const char* sym, long k) {
        if (k == 0) return;
        os << sym;
        if (k > 1) os << '^' << k;
    };
    for (const auto& [m, c] : u.terms()) {
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << '-';
        first = false;
        Rational a = abs(c);
        const bool unit = m == PBWMonomial{0, 0, 0};
        if (a != 1 || unit) os << to_string(a) << (unit ? "" : "*");
        power("F", m[0]);
        power("H", m[1]);
        power("E", m[2]);
    }
    return os.str();
}

nlohmann::json to_json(const UEAElement& u) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [m, c] : u.terms()) out.push_back({m[0], m[1], m[2], to_string(c)});
    return out;
}

UEAElement uea_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw DomainError("UEA element JSON must be a list of [a, b, c, coeff]");
    UEAElement u;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 4) throw DomainError("UEA term must be [a, b, c, coeff]");
        u.add({t[0].get<long>(), t[1].get<long>(), t[2].get<long>()}, parse_rational(t[3].get<std::string>()));
    }
    return u;
}

}  // namespace hclat
