#include "hclat/hecke.hpp"

namespace hclat {

namespace {

template <class Map, class Key>
void accumulate(Map& m, const Key& k, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = m.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) m.erase(it);
    }
}

}  // namespace

CharacterLattice CharacterLattice::cyclic(long n) {
    if (n < 1) throw DomainError("Z/n requires n >= 1, got " + std::to_string(n));
    return {Kind::CyclicOrder, n};
}

long CharacterLattice::reduce(long lambda) const {
    if (kind == Kind::FreeRankOne) return lambda;
    long r = lambda % order;
    return r < 0 ? r + order : r;
}

HeckeElement HeckeElement::idempotent(long lambda, CharacterLattice lattice) {
    HeckeElement x(lattice);
    x.add(lambda, Rational(1));
    return x;
}

void HeckeElement::add(long lambda, const Rational& c) {
    if (!lattice_.contains(lambda))
        throw DomainError("character " + std::to_string(lambda) + " is not a residue mod " +
                          std::to_string(lattice_.order));
    accumulate(support_, lambda, c);
}

GradedVector HeckeElement::apply(const GradedVector& v) const {
    GradedVector out;
    for (const auto& [lam, c] : v) {
        auto it = support_.find(lattice_.reduce(lam));
        if (it != support_.end()) accumulate(out, lam, c * it->second);
    }
    return out;
}

HeckeElement operator+(HeckeElement a, const HeckeElement& b) {
    if (!(a.lattice_ == b.lattice_)) throw DomainError("Hecke elements over different lattices");
    for (const auto& [l, c] : b.support_) a.add(l, c);
    return a;
}

HeckeElement operator*(const Rational& s, HeckeElement a) {
    HeckeElement out(a.lattice_);
    for (const auto& [l, c] : a.support_) out.add(l, s * c);
    return out;
}

HeckeElement hecke_mul(const HeckeElement& x, const HeckeElement& y) {
    if (!(x.lattice() == y.lattice())) throw DomainError("Hecke elements over different lattices");
    HeckeElement out(x.lattice());
    for (const auto& [l, c] : x.support()) {
        auto it = y.support().find(l);
        if (it != y.support().end()) out.add(l, c * it->second);
    }
    return out;
}

GradedVector project(const GradedVector& v, long lambda) {
    auto it = v.find(lambda);
    if (it == v.end()) return {};
    return {{lambda, it->second}};
}

GradedVector restrict_to(const GradedVector& v, const CharacterLattice& lattice) {
    GradedVector out;
    for (const auto& [l, c] : v) accumulate(out, lattice.reduce(l), c);
    return out;
}

TensorVector tensor_action(long lambda, const GradedVector& v, const GradedVector& w,
                           const CharacterLattice& lattice) {
    TensorVector out;
    for (const auto& [mu, a] : v) {
        for (const auto& [nu, b] : w)
            if (lattice.add(mu, nu) == lattice.reduce(lambda)) accumulate(out, std::make_pair(mu, nu), a * b);
    }
    return out;
}

GradedVector apply(const HomMatrix& f, const GradedVector& v) {
    GradedVector out;
    for (const auto& [ts, c] : f) {
        auto it = v.find(ts.second);
        if (it != v.end()) accumulate(out, ts.first, c * it->second);
    }
    return out;
}

HomMatrix hom_project(long lambda, const HomMatrix& f, const CharacterLattice& lattice) {
    HomMatrix out;
    for (const auto& [ts, c] : f)
        if (lattice.sub(ts.first, ts.second) == lattice.reduce(lambda)) out.emplace(ts, c);
    return out;
}

GradedVector hom_action(long lambda, const HomMatrix& f, const GradedVector& v, const CharacterLattice& lattice) {
    GradedVector out;
    for (const auto& [mu, c] : v) {
        GradedVector image = apply(f, {{mu, c}});
        for (const auto& [t, x] : image)
            if (lattice.reduce(t) == lattice.add(lambda, mu)) accumulate(out, t, x);
    }
    return out;
}

SmashElement SmashElement::term(const UEAElement& a, long lambda) {
    SmashElement s;
    for (const auto& [m, c] : a.terms()) s.add(m, lambda, c);
    return s;
}

void SmashElement::add(const PBWMonomial& m, long lambda, const Rational& c) {
    accumulate(terms_, std::make_pair(m, lambda), c);
}

SmashElement& SmashElement::operator+=(const SmashElement& o) {
    for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
    return *this;
}

UEAElement weight_component(const UEAElement& b, long lambda, long n) {
    UEAElement out;
    for (const auto& [m, c] : b.terms())
        if (adjoint_weight(m, n) == lambda) out.add(m, c);
    return out;
}

SmashElement smash_mul(const SmashElement& x, const SmashElement& y, const ZForm& g) {
    SmashElement out;
    for (const auto& [kx, cx] : x.terms()) {
        for (const auto& [ky, cy] : y.terms()) {
            const long lambda = kx.second, mu = ky.second;
            if (adjoint_weight(ky.first, g.n()) != lambda - mu) continue;
            UEAElement prod = multiply(UEAElement::monomial(kx.first, cx), UEAElement::monomial(ky.first, cy), g);
            out += SmashElement::term(prod, mu);
        }
    }
    return out;
}

GradedVector t_finite_part(const std::function<Rational(long)>& family, const std::vector<long>& window) {
    GradedVector out;
    for (long l : window) accumulate(out, l, family(l));
    return out;
}

nlohmann::json to_json(const HeckeElement& x) {
    nlohmann::json j;
    if (x.lattice().kind == CharacterLattice::Kind::FreeRankOne)
        j["lattice"] = "Z";
    else
        j["lattice"] = {{"Z/n", x.lattice().order}};
    j["support"] = nlohmann::json::array();
    for (const auto& [l, c] : x.support()) j["support"].push_back({l, to_string(c)});
    return j;
}

HeckeElement hecke_from_json(const nlohmann::json& j) {
    CharacterLattice lattice = CharacterLattice::integers();
    const auto& lat = j.at("lattice");
    if (lat.is_object())
        lattice = CharacterLattice::cyclic(lat.at("Z/n").get<long>());
    else if (lat != "Z")
        throw DomainError("lattice must be \"Z\" or {\"Z/n\": n}");
    HeckeElement x(lattice);
    for (const auto& t : j.at("support")) x.add(t.at(0).get<long>(), parse_rational(t.at(1).get<std::string>()));
    return x;
}

}  // namespace hclat
