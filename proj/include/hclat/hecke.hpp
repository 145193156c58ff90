#pragma once

#include "hclat/pbw.hpp"
#include "hclat/rational.hpp"
#include "hclat/zform.hpp"

#include <json.hpp>

#include <functional>
#include <map>
#include <utility>
#include <vector>

namespace hclat {

/// Character group of T^1 (Z) or of M = ker(t -> t^n) (Z/n, residues 0..n-1).
struct CharacterLattice {
    enum class Kind { FreeRankOne, CyclicOrder };
    Kind kind = Kind::FreeRankOne;
    long order = 0;

    static CharacterLattice integers() { return {Kind::FreeRankOne, 0}; }
    static CharacterLattice cyclic(long n);

    long reduce(long lambda) const;
    long add(long a, long b) const { return reduce(a + b); }
    long sub(long a, long b) const { return reduce(a - b); }
    bool contains(long lambda) const { return reduce(lambda) == lambda; }
    friend bool operator==(const CharacterLattice&, const CharacterLattice&) = default;
};

/// Coordinates in a weight basis with one vector per character.
using GradedVector = std::map<long, Rational>;

/// Finite sums of the idempotents p_lambda.
class HeckeElement {
public:
    explicit HeckeElement(CharacterLattice lattice = CharacterLattice::integers()) : lattice_(lattice) {}
    static HeckeElement idempotent(long lambda, CharacterLattice lattice = CharacterLattice::integers());

    const CharacterLattice& lattice() const { return lattice_; }
    const std::map<long, Rational>& support() const { return support_; }
    bool is_zero() const { return support_.empty(); }
    void add(long lambda, const Rational& c);

    /// Action on a graded vector: componentwise scaling.
    GradedVector apply(const GradedVector& v) const;

    friend HeckeElement operator+(HeckeElement a, const HeckeElement& b);
    friend HeckeElement operator*(const Rational& s, HeckeElement a);
    friend bool operator==(const HeckeElement&, const HeckeElement&) = default;

private:
    CharacterLattice lattice_;
    std::map<long, Rational> support_;
};

HeckeElement hecke_mul(const HeckeElement& x, const HeckeElement& y);

GradedVector project(const GradedVector& v, long lambda);

/// Regrades a T^1-graded vector by types lambda mod n.
GradedVector restrict_to(const GradedVector& v, const CharacterLattice& lattice);

/// Basis (mu, nu) of v (x) w, coefficient v_mu w_nu.
using TensorVector = std::map<std::pair<long, long>, Rational>;

TensorVector tensor_action(long lambda, const GradedVector& v, const GradedVector& w,
                           const CharacterLattice& lattice = CharacterLattice::integers());

/// A linear map between weight-graded modules, entries keyed (target, source).
using HomMatrix = std::map<std::pair<long, long>, Rational>;

GradedVector apply(const HomMatrix& f, const GradedVector& v);

/// p_lambda f: entries with target - source = lambda.
HomMatrix hom_project(long lambda, const HomMatrix& f, const CharacterLattice& lattice = CharacterLattice::integers());

/// (p_lambda f)(v) = sum_mu p_{lambda+mu} f(p_mu v).
GradedVector hom_action(long lambda, const HomMatrix& f, const GradedVector& v,
                        const CharacterLattice& lattice = CharacterLattice::integers());

/// Finite sums of a (x) p_lambda in U(g) # R(T).
class SmashElement {
public:
    using Key = std::pair<PBWMonomial, long>;

    SmashElement() = default;
    static SmashElement term(const UEAElement& a, long lambda);

    const std::map<Key, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add(const PBWMonomial& m, long lambda, const Rational& c);
    SmashElement& operator+=(const SmashElement& o);
    friend bool operator==(const SmashElement&, const SmashElement&) = default;

private:
    std::map<Key, Rational> terms_;
};

/// Adjoint-weight-lambda component of b.
UEAElement weight_component(const UEAElement& b, long lambda, long n);

/// (a (x) p_lambda)(b (x) p_mu) = a p_{lambda-mu} b (x) p_mu.
SmashElement smash_mul(const SmashElement& x, const SmashElement& y, const ZForm& g);

/// Nonzero components of a family over a finite window.
GradedVector t_finite_part(const std::function<Rational(long)>& family, const std::vector<long>& window);

nlohmann::json to_json(const HeckeElement& x);
HeckeElement hecke_from_json(const nlohmann::json& j);

}  // namespace hclat
