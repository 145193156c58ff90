#pragma once

#include "hclat/intmat.hpp"
#include "hclat/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hclat {

/// A finite-dimensional SL2 module over Q in a basis of weight vectors
/// (each weight occurring once). E and F act column-wise: column j is the
/// image of basis vector j.
struct AmbientModule {
    std::vector<long> weights;
    QMatrix e, f;

    std::size_t dim() const { return weights.size(); }
    /// Coordinate of the basis vector of weight w; throws if absent.
    std::size_t index_of_weight(long w) const;
    long highest_weight() const;
};

/// A full-rank T-stable lattice: the Z-span of gens[i] * v_i.
struct FiniteLattice {
    AmbientModule ambient;
    std::vector<Rational> gens;

    std::size_t rank() const { return gens.size(); }
    const std::vector<long>& weights() const { return ambient.weights; }
    /// Actions in the lattice basis; integral for a lattice.
    QMatrix action_e() const;
    QMatrix action_f() const;
    QMatrix action_h() const;
    bool is_lattice() const { return is_integral(action_e()) && is_integral(action_f()); }
    /// Generator of the component of weight w.
    Rational component(long w) const { return gens[ambient.index_of_weight(w)]; }
};

/// [E,F] = H, [H,E] = 2E, [H,F] = -2F as matrices.
bool satisfies_sl2_relations(const AmbientModule& a);

/// Basis v_{lambda+2n-2i}, 0 <= i <= lambda+2n;
/// E v_i = (lambda+2n-i+1) v_{i-1}, F v_i = (i+1) v_{i+1}.
FiniteLattice theorem615_lattice(long lambda, long n);

/// Smallest T-stable lattice containing v and closed under E and F
/// (or under the divided powers E^k/k!, F^k/k! when divided_powers is set).
FiniteLattice generated_lattice(const AmbientModule& a, const std::vector<Rational>& v, bool divided_powers = false);

/// Smallest such lattice containing L and the extra vector.
FiniteLattice enlarge(const FiniteLattice& l, const std::vector<Rational>& extra, bool divided_powers = false);

/// Hom(L, Z) with the contragredient action; weights negated.
FiniteLattice dual_lattice(const FiniteLattice& l);

/// The contragredient of an ambient module.
AmbientModule dual_ambient(const AmbientModule& a);

/// Weight-preserving Q-linear maps A -> B commuting with E and F, as diagonal
/// entries t_i with v_i -> t_i v'_{j(i)} (j(i) the coordinate of the same weight).
std::vector<std::vector<Rational>> rational_intertwiners(const AmbientModule& a, const AmbientModule& b);

/// Integral intertwiners between two lattices, expressed in lattice coordinates.
std::vector<std::vector<Integer>> integral_intertwiners(const FiniteLattice& a, const FiniteLattice& b);

/// Generated lattice of highest weight lambda, inside theorem615_lattice(lambda, 0).
FiniteLattice minimal_lattice(long lambda, bool divided_powers = false);

/// Dual of the lattice generated by the lowest weight vector, carried back into
/// the ambient of minimal_lattice(lambda) by the Q-intertwiner sending the
/// highest weight vector to the highest weight vector; top component is Z.
FiniteLattice maximal_lattice(long lambda, bool divided_powers = false);

/// The lattice dual(generated from lowest) in its own (contragredient) ambient.
FiniteLattice maximal_lattice_in_dual(long lambda, bool divided_powers = false);

/// Index [b : a] when a is contained in b (same ambient), else nullopt.
std::optional<Integer> inclusion_index(const FiniteLattice& a, const FiniteLattice& b);

/// Positive generator of the image of the counit (coefficient on the ambient
/// highest weight vector) on L; throws unless it is a positive integer.
Integer hom_generator_index(const FiniteLattice& l);

struct MaximalityReport {
    bool certified = true;
    struct Enlargement {
        long weight;
        long prime;
    };
    std::vector<Enlargement> enlargeable;  // (u/p) that keeps the top component
};

/// For each basis vector u and prime p, checks that L + <u/p> has strictly
/// larger highest weight component.
MaximalityReport maximality_certificate(const FiniteLattice& l, const std::vector<long>& primes);

/// Starting from L, adds u/p whenever the top component stays the same.
FiniteLattice greedy_maximalization(FiniteLattice l, const std::vector<long>& primes);

struct CounitWitness {
    long lambda;
    long n;
    long scale;            // the witness lives on theorem615_lattice(lambda, scale*n) and is multiplied by scale
    Rational fraction;     // realized value mod Z
    bool weight_ok = false;
    bool f_ok = false;
    bool h_ok = false;
    bool ok() const { return weight_ok && f_ok && h_ok; }
};

/// phi(v_i) = 1/n at i = n, 0 elsewhere, on theorem615_lattice(lambda, n).
/// Throws DomainError if lambda + 2n < 0, if weight lambda is absent
/// (lambda + n < 0), or if a check fails.
CounitWitness counit_fraction_witness(long lambda, long n);

/// Realizes 1/n mod Z for any lambda, using the least multiple k*n with lambda + kn >= 0.
CounitWitness realize_fraction(long lambda, long n);

}  // namespace hclat
