#include "hclat/borel_weil.hpp"

#include <algorithm>

namespace hclat {

std::size_t AmbientModule::index_of_weight(long w) const {
    auto it = std::find(weights.begin(), weights.end(), w);
    if (it == weights.end()) throw DomainError("no basis vector of weight " + std::to_string(w));
    return static_cast<std::size_t>(it - weights.begin());
}

long AmbientModule::highest_weight() const { return *std::max_element(weights.begin(), weights.end()); }

namespace {

QMatrix conjugate_by_gens(const QMatrix& x, const std::vector<Rational>& g) {
    QMatrix out = x;
    for (std::size_t j = 0; j < x.size(); ++j)
        for (std::size_t i = 0; i < x[j].size(); ++i)
            if (x[j][i] != 0) out[j][i] = x[j][i] * g[i] / g[j];
    return out;
}

QMatrix diagonal_weights(const std::vector<long>& w) {
    QMatrix h = zero_matrix(w.size(), w.size());
    for (std::size_t i = 0; i < w.size(); ++i) h[i][i] = w[i];
    return h;
}

// X^k / k! for k = 1 .. dim.
std::vector<QMatrix> divided_powers_of(const QMatrix& x) {
    std::vector<QMatrix> out;
    QMatrix cur = identity_matrix(x.size());
    for (std::size_t k = 1; k <= x.size(); ++k) {
        cur = scaled(cur * x, make_rational(1, static_cast<long>(k)));
        out.push_back(cur);
    }
    return out;
}

// Closes the diagonal lattice gens under the given operators.
void close_under(std::vector<Rational>& gens, const std::vector<QMatrix>& ops) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            if (gens[i] == 0) continue;
            for (const auto& x : ops)
                for (std::size_t j = 0; j < gens.size(); ++j) {
                    if (x[j][i] == 0) continue;
                    Rational g = rational_gcd(gens[j], gens[i] * x[j][i]);
                    if (g != gens[j]) {
                        gens[j] = g;
                        changed = true;
                    }
                }
        }
    }
}

std::vector<QMatrix> operators(const AmbientModule& a, bool divided_powers) {
    if (!divided_powers) return {a.e, a.f};
    std::vector<QMatrix> ops = divided_powers_of(a.e);
    std::vector<QMatrix> fs = divided_powers_of(a.f);
    ops.insert(ops.end(), fs.begin(), fs.end());
    return ops;
}

void require_distinct_weights(const AmbientModule& a) {
    std::vector<long> w = a.weights;
    std::sort(w.begin(), w.end());
    if (std::adjacent_find(w.begin(), w.end()) != w.end())
        throw DomainError("ambient module has a repeated weight; lattices here assume multiplicity one");
}

FiniteLattice finish(const AmbientModule& a, std::vector<Rational> gens) {
    for (const auto& g : gens)
        if (g == 0) throw DomainError("generated lattice is not of full rank");
    return FiniteLattice{a, std::move(gens)};
}

}  // namespace

QMatrix FiniteLattice::action_e() const { return conjugate_by_gens(ambient.e, gens); }
QMatrix FiniteLattice::action_f() const { return conjugate_by_gens(ambient.f, gens); }
QMatrix FiniteLattice::action_h() const { return diagonal_weights(ambient.weights); }

bool satisfies_sl2_relations(const AmbientModule& a) {
    const QMatrix h = diagonal_weights(a.weights);
    return a.e * a.f - a.f * a.e == h && h * a.e - a.e * h == scaled(a.e, 2) && h * a.f - a.f * h == scaled(a.f, -2);
}

FiniteLattice theorem615_lattice(long lambda, long n) {
    const long top = lambda + 2 * n;
    if (top < 0) throw DomainError("lambda + 2n must be nonnegative, got " + std::to_string(top));
    const std::size_t dim = static_cast<std::size_t>(top + 1);
    AmbientModule a;
    a.e = zero_matrix(dim, dim);
    a.f = zero_matrix(dim, dim);
    for (long i = 0; i <= top; ++i) {
        a.weights.push_back(top - 2 * i);
        if (i > 0) a.e[i - 1][i] = top - i + 1;
        if (i < top) a.f[i + 1][i] = i + 1;
    }
    return FiniteLattice{a, std::vector<Rational>(dim, Rational(1))};
}

FiniteLattice generated_lattice(const AmbientModule& a, const std::vector<Rational>& v, bool divided_powers) {
    require_distinct_weights(a);
    if (v.size() != a.dim()) throw DomainError("vector has the wrong length");
    std::vector<Rational> gens;
    for (const auto& x : v) gens.push_back(abs(x));
    if (std::all_of(gens.begin(), gens.end(), [](const Rational& g) { return g == 0; }))
        throw DomainError("cannot generate from the zero vector");
    close_under(gens, operators(a, divided_powers));
    return finish(a, std::move(gens));
}

FiniteLattice enlarge(const FiniteLattice& l, const std::vector<Rational>& extra, bool divided_powers) {
    std::vector<Rational> gens = l.gens;
    for (std::size_t i = 0; i < gens.size(); ++i) gens[i] = rational_gcd(gens[i], extra[i]);
    close_under(gens, operators(l.ambient, divided_powers));
    return finish(l.ambient, std::move(gens));
}

AmbientModule dual_ambient(const AmbientModule& a) {
    AmbientModule d;
    for (long w : a.weights) d.weights.push_back(-w);
    d.e = scaled(transpose(a.e), -1);
    d.f = scaled(transpose(a.f), -1);
    return d;
}

FiniteLattice dual_lattice(const FiniteLattice& l) {
    std::vector<Rational> gens;
    for (const auto& g : l.gens) gens.push_back(1 / g);
    return FiniteLattice{dual_ambient(l.ambient), std::move(gens)};
}

namespace {

// Equations on diagonal unknowns t_i (v_i -> t_i u_{pi(i)}) for T X = X' T.
QMatrix intertwiner_system(const std::vector<long>& wa, const std::vector<QMatrix>& xa, const std::vector<long>& wb,
                           const std::vector<QMatrix>& xb) {
    const std::size_t n = wa.size();
    std::vector<long> pi(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        auto it = std::find(wb.begin(), wb.end(), wa[i]);
        if (it != wb.end()) pi[i] = it - wb.begin();
    }
    QMatrix rows;
    for (std::size_t i = 0; i < n; ++i)
        if (pi[i] < 0) {
            std::vector<Rational> row(n, Rational(0));
            row[i] = 1;
            rows.push_back(row);
        }
    for (std::size_t x = 0; x < xa.size(); ++x)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < wb.size(); ++k) {
                std::vector<Rational> row(n, Rational(0));
                for (std::size_t j = 0; j < n; ++j)
                    if (pi[j] == static_cast<long>(k)) row[j] += xa[x][j][i];
                if (pi[i] >= 0) row[i] -= xb[x][k][pi[i]];
                if (std::any_of(row.begin(), row.end(), [](const Rational& r) { return r != 0; })) rows.push_back(row);
            }
    return rows;
}

}  // namespace

std::vector<std::vector<Rational>> rational_intertwiners(const AmbientModule& a, const AmbientModule& b) {
    return rational_kernel(intertwiner_system(a.weights, {a.e, a.f}, b.weights, {b.e, b.f}), a.dim());
}

std::vector<std::vector<Integer>> integral_intertwiners(const FiniteLattice& a, const FiniteLattice& b) {
    QMatrix sys = intertwiner_system(a.weights(), {a.action_e(), a.action_f()}, b.weights(), {b.action_e(), b.action_f()});
    return integer_kernel(to_integer_matrix(sys), a.rank());
}

FiniteLattice minimal_lattice(long lambda, bool divided_powers) {
    if (lambda < 0) throw DomainError("highest weight must be nonnegative");
    FiniteLattice a = theorem615_lattice(lambda, 0);
    std::vector<Rational> v(a.rank(), Rational(0));
    v[0] = 1;
    return generated_lattice(a.ambient, v, divided_powers);
}

FiniteLattice maximal_lattice_in_dual(long lambda, bool divided_powers) {
    if (lambda < 0) throw DomainError("highest weight must be nonnegative");
    FiniteLattice a = theorem615_lattice(lambda, 0);
    std::vector<Rational> v(a.rank(), Rational(0));
    v[a.ambient.index_of_weight(-lambda)] = 1;
    return dual_lattice(generated_lattice(a.ambient, v, divided_powers));
}

FiniteLattice maximal_lattice(long lambda, bool divided_powers) {
    FiniteLattice d = maximal_lattice_in_dual(lambda, divided_powers);
    const AmbientModule a = theorem615_lattice(lambda, 0).ambient;
    auto ts = rational_intertwiners(a, d.ambient);
    if (ts.size() != 1) throw DomainError("expected a unique intertwiner up to scalar");
    std::vector<Rational> t = ts[0];
    const Rational top = t[a.index_of_weight(lambda)];
    std::vector<Rational> gens;
    for (std::size_t i = 0; i < a.dim(); ++i) gens.push_back(abs(d.component(a.weights[i]) * top / t[i]));
    const Rational norm = gens[a.index_of_weight(lambda)];
    for (auto& g : gens) g /= norm;
    return FiniteLattice{a, std::move(gens)};
}

std::optional<Integer> inclusion_index(const FiniteLattice& a, const FiniteLattice& b) {
    if (a.weights() != b.weights()) return std::nullopt;
    Integer index = 1;
    for (std::size_t i = 0; i < a.rank(); ++i) {
        Rational r = a.gens[i] / b.gens[i];
        if (!is_integer(r)) return std::nullopt;
        index *= to_integer(r);
    }
    return index;
}

Integer hom_generator_index(const FiniteLattice& l) {
    Rational top = l.component(l.ambient.highest_weight());
    if (!is_integer(top) || top <= 0)
        throw DomainError("highest weight component " + to_string(top) + " is not a positive integer multiple");
    return to_integer(top);
}

MaximalityReport maximality_certificate(const FiniteLattice& l, const std::vector<long>& primes) {
    MaximalityReport report;
    const long hw = l.ambient.highest_weight();
    const Rational top = l.component(hw);
    for (std::size_t i = 0; i < l.rank(); ++i)
        for (long p : primes) {
            std::vector<Rational> u(l.rank(), Rational(0));
            u[i] = l.gens[i] / p;
            if (enlarge(l, u).component(hw) == top) {
                report.certified = false;
                report.enlargeable.push_back({l.weights()[i], p});
            }
        }
    return report;
}

FiniteLattice greedy_maximalization(FiniteLattice l, const std::vector<long>& primes) {
    const long hw = l.ambient.highest_weight();
    const Rational top = l.component(hw);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < l.rank() && !changed; ++i)
            for (long p : primes) {
                std::vector<Rational> u(l.rank(), Rational(0));
                u[i] = l.gens[i] / p;
                FiniteLattice bigger = enlarge(l, u);
                if (bigger.component(hw) == top) {
                    l = std::move(bigger);
                    changed = true;
                    break;
                }
            }
    }
    return l;
}

namespace {

CounitWitness check_witness(long lambda, long n, long scale) {
    const long big = scale * n;
    FiniteLattice l = theorem615_lattice(lambda, big);
    std::vector<Rational> phi(l.rank(), Rational(0));
    phi[big] = make_rational(scale, big);
    CounitWitness w{lambda, n, scale, frac_mod1(phi[big])};
    w.weight_ok = true;
    for (std::size_t i = 0; i < l.rank(); ++i)
        if (phi[i] != 0 && l.weights()[i] != lambda) w.weight_ok = false;
    w.f_ok = true;
    w.h_ok = true;
    for (std::size_t i = 0; i < l.rank(); ++i) {
        Rational f_image = 0;
        for (std::size_t j = 0; j < l.rank(); ++j) f_image += l.ambient.f[j][i] * phi[j];
        if (!is_integer(f_image)) w.f_ok = false;
        if (!is_integer(Rational(l.weights()[i]) * phi[i] - Rational(lambda) * phi[i])) w.h_ok = false;
    }
    if (!w.ok())
        throw DomainError("counit witness fails for lambda = " + std::to_string(lambda) + ", n = " + std::to_string(n));
    return w;
}

}  // namespace

CounitWitness counit_fraction_witness(long lambda, long n) {
    if (n < 1) throw DomainError("n must be positive");
    if (lambda + 2 * n < 0) throw DomainError("lambda + 2n must be nonnegative");
    if (lambda + n < 0)
        throw DomainError("weight " + std::to_string(lambda) + " does not occur in the lattice for n = " +
                          std::to_string(n));
    return check_witness(lambda, n, 1);
}

CounitWitness realize_fraction(long lambda, long n) {
    if (n < 1) throw DomainError("n must be positive");
    long k = 1;
    while (lambda + k * n < 0) ++k;
    return check_witness(lambda, n, k);
}

}  // namespace hclat
