#include "hclat/intmat.hpp"

#include <utility>

namespace hclat {

QMatrix zero_matrix(std::size_t rows, std::size_t cols) {
    return QMatrix(rows, std::vector<Rational>(cols, Rational(0)));
}

QMatrix identity_matrix(std::size_t n) {
    QMatrix m = zero_matrix(n, n);
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    const std::size_t inner = b.size();
    const std::size_t cols = b.empty() ? 0 : b[0].size();
    QMatrix out = zero_matrix(a.size(), cols);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
    QMatrix out = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) out[i][j] -= b[i][j];
    return out;
}

QMatrix transpose(const QMatrix& a) {
    if (a.empty()) return {};
    QMatrix out = zero_matrix(a[0].size(), a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) out[j][i] = a[i][j];
    return out;
}

QMatrix scaled(const QMatrix& a, const Rational& s) {
    QMatrix out = a;
    for (auto& row : out)
        for (auto& x : row) x *= s;
    return out;
}

bool is_integral(const QMatrix& a) {
    for (const auto& row : a)
        for (const auto& x : row)
            if (!is_integer(x)) return false;
    return true;
}

ZMatrix to_integer_matrix(const QMatrix& a) {
    ZMatrix out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (const auto& x : a[i]) out[i].push_back(to_integer(x));
    return out;
}

Rational rational_gcd(const Rational& a, const Rational& b) {
    if (a == 0) return abs(b);
    if (b == 0) return abs(a);
    Integer num, den;
    Integer p = a.get_num() * b.get_den(), q = b.get_num() * a.get_den();
    mpz_gcd(num.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    den = a.get_den() * b.get_den();
    return make_rational(num, den);
}

std::vector<std::vector<Rational>> rational_kernel(const QMatrix& a, std::size_t n) {
    QMatrix m = a;
    std::vector<long> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[row], m[pivot]);
        const Rational inv = 1 / m[row][col];
        for (auto& x : m[row]) x *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0) continue;
            const Rational f = m[r][col];
            for (std::size_t c = 0; c < n; ++c) m[r][c] -= f * m[row][c];
        }
        pivot_col.push_back(static_cast<long>(col));
        ++row;
    }
    std::vector<bool> is_pivot(n, false);
    for (long c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(n, Rational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -m[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

namespace {

// Row echelon form over Z on the first `cols` columns using unimodular row operations.
// Returns the number of pivot rows.
std::size_t echelon(ZMatrix& m, std::size_t cols) {
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        // Euclid on column col among rows >= row until one nonzero remains.
        while (true) {
            std::size_t best = m.size();
            for (std::size_t r = row; r < m.size(); ++r)
                if (m[r][col] != 0 && (best == m.size() || abs(m[r][col]) < abs(m[best][col]))) best = r;
            if (best == m.size()) break;
            std::swap(m[row], m[best]);
            bool done = true;
            for (std::size_t r = row + 1; r < m.size(); ++r) {
                if (m[r][col] == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), m[r][col].get_mpz_t(), m[row][col].get_mpz_t());
                for (std::size_t c = 0; c < m[r].size(); ++c) m[r][c] -= q * m[row][c];
                if (m[r][col] != 0) done = false;
            }
            if (done) break;
        }
        if (m[row][col] == 0) continue;
        if (m[row][col] < 0)
            for (auto& x : m[row]) x = -x;
        ++row;
    }
    return row;
}

}  // namespace

std::vector<std::vector<Integer>> integer_kernel(const ZMatrix& a, std::size_t n) {
    const std::size_t eqs = a.size();
    ZMatrix m(n, std::vector<Integer>(eqs + n, Integer(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t e = 0; e < eqs; ++e) m[i][e] = a[e][i];
        m[i][eqs + i] = 1;
    }
    const std::size_t rank = echelon(m, eqs);
    std::vector<std::vector<Integer>> basis;
    for (std::size_t r = rank; r < n; ++r) basis.emplace_back(m[r].begin() + static_cast<long>(eqs), m[r].end());
    return basis;
}

ZMatrix hermite_normal_form(ZMatrix rows) {
    if (rows.empty()) return rows;
    const std::size_t cols = rows[0].size();
    const std::size_t rank = echelon(rows, cols);
    rows.resize(rank);
    // Reduce entries above each pivot into [0, pivot).
    for (std::size_t r = 0; r < rank; ++r) {
        std::size_t pc = 0;
        while (rows[r][pc] == 0) ++pc;
        for (std::size_t above = 0; above < r; ++above) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), rows[above][pc].get_mpz_t(), rows[r][pc].get_mpz_t());
            for (std::size_t c = 0; c < cols; ++c) rows[above][c] -= q * rows[r][c];
        }
    }
    return rows;
}

}  // namespace hclat
