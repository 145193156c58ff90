#pragma once

#include "hclat/rational.hpp"

#include <vector>

namespace hclat {

using QMatrix = std::vector<std::vector<Rational>>;  // row-major
using ZMatrix = std::vector<std::vector<Integer>>;

QMatrix zero_matrix(std::size_t rows, std::size_t cols);
QMatrix identity_matrix(std::size_t n);
QMatrix operator*(const QMatrix& a, const QMatrix& b);
QMatrix operator-(const QMatrix& a, const QMatrix& b);
QMatrix transpose(const QMatrix& a);
QMatrix scaled(const QMatrix& a, const Rational& s);
bool is_integral(const QMatrix& a);
ZMatrix to_integer_matrix(const QMatrix& a);  // throws unless integral

/// gcd of two rationals: the positive generator of aZ + bZ (0 if both are 0).
Rational rational_gcd(const Rational& a, const Rational& b);

/// Basis of {x in Q^n : a x = 0}.
std::vector<std::vector<Rational>> rational_kernel(const QMatrix& a, std::size_t n);

/// Z-basis of {x in Z^n : a x = 0}, by row-reducing [a^T | I] with unimodular operations.
std::vector<std::vector<Integer>> integer_kernel(const ZMatrix& a, std::size_t n);

/// Row Hermite normal form (nonzero rows only) of an integer matrix.
ZMatrix hermite_normal_form(ZMatrix rows);

}  // namespace hclat
