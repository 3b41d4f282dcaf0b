#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace multinv {

using Integer =
    boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;

using IntMatrix = Matrix<Integer>;
using IntVector = Vector<Integer>;
using Index = Eigen::Index;

// Scalar helpers usable for both Integer and builtin integral types.

template <typename Scalar>
Scalar abs_value(const Scalar& x) {
  return x < 0 ? Scalar(-x) : x;
}

/// Floor division; b must be nonzero.
template <typename Scalar>
Scalar floor_div(const Scalar& a, const Scalar& b) {
  Scalar q = a / b;
  Scalar r = a - q * b;
  if (r != 0 && ((r < 0) != (b < 0))) q -= 1;
  return q;
}

template <typename Scalar>
struct ExtendedGcd {
  Scalar gcd, s, t;  // s*a + t*b = gcd >= 0
};

template <typename Scalar>
ExtendedGcd<Scalar> extended_gcd(Scalar a, Scalar b) {
  Scalar s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (b != 0) {
    Scalar q = floor_div(a, b);
    Scalar r = a - q * b;
    a = b;
    b = r;
    Scalar ns = s0 - q * s1;
    s0 = s1;
    s1 = ns;
    Scalar nt = t0 - q * t1;
    t0 = t1;
    t1 = nt;
  }
  if (a < 0) return {Scalar(-a), Scalar(-s0), Scalar(-t0)};
  return {a, s0, t0};
}

template <typename Scalar>
Scalar gcd_value(Scalar a, Scalar b) {
  a = abs_value(a);
  b = abs_value(b);
  while (b != 0) {
    Scalar r = a % b;
    a = b;
    b = r;
  }
  return a;
}

IntMatrix int_matrix(std::initializer_list<std::initializer_list<long>> rows);
IntMatrix int_matrix(const std::vector<std::vector<long>>& rows);
IntVector int_vector(std::initializer_list<long> entries);
IntVector int_vector(const std::vector<long>& entries);

/// Row-major lexicographic order on entries; shapes compared first.
bool lex_less(const IntMatrix& a, const IntMatrix& b);
bool lex_less(const IntVector& a, const IntVector& b);

/// Byte key identifying a matrix by its entries; equal keys iff equal matrices
/// of the same shape.
std::string entry_key(const IntMatrix& m);

std::optional<std::int64_t> to_int64(const Integer& x);

std::string to_string(const Integer& x);
/// "(a,b,c)".
std::string to_string(const IntVector& v);
/// "[[a,b],[c,d]]".
std::string to_string(const IntMatrix& m);

}  // namespace multinv
