#pragma once

// The group algebra Z[L] (Laurent polynomials with exponents in L) and its
// invariant subalgebra, spanned by orbit sums.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "multinv/group.hpp"

namespace multinv {

using Exponent = std::vector<std::int64_t>;

class LaurentElement {
 public:
  explicit LaurentElement(Index rank = 0) : rank_(rank) {}

  static LaurentElement constant(Index rank, const Integer& c);
  static LaurentElement monomial(const Exponent& e, const Integer& c = 1);
  /// x_i as a Laurent monomial in rank n (0-based i).
  static LaurentElement variable(Index rank, Index i);

  Index rank() const { return rank_; }
  const std::map<Exponent, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Integer coefficient(const Exponent& e) const;

  void add_term(const Exponent& e, const Integer& c);

  LaurentElement& operator+=(const LaurentElement& other);
  LaurentElement& operator-=(const LaurentElement& other);
  LaurentElement& operator*=(const Integer& c);

  /// Image under g: x^m -> x^{g m}.
  LaurentElement apply(const IntMatrix& g) const;

  /// Largest |exponent entry| over the support (0 for the zero element).
  std::int64_t sup_norm() const;

  /// Exact division of every coefficient; throws std::domain_error otherwise.
  LaurentElement divide_exact(const Integer& d) const;

  /// "3*x^(1,0) - x^(-1,2) + ..." with terms in lexicographic exponent order;
  /// "0" for the zero element.
  std::string to_string() const;

  friend bool operator==(const LaurentElement& a, const LaurentElement& b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }

 private:
  Index rank_;
  std::map<Exponent, Integer> terms_;
};

LaurentElement operator+(LaurentElement a, const LaurentElement& b);
LaurentElement operator-(LaurentElement a, const LaurentElement& b);
LaurentElement operator*(LaurentElement a, const Integer& c);
/// Convolution product.
LaurentElement multiply(const LaurentElement& a, const LaurentElement& b);
LaurentElement operator*(const LaurentElement& a, const LaurentElement& b);
LaurentElement power(const LaurentElement& a, unsigned k);

Exponent apply_to_exponent(const IntMatrix& g, const Exponent& m);

/// Orbit G(m), sorted lexicographically.
std::vector<Exponent> orbit(const FiniteMatrixGroup& g, const Exponent& m);
/// Lexicographically smallest member of G(m).
Exponent orbit_representative(const FiniteMatrixGroup& g, const Exponent& m);
/// sigma(m): sum of x^{m'} over the orbit of m.
LaurentElement orbit_sum(const FiniteMatrixGroup& g, const Exponent& m);

/// g(a) = a for every generator g.
bool is_invariant(const GLattice& lattice, const LaurentElement& a);
bool is_invariant(const FiniteMatrixGroup& g, const LaurentElement& a);

/// Coefficients c_m with a = sum c_m sigma(m), keyed by orbit representative.
/// Throws NotInvariant if a is not invariant.
std::map<Exponent, Integer> express_in_orbit_basis(const FiniteMatrixGroup& g, const LaurentElement& a);

/// Orbit sums sigma(m) for the orbits contained in the box |m|_inf <= bound.
class OrbitBasis {
 public:
  OrbitBasis(GroupPtr group, std::int64_t bound);

  const GroupPtr& group() const { return group_; }
  std::int64_t bound() const { return bound_; }
  /// Sorted by orbit sup-norm, then lexicographically.
  const std::vector<Exponent>& representatives() const { return representatives_; }
  /// Sup-norm of the orbit of representatives()[i].
  std::int64_t orbit_norm(std::size_t i) const { return norms_[i]; }
  LaurentElement sum(std::size_t i) const;
  /// Position of the representative of the orbit containing m, if inside.
  std::optional<std::size_t> position(const Exponent& m) const;

 private:
  GroupPtr group_;
  std::int64_t bound_;
  std::vector<Exponent> representatives_;
  std::vector<std::int64_t> norms_;
  std::vector<std::vector<Exponent>> orbits_;
  std::map<Exponent, std::size_t> lookup_;  // every orbit member -> position
};

/// Vandermonde product prod_{i<j} (x_i - x_j).
LaurentElement vandermonde(Index n);
/// prod_{i<j} (x_i + x_j).
LaurentElement vandermonde_plus(Index n);
/// d = (Delta + Delta_+) / 2, invariant under the alternating group but not
/// the symmetric group.  Throws ParityViolation if a coefficient of the sum
/// is odd.
LaurentElement alternating_d(Index n);
/// Elementary symmetric polynomial e_k(x_1..x_n).
LaurentElement elementary_symmetric(Index n, Index k);

}  // namespace multinv
