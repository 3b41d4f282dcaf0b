#pragma once

// Bounded verification of free-module decompositions
//   Z[L]^G = (+)_j mu_j Z[a_1, ..., a_r]
// by exact integer linear algebra on orbit-sum coordinates.

#include <optional>
#include <string>
#include <vector>

#include "multinv/errors.hpp"
#include "multinv/laurent.hpp"

namespace multinv {

struct DecompositionFails : Error {
  using Error::Error;
};

/// One product a^e * mu_j.  Exponents are indexed by the merged variables
/// (a pair a, a^{-1} of algebra generators becomes one variable with
/// exponents in Z).
struct ProductLabel {
  std::vector<std::int64_t> exponents;
  std::size_t module_index = 0;
};

/// An interior orbit sum written in the products.
struct OrbitExpression {
  Exponent representative;
  std::vector<std::pair<std::size_t, Integer>> coefficients;  // (product index, coefficient)
};

struct DecompositionCertificate {
  std::int64_t bound = 0;
  std::int64_t interior_bound = 0;
  /// Algebra generator positions forming each merged variable: {a} or {a, a^{-1}}.
  std::vector<std::vector<std::size_t>> variables;
  std::vector<ProductLabel> products;
  std::size_t truncation_size = 0;  // orbit sums with sup-norm <= bound
  std::vector<OrbitExpression> expressions;
};

struct DecompositionFailure {
  enum class Kind { kRelation, kTorsion, kUnreachable };
  Kind kind;
  std::string description;
  /// The unreachable orbit sum, the vanishing combination, or the element w
  /// with d*w in the span but w not.
  LaurentElement witness;
};

struct DecompositionResult {
  bool holds = false;
  DecompositionCertificate certificate;
  std::optional<DecompositionFailure> failure;
};

std::string to_string(DecompositionFailure::Kind kind);

/// Throws NotInvariant when an input is not G-invariant and
/// std::invalid_argument when the products do not stay finite in the box.
DecompositionResult verify_free_decomposition(const GroupPtr& group, const std::vector<LaurentElement>& algebra_gens,
                                              const std::vector<LaurentElement>& module_gens, std::int64_t bound);

/// Same check; throws DecompositionFails carrying the failure description.
DecompositionCertificate require_free_decomposition(const GroupPtr& group,
                                                    const std::vector<LaurentElement>& algebra_gens,
                                                    const std::vector<LaurentElement>& module_gens,
                                                    std::int64_t bound);

/// Per-degree comparison in the polynomial sector for a group acting by
/// signed-free permutations of the coordinates.
struct GradedSlice {
  int degree = 0;
  std::size_t product_count = 0;
  Index span_rank = 0;       // rank of the homogeneous products of this degree
  std::size_t invariant_rank = 0;  // number of orbits of degree-k monomials
  bool saturated = false;    // products span a saturated sublattice
};

/// Generators must be homogeneous polynomials (nonnegative exponents).
std::vector<GradedSlice> graded_slices(const GroupPtr& group, const std::vector<LaurentElement>& algebra_gens,
                                       const std::vector<LaurentElement>& module_gens, int max_degree);

/// Total degree of a homogeneous polynomial; throws std::invalid_argument otherwise.
int homogeneous_degree(const LaurentElement& a);

}  // namespace multinv
