#pragma once

// Fixed lattices, isotropy groups G_m = {g : g(m) = m} and their enumeration
// up to conjugacy, witness vectors, and the fixed-point-free constraints.

#include <optional>
#include <string>
#include <vector>

#include "multinv/group.hpp"

namespace multinv {

/// Saturated canonical basis (rows) of L^H.
IntMatrix fixed_lattice(const Subgroup& h);

/// Pointwise stabilizer of a lattice vector.
Subgroup isotropy_group_of(const GroupPtr& g, const IntVector& m);

/// Pointwise stabilizer of the span of the given rows.
Subgroup pointwise_stabilizer(const GroupPtr& g, const IntMatrix& basis_rows);

struct IsotropyClass {
  Subgroup group;
  IntVector witness;      // some m with G_m = group
  IntMatrix fixed_basis;  // rows, L^group
};

/// One representative per conjugacy class of isotropy groups, sorted by
/// decreasing order.  The first entry is G itself (witness 0).
struct IsotropyCatalog {
  std::vector<IsotropyClass> classes;

  const IsotropyClass* find_conjugate(const Subgroup& h) const;
};

IsotropyCatalog enumerate_isotropy_groups(const GroupPtr& g);

/// A vector m in L^H with G_m = H, found by scanning coefficient boxes
/// {0..s}^k over the basis of L^H for s = 0, 1, ..., |G| in lexicographic
/// order.  Throws NotIsotropy when H is not the pointwise stabilizer of L^H.
IntVector witness_vector(const Subgroup& h);

struct MinimalIsotropy {
  Subgroup group;
  /// H acts fixed-point-freely on L / L^H (always true for faithful actions).
  bool quotient_fixed_point_free = false;
};

/// Minimal members (by inclusion up to conjugacy) among the nontrivial
/// catalog classes, each with its induced action on L / L^H checked.
std::vector<MinimalIsotropy> minimal_nontrivial_isotropy(const IsotropyCatalog& catalog);
std::vector<MinimalIsotropy> minimal_nontrivial_isotropy(const GroupPtr& g);

/// No nonidentity element fixes a nonzero vector.
bool is_fixed_point_free(const FiniteMatrixGroup& g);

/// Element order histogram of SL(2, F_5), by enumerating its 2x2 matrices.
const OrderHistogram& sl2_f5_order_histogram();

/// |H| = 120, H perfect and H has the element orders of SL(2, F_5).
bool recognize_binary_icosahedral(const Subgroup& h);

struct FpfConstraintReport {
  bool perfect_fpf_applicable = false;  // G nontrivial, perfect and fixed-point-free
  bool binary_icosahedral = false;
  bool rank_multiple_of_8 = false;
  bool rank_bound_applicable = false;   // all minimal nontrivial isotropy groups perfect
  std::optional<Index> min_quotient_rank;  // min rank L/L^H over nontrivial classes
  std::vector<std::string> lines;
};

/// Checks the fixed-point-free structure results on concrete data.  Throws
/// TheoremViolation when an applicable assertion fails.
FpfConstraintReport check_fpf_constraints(const GroupPtr& g, const IsotropyCatalog& catalog);
FpfConstraintReport check_fpf_constraints(const GroupPtr& g);

}  // namespace multinv
