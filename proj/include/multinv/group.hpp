#pragma once

// Finite subgroups of GL_n(Z): closure from generators and subgroup
// manipulation on the fully enumerated element list.

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "multinv/integer.hpp"

namespace multinv {

/// A lattice L = Z^rank with a finite group acting through integer matrices
/// (column convention: g sends m to g * m).
struct GLattice {
  Index rank = 0;
  std::vector<IntMatrix> generators;
  std::string name;
};

/// Throws ValidationError unless every generator is a unimodular rank x rank matrix.
void validate(const GLattice& lattice);

using ElementIndex = std::uint32_t;

inline constexpr std::size_t kDefaultCap = 1'000'000;

class FiniteMatrixGroup;
using GroupPtr = std::shared_ptr<const FiniteMatrixGroup>;

/// Breadth-first closure of the generators.  Throws CapExceeded when the
/// group has more than `cap` elements or is detectably infinite.
GroupPtr close(const GLattice& lattice, std::size_t cap = kDefaultCap);

class FiniteMatrixGroup {
 public:
  const GLattice& lattice() const { return lattice_; }
  Index rank() const { return lattice_.rank; }
  std::size_t order() const { return elements_.size(); }

  /// Elements in lexicographic order of their entries.
  const std::vector<IntMatrix>& elements() const { return elements_; }
  const IntMatrix& element(ElementIndex i) const { return elements_[i]; }
  std::optional<ElementIndex> index_of(const IntMatrix& m) const;

  ElementIndex identity() const { return identity_; }
  /// Index of generator i of the lattice.
  const std::vector<ElementIndex>& generator_indices() const { return generator_indices_; }

  ElementIndex product(ElementIndex a, ElementIndex b) const;
  ElementIndex inverse(ElementIndex a) const { return inverses_[a]; }
  std::size_t element_order(ElementIndex a) const { return orders_[a]; }
  /// rank [g, L] = rank (g - 1).
  Index moved_rank(ElementIndex a) const { return moved_ranks_[a]; }

  bool acts_trivially() const { return order() == 1; }

 private:
  friend GroupPtr close(const GLattice&, std::size_t);
  FiniteMatrixGroup() = default;

  ElementIndex multiply_slow(ElementIndex a, ElementIndex b) const;
  ElementIndex multiply_compact(ElementIndex a, ElementIndex b) const;

  GLattice lattice_;
  std::vector<IntMatrix> elements_;
  std::unordered_map<std::string, ElementIndex> index_;
  ElementIndex identity_ = 0;
  std::vector<ElementIndex> generator_indices_;
  std::vector<ElementIndex> inverses_;
  std::vector<std::size_t> orders_;
  std::vector<Index> moved_ranks_;
  // Row-major int64 copies when every entry fits in 32 bits.
  std::vector<std::int64_t> compact_;
  // Full multiplication table for small groups.
  std::vector<ElementIndex> table_;
};

/// A subgroup stored as a sorted index set into its parent's enumeration.
class Subgroup {
 public:
  Subgroup(GroupPtr parent, std::vector<ElementIndex> members, std::vector<ElementIndex> generators);

  const GroupPtr& parent() const { return parent_; }
  const FiniteMatrixGroup& group() const { return *parent_; }
  const std::vector<ElementIndex>& members() const { return members_; }
  const std::vector<ElementIndex>& generators() const { return generators_; }
  std::size_t order() const { return members_.size(); }
  bool contains(ElementIndex g) const { return mask_[g]; }
  bool is_trivial() const { return members_.size() == 1; }
  bool is_whole() const { return members_.size() == parent_->order(); }
  bool is_subset_of(const Subgroup& other) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.members_ == b.members_;
  }

 private:
  GroupPtr parent_;
  std::vector<ElementIndex> members_;
  std::vector<ElementIndex> generators_;
  std::vector<bool> mask_;
};

Subgroup whole_group(const GroupPtr& g);
Subgroup trivial_subgroup(const GroupPtr& g);

/// Smallest subgroup containing the seed elements.
Subgroup subgroup_generated(const GroupPtr& g, std::span<const ElementIndex> seed);
/// Smallest subgroup containing both.
Subgroup join(const Subgroup& a, const Subgroup& b);
/// The subgroup whose members are exactly `members`; throws std::invalid_argument
/// when the set is not closed.
Subgroup subgroup_from_members(const GroupPtr& g, std::vector<ElementIndex> members);

Subgroup intersect_subgroups(const Subgroup& a, const Subgroup& b);

/// Normal closure of the seed inside h.
Subgroup normal_closure(const Subgroup& h, std::span<const ElementIndex> seed);
Subgroup commutator_subgroup(const Subgroup& h);
bool is_perfect(const Subgroup& h);
bool is_normal_in(const Subgroup& n, const Subgroup& h);

/// Invariant factors (ascending, d_i | d_{i+1}) of the abelian group a / n.
/// Requires n normal in a with abelian quotient.
std::vector<std::size_t> quotient_invariants(const Subgroup& a, const Subgroup& n);
/// Invariant factors of h / [h, h]; empty iff h is perfect.
std::vector<std::size_t> abelianization(const Subgroup& h);

using OrderHistogram = std::map<std::size_t, std::size_t>;
OrderHistogram element_order_histogram(const FiniteMatrixGroup& g);
OrderHistogram element_order_histogram(const Subgroup& h);

/// g h g^{-1}.
Subgroup conjugate(const Subgroup& h, ElementIndex g);
/// Some g with g a g^{-1} = b, if any.
std::optional<ElementIndex> conjugating_element(const Subgroup& a, const Subgroup& b);
bool are_conjugate_subgroups(const Subgroup& a, const Subgroup& b);
/// Whether some conjugate of `small` lies inside `big`.
bool is_subconjugate(const Subgroup& small, const Subgroup& big);

}  // namespace multinv
