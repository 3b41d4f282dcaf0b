#pragma once

// Generalized reflections: rank of [g, L] for elements and subgroups, the
// bireflection subgroup M(H) and membership in the families X_k.

#include <string>

#include "multinv/group.hpp"

namespace multinv {

enum class ReflectionKind { kIdentity, kReflection, kBireflection, kKReflection };

struct ReflectionProfile {
  ElementIndex element = 0;
  Index moved_rank = 0;
  ReflectionKind kind = ReflectionKind::kIdentity;

  /// "identity", "reflection", "bireflection" or "k-reflection(k)".
  std::string label() const;
};

Index moved_rank(const FiniteMatrixGroup& g, ElementIndex element);
ReflectionProfile reflection_profile(const FiniteMatrixGroup& g, ElementIndex element);

/// rank [H, L]: rank of the column spans of (h - 1) over generators of H.
/// By the lattice lemma this is also rank L - rank L^H and the height of the
/// ideal I(H).
Index moved_rank_subgroup(const Subgroup& h);

/// H in X_k, i.e. rank L / L^H <= k.
bool in_Xk(const Subgroup& h, Index k);

/// M(H): the subgroup generated by all elements of H with moved rank <= 2.
Subgroup bireflection_subgroup(const Subgroup& h);

/// Whether H / M(H) is perfect, i.e. H = <M(H), [H, H]>.
bool is_perfect_mod_bireflections(const Subgroup& h);

}  // namespace multinv
