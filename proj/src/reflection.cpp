#include "multinv/reflection.hpp"

#include "multinv/linalg.hpp"

namespace multinv {

std::string ReflectionProfile::label() const {
  switch (kind) {
    case ReflectionKind::kIdentity:
      return "identity";
    case ReflectionKind::kReflection:
      return "reflection";
    case ReflectionKind::kBireflection:
      return "bireflection";
    case ReflectionKind::kKReflection:
      break;
  }
  return "k-reflection(" + std::to_string(moved_rank) + ")";
}

Index moved_rank(const FiniteMatrixGroup& g, ElementIndex element) { return g.moved_rank(element); }

ReflectionProfile reflection_profile(const FiniteMatrixGroup& g, ElementIndex element) {
  ReflectionProfile p;
  p.element = element;
  p.moved_rank = g.moved_rank(element);
  switch (p.moved_rank) {
    case 0:
      p.kind = ReflectionKind::kIdentity;
      break;
    case 1:
      p.kind = ReflectionKind::kReflection;
      break;
    case 2:
      p.kind = ReflectionKind::kBireflection;
      break;
    default:
      p.kind = ReflectionKind::kKReflection;
  }
  return p;
}

Index moved_rank_subgroup(const Subgroup& h) {
  const auto& g = h.group();
  const Index n = g.rank();
  const auto& gens = h.generators();
  if (gens.empty() || n == 0) return 0;
  IntMatrix stacked(n, n * static_cast<Index>(gens.size()));
  const IntMatrix id = IntMatrix::Identity(n, n);
  for (std::size_t k = 0; k < gens.size(); ++k)
    stacked.middleCols(static_cast<Index>(k) * n, n) = g.element(gens[k]) - id;
  return rank(stacked);
}

bool in_Xk(const Subgroup& h, Index k) { return moved_rank_subgroup(h) <= k; }

Subgroup bireflection_subgroup(const Subgroup& h) {
  std::vector<ElementIndex> seed;
  for (ElementIndex m : h.members())
    if (h.group().moved_rank(m) <= 2) seed.push_back(m);
  return subgroup_generated(h.parent(), seed);
}

bool is_perfect_mod_bireflections(const Subgroup& h) {
  return join(bireflection_subgroup(h), commutator_subgroup(h)).order() == h.order();
}

}  // namespace multinv
