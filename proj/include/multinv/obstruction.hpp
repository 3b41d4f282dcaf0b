#pragma once

// Necessary conditions for Z[L]^G to be Cohen-Macaulay, evaluated on the
// isotropy groups of an effective faithful model of the action.

#include <optional>
#include <string>
#include <vector>

#include "multinv/group.hpp"
#include "multinv/isotropy.hpp"

namespace multinv {

enum class Verdict { kObstructed, kInconclusive, kTriviallyCM };

std::string to_string(Verdict v);

/// One conjugacy class of isotropy groups G_m.
struct IsotropyRow {
  IntVector witness;  // m in the input lattice with this isotropy group
  std::size_t order = 0;
  std::size_t bireflection_order = 0;              // |M(G_m)|
  std::vector<std::size_t> abelianization;         // invariant factors of G_m^ab
  std::vector<std::size_t> bireflection_image;     // image of M(G_m) in G_m^ab
  Index moved_rank = 0;                            // rank L / L^{G_m}
  bool perfect = false;
  bool perfect_mod_bireflections = false;
  bool bireflection_generated = false;             // G_m = M(G_m)
};

struct ObstructionReport {
  std::string name;
  Index rank = 0;
  std::size_t generator_count = 0;
  std::size_t group_order = 0;

  Index fixed_rank = 0;           // rank L^G
  Index effective_rank = 0;       // rank L / L^G
  std::size_t effective_order = 0;

  std::vector<IsotropyRow> rows;
  bool condition_a = false;  // every G_m / M(G_m) perfect
  bool condition_b = false;  // action trivial, or some G_m non-perfect
  bool all_bireflection_generated = false;
  std::optional<std::string> special_rule;
  Verdict verdict = Verdict::kInconclusive;

  std::vector<std::string> findings;
  std::vector<std::string> fpf_notes;
  std::string conclusion;
};

/// The induced action on L / L^G.  The closed group of the result is
/// G / Ker_G(L / L^G).
GLattice effective_reduction(const GLattice& lattice);

/// Character comparison over paired generator words.  Throws
/// GeneratorMismatch when the pairing does not define an isomorphism of the
/// two closed groups.
bool rationally_isomorphic(const GLattice& a, const GLattice& b, std::size_t cap = kDefaultCap);

/// L^{+r} with block-diagonal generators.
GLattice direct_sum_copies(const GLattice& lattice, int r);

ObstructionReport check_necessary_conditions(const GLattice& lattice, std::size_t cap = kDefaultCap);

/// check_necessary_conditions on r copies; for r >= 3 and a nontrivial action
/// anything but Obstructed raises TheoremViolation.
ObstructionReport copies_verdict(const GLattice& lattice, int r, std::size_t cap = kDefaultCap);

}  // namespace multinv
