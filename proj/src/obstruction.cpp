#include "multinv/obstruction.hpp"

#include <algorithm>
#include <stdexcept>

#include "multinv/errors.hpp"
#include "multinv/linalg.hpp"
#include "multinv/reflection.hpp"

namespace multinv {

namespace {

std::string factors_to_string(const std::vector<std::size_t>& f) {
  std::string s = "[";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(f[i]);
  }
  return s + "]";
}

std::string vector_label(const IntVector& m) { return m.isZero() ? "0" : to_string(m); }

struct EffectiveModel {
  LatticeSplitting<Integer> splitting;
  GLattice lattice;
};

EffectiveModel effective_model(const GLattice& lattice) {
  validate(lattice);
  const Index n = lattice.rank;
  IntMatrix fixed;
  if (lattice.generators.empty()) {
    fixed = IntMatrix::Identity(n, n);
  } else {
    IntMatrix stacked(n * static_cast<Index>(lattice.generators.size()), n);
    for (std::size_t k = 0; k < lattice.generators.size(); ++k)
      stacked.middleRows(static_cast<Index>(k) * n, n) = lattice.generators[k] - IntMatrix::Identity(n, n);
    fixed = kernel_lattice(stacked);
  }
  EffectiveModel model{split_lattice(n, fixed), {}};
  model.lattice.rank = model.splitting.quotient_rank();
  model.lattice.name = lattice.name + "/L^G";
  for (const auto& g : lattice.generators) model.lattice.generators.push_back(model.splitting.quotient_action(g));
  return model;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kObstructed:
      return "Obstructed";
    case Verdict::kInconclusive:
      return "Inconclusive";
    case Verdict::kTriviallyCM:
      return "TriviallyCM";
  }
  return "?";
}

GLattice effective_reduction(const GLattice& lattice) {
  if (lattice.generators.empty()) {
    GLattice out = lattice;
    out.rank = 0;
    return out;
  }
  auto model = effective_model(lattice);
  // Already effective: keep the input basis.
  if (model.splitting.sub_rank == 0) return lattice;
  return model.lattice;
}

bool rationally_isomorphic(const GLattice& a, const GLattice& b, std::size_t cap) {
  if (a.generators.size() != b.generators.size())
    throw GeneratorMismatch("generator lists have different lengths (" + std::to_string(a.generators.size()) +
                            " vs " + std::to_string(b.generators.size()) + ")");
  validate(a);
  validate(b);
  const Index n = a.rank + b.rank;
  GLattice paired;
  paired.rank = n;
  paired.name = a.name + "+" + b.name;
  for (std::size_t i = 0; i < a.generators.size(); ++i) {
    IntMatrix m = IntMatrix::Zero(n, n);
    m.topLeftCorner(a.rank, a.rank) = a.generators[i];
    m.bottomRightCorner(b.rank, b.rank) = b.generators[i];
    paired.generators.push_back(std::move(m));
  }
  auto ga = close(a, cap);
  auto gb = close(b, cap);
  auto gp = close(paired, cap);
  if (gp->order() != ga->order() || gp->order() != gb->order())
    throw GeneratorMismatch("paired generators do not define an isomorphism (orders " + std::to_string(ga->order()) +
                            ", " + std::to_string(gb->order()) + ", paired " + std::to_string(gp->order()) + ")");
  for (const auto& e : gp->elements()) {
    Integer ta = 0, tb = 0;
    for (Index i = 0; i < a.rank; ++i) ta += e(i, i);
    for (Index i = a.rank; i < n; ++i) tb += e(i, i);
    if (ta != tb) return false;
  }
  return true;
}

GLattice direct_sum_copies(const GLattice& lattice, int r) {
  if (r < 1) throw std::invalid_argument("number of copies must be at least 1");
  const Index n = lattice.rank;
  GLattice out;
  out.rank = n * r;
  out.name = r == 1 ? lattice.name : lattice.name + "^" + std::to_string(r);
  for (const auto& g : lattice.generators) {
    IntMatrix m = IntMatrix::Zero(out.rank, out.rank);
    for (int k = 0; k < r; ++k) m.block(k * n, k * n, n, n) = g;
    out.generators.push_back(std::move(m));
  }
  return out;
}

ObstructionReport check_necessary_conditions(const GLattice& lattice, std::size_t cap) {
  ObstructionReport report;
  report.name = lattice.name;
  report.rank = lattice.rank;
  report.generator_count = lattice.generators.size();

  const GroupPtr g = close(lattice, cap);
  report.group_order = g->order();
  const bool trivial_action = g->acts_trivially();

  const EffectiveModel model = effective_model(lattice);
  report.fixed_rank = model.splitting.sub_rank;
  report.effective_rank = model.lattice.rank;
  const GroupPtr geff = close(model.lattice, cap);
  report.effective_order = geff->order();

  const IsotropyCatalog catalog = enumerate_isotropy_groups(geff);
  report.condition_a = true;
  report.all_bireflection_generated = true;
  bool some_non_perfect = false;
  for (const auto& c : catalog.classes) {
    IsotropyRow row;
    row.witness = model.splitting.lift(c.witness);
    row.order = c.group.order();
    const Subgroup bireflections = bireflection_subgroup(c.group);
    const Subgroup derived = commutator_subgroup(c.group);
    row.bireflection_order = bireflections.order();
    row.abelianization = quotient_invariants(c.group, derived);
    row.bireflection_image = quotient_invariants(join(bireflections, derived), derived);
    row.moved_rank = geff->rank() - c.fixed_basis.rows();
    row.perfect = derived.order() == c.group.order();
    row.perfect_mod_bireflections = join(bireflections, derived).order() == c.group.order();
    row.bireflection_generated = bireflections.order() == c.group.order();

    report.condition_a = report.condition_a && row.perfect_mod_bireflections;
    report.all_bireflection_generated = report.all_bireflection_generated && row.bireflection_generated;
    some_non_perfect = some_non_perfect || !row.perfect;
    if (!row.perfect_mod_bireflections)
      report.findings.push_back("condition A fails at m = " + vector_label(row.witness) + ": abelianization " +
                                factors_to_string(row.abelianization) + ", bireflection image " +
                                factors_to_string(row.bireflection_image));
    report.rows.push_back(std::move(row));
  }
  report.condition_b = trivial_action || some_non_perfect;
  if (!report.condition_b)
    report.findings.push_back("condition B fails: the action is nontrivial and every isotropy group is perfect");

  report.fpf_notes = check_fpf_constraints(geff, catalog).lines;

  const bool conditions_hold = report.condition_a && report.condition_b;
  if (trivial_action) {
    report.special_rule = "trivial action";
  } else if (lattice.rank <= 2) {
    report.special_rule = "rank at most 2";
  }
  if (report.special_rule) {
    if (!conditions_hold)
      throw TheoremViolation("special rule '" + *report.special_rule + "' fired but a necessary condition fails");
    report.verdict = Verdict::kTriviallyCM;
    report.conclusion = "Z[L]^G is Cohen-Macaulay (" + *report.special_rule +
                        "); so is k[L]^G for every Cohen-Macaulay base ring k";
  } else if (conditions_hold) {
    report.verdict = Verdict::kInconclusive;
    report.conclusion = "both necessary conditions hold; Cohen-Macaulayness of Z[L]^G is not decided";
  } else {
    report.verdict = Verdict::kObstructed;
    report.conclusion =
        "Z[L]^G is not Cohen-Macaulay; equivalently F_p[L]^G is not Cohen-Macaulay for some prime p dividing |G|";
  }
  return report;
}

ObstructionReport copies_verdict(const GLattice& lattice, int r, std::size_t cap) {
  ObstructionReport report = check_necessary_conditions(direct_sum_copies(lattice, r), cap);
  const Index n = lattice.rank;
  const bool nontrivial = std::any_of(lattice.generators.begin(), lattice.generators.end(),
                                      [n](const IntMatrix& g) { return g != IntMatrix::Identity(n, n); });
  if (r >= 3 && nontrivial && report.verdict != Verdict::kObstructed)
    throw TheoremViolation("nontrivial action with " + std::to_string(r) + " copies was not obstructed (verdict " +
                           to_string(report.verdict) + ")");
  return report;
}

}  // namespace multinv
