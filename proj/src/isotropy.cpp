#include "multinv/isotropy.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <unordered_set>

#include "multinv/errors.hpp"
#include "multinv/linalg.hpp"
#include "multinv/reflection.hpp"

namespace multinv {

namespace {

bool fixes_rows(const IntMatrix& g, const IntMatrix& rows) {
  for (Index r = 0; r < rows.rows(); ++r) {
    IntVector v = rows.row(r).transpose();
    if (IntVector(g * v) != v) return false;
  }
  return true;
}

// W ∩ ker(g - 1) for W spanned by saturated rows.
IntMatrix intersect_with_fixed(const IntMatrix& w, const IntMatrix& g) {
  const Index n = g.rows();
  IntMatrix moved = (g - IntMatrix::Identity(n, n)) * w.transpose();
  IntMatrix coefficients = kernel_lattice(moved);
  if (coefficients.rows() == 0) return IntMatrix(0, n);
  return row_basis(IntMatrix(coefficients * w));
}

}  // namespace

IntMatrix fixed_lattice(const Subgroup& h) {
  const auto& g = h.group();
  const Index n = g.rank();
  const auto& gens = h.generators();
  if (gens.empty()) return IntMatrix::Identity(n, n);
  IntMatrix stacked(n * static_cast<Index>(gens.size()), n);
  const IntMatrix id = IntMatrix::Identity(n, n);
  for (std::size_t k = 0; k < gens.size(); ++k) stacked.middleRows(static_cast<Index>(k) * n, n) = g.element(gens[k]) - id;
  return kernel_lattice(stacked);
}

Subgroup isotropy_group_of(const GroupPtr& g, const IntVector& m) {
  IntMatrix row(1, m.size());
  row.row(0) = m.transpose();
  return pointwise_stabilizer(g, row);
}

Subgroup pointwise_stabilizer(const GroupPtr& g, const IntMatrix& basis_rows) {
  std::vector<ElementIndex> members;
  for (std::size_t x = 0; x < g->order(); ++x)
    if (fixes_rows(g->element(static_cast<ElementIndex>(x)), basis_rows)) members.push_back(static_cast<ElementIndex>(x));
  return subgroup_from_members(g, std::move(members));
}

const IsotropyClass* IsotropyCatalog::find_conjugate(const Subgroup& h) const {
  for (const auto& c : classes)
    if (c.group.order() == h.order() && are_conjugate_subgroups(c.group, h)) return &c;
  return nullptr;
}

IsotropyCatalog enumerate_isotropy_groups(const GroupPtr& g) {
  const Index n = g->rank();

  // Distinct fixed spaces V^g, each with one element realizing it.
  std::vector<std::pair<IntMatrix, ElementIndex>> cyclic;
  {
    std::unordered_set<std::string> seen;
    const IntMatrix id = IntMatrix::Identity(n, n);
    for (std::size_t x = 0; x < g->order(); ++x) {
      const auto e = static_cast<ElementIndex>(x);
      IntMatrix space = kernel_lattice(IntMatrix(g->element(e) - id));
      if (seen.insert(entry_key(space)).second) cyclic.emplace_back(std::move(space), e);
    }
  }

  struct Rep {
    IntMatrix space;
    Subgroup group;
  };
  std::vector<Rep> reps;
  std::unordered_set<std::string> visited;

  auto consider = [&](IntMatrix space) {
    if (!visited.insert(entry_key(space)).second) return;
    Subgroup h = pointwise_stabilizer(g, space);
    for (const auto& r : reps)
      if (r.group.order() == h.order() && are_conjugate_subgroups(r.group, h)) return;
    reps.push_back({std::move(space), std::move(h)});
  };

  consider(IntMatrix::Identity(n, n));
  // Every intersection of cyclic fixed spaces is, up to conjugacy, reached by
  // intersecting some representative with a single V^g.
  for (std::size_t k = 0; k < reps.size(); ++k) {
    for (const auto& [space, element] : cyclic) {
      const IntMatrix w = reps[k].space;
      if (fixes_rows(g->element(element), w)) continue;
      consider(intersect_with_fixed(w, g->element(element)));
    }
  }

  std::stable_sort(reps.begin(), reps.end(), [](const Rep& a, const Rep& b) {
    if (a.group.order() != b.group.order()) return a.group.order() > b.group.order();
    return a.group.members() < b.group.members();
  });

  IsotropyCatalog catalog;
  for (auto& r : reps) {
    IntVector m = witness_vector(r.group);
    catalog.classes.push_back({std::move(r.group), std::move(m), std::move(r.space)});
  }
  return catalog;
}

IntVector witness_vector(const Subgroup& h) {
  const auto& g = h.group();
  const Index n = g.rank();
  const IntMatrix w = fixed_lattice(h);
  const Index k = w.rows();

  std::vector<ElementIndex> outside;
  for (std::size_t x = 0; x < g.order(); ++x)
    if (!h.contains(static_cast<ElementIndex>(x))) outside.push_back(static_cast<ElementIndex>(x));
  for (ElementIndex x : outside)
    if (fixes_rows(g.element(x), w))
      throw NotIsotropy("subgroup of order " + std::to_string(h.order()) +
                        " is not the pointwise stabilizer of its fixed lattice");

  if (k == 0 || outside.empty()) return IntVector::Zero(n);

  // (g - 1) W^T for every g outside H; a coefficient vector c is a witness
  // iff no block annihilates it.
  std::vector<IntMatrix> blocks;
  std::vector<Index> block_rank;
  const IntMatrix id = IntMatrix::Identity(n, n);
  for (ElementIndex x : outside) {
    blocks.emplace_back((g.element(x) - id) * w.transpose());
    block_rank.push_back(rank(blocks.back()));
  }
  // Blocks of low rank have large kernels and reject most candidates.
  std::vector<std::size_t> order(blocks.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return block_rank[a] < block_rank[b]; });

  bool fits = true;
  const Integer bound = std::numeric_limits<std::int32_t>::max();
  for (const auto& b : blocks)
    for (Index i = 0; i < b.size() && fits; ++i)
      if (abs_value(b.data()[i]) > bound) fits = false;
  std::vector<std::vector<std::int64_t>> compact;
  if (fits) {
    for (std::size_t i : order) {
      std::vector<std::int64_t> e(static_cast<std::size_t>(n * k));
      for (Index r = 0; r < n; ++r)
        for (Index c = 0; c < k; ++c) e[r * k + c] = blocks[i](r, c).convert_to<std::int64_t>();
      compact.push_back(std::move(e));
    }
  }

  auto annihilated = [&](const std::vector<std::int64_t>& coeff) {
    if (fits) {
      for (const auto& e : compact) {
        bool zero = true;
        for (Index r = 0; r < n && zero; ++r) {
          __int128 acc = 0;
          for (Index c = 0; c < k; ++c) acc += static_cast<__int128>(e[r * k + c]) * coeff[c];
          zero = acc == 0;
        }
        if (zero) return true;
      }
      return false;
    }
    IntVector cv(k);
    for (Index c = 0; c < k; ++c) cv(c) = coeff[c];
    for (std::size_t i : order)
      if (IntVector(blocks[i] * cv).isZero()) return true;
    return false;
  };

  const auto max_side = static_cast<std::int64_t>(g.order());
  std::vector<std::int64_t> coeff(static_cast<std::size_t>(k));
  for (std::int64_t s = 1; s <= max_side; ++s) {
    // Lexicographic odometer over {0..s}^k, visiting only vectors with max = s.
    std::fill(coeff.begin(), coeff.end(), 0);
    while (true) {
      if (*std::max_element(coeff.begin(), coeff.end()) == s && !annihilated(coeff)) {
        IntVector cv(k);
        for (Index c = 0; c < k; ++c) cv(c) = coeff[c];
        return w.transpose() * cv;
      }
      Index pos = k - 1;
      while (pos >= 0 && coeff[pos] == s) coeff[pos--] = 0;
      if (pos < 0) break;
      ++coeff[pos];
    }
  }
  throw TheoremViolation("no witness vector within the coefficient box of side |G|");
}

std::vector<MinimalIsotropy> minimal_nontrivial_isotropy(const IsotropyCatalog& catalog) {
  std::vector<MinimalIsotropy> out;
  for (const auto& c : catalog.classes) {
    if (c.group.is_trivial()) continue;
    bool minimal = true;
    for (const auto& other : catalog.classes) {
      if (other.group.is_trivial() || other.group.order() >= c.group.order()) continue;
      if (is_subconjugate(other.group, c.group)) {
        minimal = false;
        break;
      }
    }
    if (!minimal) continue;

    const auto& g = c.group.group();
    auto split = split_lattice(g.rank(), c.fixed_basis);
    bool fpf = split.quotient_rank() > 0;
    for (ElementIndex m : c.group.members()) {
      if (m == g.identity() || !fpf) continue;
      IntMatrix q = split.quotient_action(g.element(m));
      if (rank(IntMatrix(q - IntMatrix::Identity(q.rows(), q.cols()))) != q.rows()) fpf = false;
    }
    if (!fpf)
      throw TheoremViolation("minimal isotropy group of order " + std::to_string(c.group.order()) +
                             " does not act fixed-point-freely on L/L^H");
    out.push_back({c.group, fpf});
  }
  return out;
}

std::vector<MinimalIsotropy> minimal_nontrivial_isotropy(const GroupPtr& g) {
  return minimal_nontrivial_isotropy(enumerate_isotropy_groups(g));
}

bool is_fixed_point_free(const FiniteMatrixGroup& g) {
  for (std::size_t x = 0; x < g.order(); ++x) {
    const auto e = static_cast<ElementIndex>(x);
    if (e != g.identity() && g.moved_rank(e) != g.rank()) return false;
  }
  return true;
}

const OrderHistogram& sl2_f5_order_histogram() {
  static const OrderHistogram hist = [] {
    using M2 = std::array<int, 4>;
    auto mul = [](const M2& x, const M2& y) {
      return M2{(x[0] * y[0] + x[1] * y[2]) % 5, (x[0] * y[1] + x[1] * y[3]) % 5,
                (x[2] * y[0] + x[3] * y[2]) % 5, (x[2] * y[1] + x[3] * y[3]) % 5};
    };
    const M2 id{1, 0, 0, 1};
    OrderHistogram h;
    for (int a = 0; a < 5; ++a)
      for (int b = 0; b < 5; ++b)
        for (int c = 0; c < 5; ++c)
          for (int d = 0; d < 5; ++d) {
            if (((a * d - b * c) % 5 + 5) % 5 != 1) continue;
            const M2 x{a, b, c, d};
            M2 p = x;
            std::size_t k = 1;
            while (p != id) {
              p = mul(p, x);
              ++k;
            }
            ++h[k];
          }
    return h;
  }();
  return hist;
}

bool recognize_binary_icosahedral(const Subgroup& h) {
  if (h.order() != 120) return false;
  if (element_order_histogram(h) != sl2_f5_order_histogram()) return false;
  return is_perfect(h);
}

FpfConstraintReport check_fpf_constraints(const GroupPtr& g, const IsotropyCatalog& catalog) {
  FpfConstraintReport r;
  const Subgroup whole = whole_group(g);
  if (!whole.is_trivial() && is_perfect(whole) && is_fixed_point_free(*g)) {
    r.perfect_fpf_applicable = true;
    r.binary_icosahedral = recognize_binary_icosahedral(whole);
    r.rank_multiple_of_8 = g->rank() % 8 == 0;
    if (!r.binary_icosahedral || !r.rank_multiple_of_8)
      throw TheoremViolation("perfect fixed-point-free group of order " + std::to_string(g->order()) +
                             " on rank " + std::to_string(g->rank()) +
                             " is not binary icosahedral on a rank divisible by 8");
    r.lines.push_back("perfect fixed-point-free action: binary icosahedral, rank " + std::to_string(g->rank()) +
                      " divisible by 8");
  } else {
    r.lines.push_back("perfect fixed-point-free constraint: not applicable");
  }

  auto minimal = minimal_nontrivial_isotropy(catalog);
  const bool all_perfect = !minimal.empty() && std::all_of(minimal.begin(), minimal.end(), [](const MinimalIsotropy& m) {
    return is_perfect(m.group);
  });
  if (all_perfect) {
    r.rank_bound_applicable = true;
    for (const auto& c : catalog.classes) {
      if (c.group.is_trivial()) continue;
      const Index q = g->rank() - c.fixed_basis.rows();
      if (!r.min_quotient_rank || q < *r.min_quotient_rank) r.min_quotient_rank = q;
    }
    if (r.min_quotient_rank && *r.min_quotient_rank < 8)
      throw TheoremViolation("minimal isotropy groups are perfect but rank L/L^H = " +
                             std::to_string(*r.min_quotient_rank) + " < 8");
    r.lines.push_back("minimal isotropy groups perfect: rank L/L^H >= 8 holds (minimum " +
                      std::to_string(r.min_quotient_rank.value_or(0)) + ")");
  } else {
    r.lines.push_back("isotropy rank bound: not applicable");
  }
  return r;
}

FpfConstraintReport check_fpf_constraints(const GroupPtr& g) {
  return check_fpf_constraints(g, enumerate_isotropy_groups(g));
}

}  // namespace multinv
