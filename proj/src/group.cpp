#include "multinv/group.hpp"

#include <algorithm>
#include <cstring>
#include <deque>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "multinv/errors.hpp"
#include "multinv/linalg.hpp"

namespace multinv {

namespace {

constexpr std::size_t kTableLimit = 1024;

Integer trace_of(const IntMatrix& m) {
  Integer t = 0;
  for (Index i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

// Incremental closure under right multiplication by a growing generator list.
class SubgroupBuilder {
 public:
  explicit SubgroupBuilder(const GroupPtr& g) : g_(g), mask_(g->order(), false) {
    members_.push_back(g->identity());
    mask_[g->identity()] = true;
  }

  bool contains(ElementIndex x) const { return mask_[x]; }
  std::size_t size() const { return members_.size(); }
  const std::vector<ElementIndex>& generators() const { return gens_; }

  void add_generator(ElementIndex s) {
    if (mask_[s]) return;
    gens_.push_back(s);
    const std::size_t old = members_.size();
    for (std::size_t k = 0; k < members_.size(); ++k) {
      const ElementIndex x = members_[k];
      if (k < old) {
        push(g_->product(x, s));
      } else {
        for (ElementIndex t : gens_) push(g_->product(x, t));
      }
    }
  }

  Subgroup finish() && {
    std::sort(members_.begin(), members_.end());
    return Subgroup(g_, std::move(members_), std::move(gens_));
  }

 private:
  void push(ElementIndex y) {
    if (mask_[y]) return;
    mask_[y] = true;
    members_.push_back(y);
  }

  GroupPtr g_;
  std::vector<bool> mask_;
  std::vector<ElementIndex> members_;
  std::vector<ElementIndex> gens_;
};

}  // namespace

void validate(const GLattice& lattice) {
  if (lattice.rank < 0) throw ValidationError("negative rank");
  for (std::size_t i = 0; i < lattice.generators.size(); ++i) {
    const auto& g = lattice.generators[i];
    const std::string where = "generators[" + std::to_string(i) + "]";
    if (g.rows() != lattice.rank || g.cols() != lattice.rank)
      throw ValidationError(where + ": expected a " + std::to_string(lattice.rank) + "x" +
                            std::to_string(lattice.rank) + " matrix, got " + std::to_string(g.rows()) +
                            "x" + std::to_string(g.cols()));
    Integer d = determinant(g);
    if (d != 1 && d != -1)
      throw ValidationError(where + ": determinant " + d.str() + " is not +-1 (matrix not unimodular)");
  }
}

GroupPtr close(const GLattice& lattice, std::size_t cap) {
  validate(lattice);
  const Index n = lattice.rank;
  const Integer n_big = n;

  std::vector<IntMatrix> found;
  std::unordered_map<std::string, ElementIndex> seen;
  auto admit = [&](IntMatrix m) {
    std::string key = entry_key(m);
    if (seen.count(key)) return;
    if (abs_value(trace_of(m)) > n_big)
      throw CapExceeded("group '" + lattice.name + "' is infinite: element with |trace| > rank");
    if (found.size() >= cap)
      throw CapExceeded("group '" + lattice.name + "' has more than " + std::to_string(cap) + " elements");
    seen.emplace(std::move(key), static_cast<ElementIndex>(found.size()));
    found.push_back(std::move(m));
  };
  admit(IntMatrix::Identity(n, n));
  for (std::size_t k = 0; k < found.size(); ++k)
    for (const auto& s : lattice.generators) admit(IntMatrix(found[k] * s));

  std::sort(found.begin(), found.end(), [](const IntMatrix& a, const IntMatrix& b) { return lex_less(a, b); });

  std::shared_ptr<FiniteMatrixGroup> g(new FiniteMatrixGroup());
  g->lattice_ = lattice;
  g->elements_ = std::move(found);
  const std::size_t order = g->elements_.size();
  g->index_.reserve(order);
  for (std::size_t i = 0; i < order; ++i) g->index_.emplace(entry_key(g->elements_[i]), static_cast<ElementIndex>(i));
  g->identity_ = *g->index_of(IntMatrix::Identity(n, n));
  for (const auto& s : lattice.generators) g->generator_indices_.push_back(*g->index_of(s));

  bool fits = true;
  const Integer bound = std::numeric_limits<std::int32_t>::max();
  for (const auto& e : g->elements_)
    for (Index i = 0; i < e.size() && fits; ++i)
      if (abs_value(e.data()[i]) > bound) fits = false;
  if (fits) {
    g->compact_.resize(order * static_cast<std::size_t>(n * n));
    for (std::size_t k = 0; k < order; ++k)
      for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
          g->compact_[k * n * n + i * n + j] = g->elements_[k](i, j).convert_to<std::int64_t>();
  }

  if (order <= kTableLimit) {
    g->table_.resize(order * order);
    for (std::size_t a = 0; a < order; ++a)
      for (std::size_t b = 0; b < order; ++b)
        g->table_[a * order + b] = fits ? g->multiply_compact(a, b) : g->multiply_slow(a, b);
  }

  g->orders_.resize(order);
  g->inverses_.resize(order);
  for (std::size_t a = 0; a < order; ++a) {
    const auto x = static_cast<ElementIndex>(a);
    ElementIndex power = x;
    ElementIndex previous = g->identity_;
    std::size_t k = 1;
    while (power != g->identity_) {
      previous = power;
      power = g->product(power, x);
      ++k;
    }
    g->orders_[a] = k;
    g->inverses_[a] = previous;
  }

  g->moved_ranks_.resize(order);
  const IntMatrix id = IntMatrix::Identity(n, n);
  for (std::size_t a = 0; a < order; ++a) g->moved_ranks_[a] = rank(IntMatrix(g->elements_[a] - id));
  return g;
}

std::optional<ElementIndex> FiniteMatrixGroup::index_of(const IntMatrix& m) const {
  auto it = index_.find(entry_key(m));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElementIndex FiniteMatrixGroup::multiply_slow(ElementIndex a, ElementIndex b) const {
  auto idx = index_of(IntMatrix(elements_[a] * elements_[b]));
  if (!idx) throw std::logic_error("product left the enumerated group");
  return *idx;
}

ElementIndex FiniteMatrixGroup::multiply_compact(ElementIndex a, ElementIndex b) const {
  const Index n = rank();
  const std::int64_t* x = compact_.data() + static_cast<std::size_t>(a) * n * n;
  const std::int64_t* y = compact_.data() + static_cast<std::size_t>(b) * n * n;
  std::string key;
  key.resize(sizeof(std::int64_t) * static_cast<std::size_t>(n * n + 1));
  char* out = key.data();
  const std::int64_t rows = n;
  std::memcpy(out, &rows, sizeof rows);
  out += sizeof rows;
  // entry_key is row-major with the row count first; matches this layout.
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      __int128 acc = 0;
      for (Index k = 0; k < n; ++k) acc += static_cast<__int128>(x[i * n + k]) * y[k * n + j];
      const auto v = static_cast<std::int64_t>(acc);
      std::memcpy(out, &v, sizeof v);
      out += sizeof v;
    }
  auto it = index_.find(key);
  if (it == index_.end()) throw std::logic_error("product left the enumerated group");
  return it->second;
}

ElementIndex FiniteMatrixGroup::product(ElementIndex a, ElementIndex b) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * order() + b];
  return compact_.empty() ? multiply_slow(a, b) : multiply_compact(a, b);
}

// ---------------------------------------------------------------------------

Subgroup::Subgroup(GroupPtr parent, std::vector<ElementIndex> members, std::vector<ElementIndex> generators)
    : parent_(std::move(parent)), members_(std::move(members)), generators_(std::move(generators)) {
  mask_.assign(parent_->order(), false);
  for (ElementIndex m : members_) mask_[m] = true;
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  if (order() > other.order()) return false;
  return std::all_of(members_.begin(), members_.end(), [&](ElementIndex m) { return other.contains(m); });
}

Subgroup whole_group(const GroupPtr& g) {
  return subgroup_generated(g, g->generator_indices());
}

Subgroup trivial_subgroup(const GroupPtr& g) { return Subgroup(g, {g->identity()}, {}); }

Subgroup subgroup_generated(const GroupPtr& g, std::span<const ElementIndex> seed) {
  SubgroupBuilder b(g);
  for (ElementIndex s : seed) b.add_generator(s);
  return std::move(b).finish();
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  SubgroupBuilder builder(a.parent());
  for (ElementIndex s : a.generators()) builder.add_generator(s);
  for (ElementIndex s : b.generators()) builder.add_generator(s);
  return std::move(builder).finish();
}

Subgroup subgroup_from_members(const GroupPtr& g, std::vector<ElementIndex> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  SubgroupBuilder b(g);
  for (ElementIndex m : members) b.add_generator(m);
  if (b.size() != members.size()) throw std::invalid_argument("member set is not a subgroup");
  return std::move(b).finish();
}

Subgroup intersect_subgroups(const Subgroup& a, const Subgroup& b) {
  if (a.parent() != b.parent()) throw std::invalid_argument("subgroups of different groups");
  std::vector<ElementIndex> common;
  std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(), b.members().end(),
                        std::back_inserter(common));
  return subgroup_from_members(a.parent(), std::move(common));
}

Subgroup normal_closure(const Subgroup& h, std::span<const ElementIndex> seed) {
  const auto& g = h.group();
  SubgroupBuilder b(h.parent());
  for (ElementIndex s : seed) b.add_generator(s);
  for (std::size_t k = 0; k < b.generators().size(); ++k) {
    for (ElementIndex x : h.generators()) {
      const ElementIndex n = b.generators()[k];
      b.add_generator(g.product(g.product(g.inverse(x), n), x));
    }
  }
  return std::move(b).finish();
}

Subgroup commutator_subgroup(const Subgroup& h) {
  const auto& g = h.group();
  std::vector<ElementIndex> seed;
  const auto& gens = h.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      const ElementIndex a = gens[i], b = gens[j];
      seed.push_back(g.product(g.product(g.inverse(a), g.inverse(b)), g.product(a, b)));
    }
  return normal_closure(h, seed);
}

bool is_perfect(const Subgroup& h) { return commutator_subgroup(h).order() == h.order(); }

bool is_normal_in(const Subgroup& n, const Subgroup& h) {
  const auto& g = h.group();
  for (ElementIndex x : h.generators())
    for (ElementIndex m : n.generators())
      if (!n.contains(g.product(g.product(g.inverse(x), m), x))) return false;
  return true;
}

std::vector<std::size_t> quotient_invariants(const Subgroup& a, const Subgroup& n) {
  const auto& g = a.group();
  SubgroupBuilder current(a.parent());
  for (ElementIndex s : n.generators()) current.add_generator(s);
  std::vector<std::size_t> factors;
  while (current.size() < a.order()) {
    ElementIndex best = 0;
    std::size_t best_order = 0;
    for (ElementIndex x : a.members()) {
      if (current.contains(x)) continue;
      std::size_t t = 1;
      ElementIndex power = x;
      while (!current.contains(power)) {
        power = g.product(power, x);
        ++t;
      }
      if (t > best_order) {
        best_order = t;
        best = x;
      }
    }
    factors.push_back(best_order);
    current.add_generator(best);
  }
  std::reverse(factors.begin(), factors.end());
  return factors;
}

std::vector<std::size_t> abelianization(const Subgroup& h) { return quotient_invariants(h, commutator_subgroup(h)); }

OrderHistogram element_order_histogram(const FiniteMatrixGroup& g) {
  OrderHistogram hist;
  for (std::size_t i = 0; i < g.order(); ++i) ++hist[g.element_order(static_cast<ElementIndex>(i))];
  return hist;
}

OrderHistogram element_order_histogram(const Subgroup& h) {
  OrderHistogram hist;
  for (ElementIndex m : h.members()) ++hist[h.group().element_order(m)];
  return hist;
}

Subgroup conjugate(const Subgroup& h, ElementIndex x) {
  const auto& g = h.group();
  const ElementIndex xi = g.inverse(x);
  std::vector<ElementIndex> members;
  members.reserve(h.order());
  for (ElementIndex m : h.members()) members.push_back(g.product(g.product(x, m), xi));
  std::sort(members.begin(), members.end());
  std::vector<ElementIndex> gens;
  for (ElementIndex m : h.generators()) gens.push_back(g.product(g.product(x, m), xi));
  return Subgroup(h.parent(), std::move(members), std::move(gens));
}

namespace {

bool conjugates_into(const Subgroup& a, const Subgroup& b, ElementIndex x) {
  const auto& g = a.group();
  const ElementIndex xi = g.inverse(x);
  for (ElementIndex m : a.generators())
    if (!b.contains(g.product(g.product(x, m), xi))) return false;
  return true;
}

}  // namespace

std::optional<ElementIndex> conjugating_element(const Subgroup& a, const Subgroup& b) {
  if (a.parent() != b.parent()) throw std::invalid_argument("subgroups of different groups");
  if (a.order() != b.order()) return std::nullopt;
  if (element_order_histogram(a) != element_order_histogram(b)) return std::nullopt;
  for (std::size_t x = 0; x < a.group().order(); ++x)
    if (conjugates_into(a, b, static_cast<ElementIndex>(x))) return static_cast<ElementIndex>(x);
  return std::nullopt;
}

bool are_conjugate_subgroups(const Subgroup& a, const Subgroup& b) { return conjugating_element(a, b).has_value(); }

bool is_subconjugate(const Subgroup& small, const Subgroup& big) {
  if (small.parent() != big.parent()) throw std::invalid_argument("subgroups of different groups");
  if (big.order() % small.order() != 0) return false;
  for (std::size_t x = 0; x < small.group().order(); ++x)
    if (conjugates_into(small, big, static_cast<ElementIndex>(x))) return true;
  return false;
}

}  // namespace multinv
