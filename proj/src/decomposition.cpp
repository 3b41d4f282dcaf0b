#include "multinv/decomposition.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "multinv/linalg.hpp"

namespace multinv {

namespace {

constexpr std::size_t kProductCap = 200'000;

struct Variable {
  std::size_t positive;
  std::optional<std::size_t> negative;
};

std::vector<Variable> merge_inverse_pairs(const std::vector<LaurentElement>& gens) {
  std::vector<Variable> out;
  std::vector<bool> used(gens.size(), false);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    Variable v{i, std::nullopt};
    const LaurentElement one = LaurentElement::constant(gens[i].rank(), 1);
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (!used[j] && multiply(gens[i], gens[j]) == one) {
        used[j] = true;
        v.negative = j;
        break;
      }
    }
    out.push_back(v);
  }
  return out;
}

std::string label_to_string(const ProductLabel& p) {
  std::string s = "a^(";
  for (std::size_t i = 0; i < p.exponents.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p.exponents[i]);
  }
  return s + ")*mu" + std::to_string(p.module_index);
}

void require_invariant(const FiniteMatrixGroup& g, const std::vector<LaurentElement>& gens, const char* what) {
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].rank() != g.rank())
      throw std::invalid_argument(std::string(what) + "[" + std::to_string(i) + "] has the wrong rank");
    if (!is_invariant(g, gens[i]))
      throw NotInvariant(std::string(what) + "[" + std::to_string(i) + "] = " + gens[i].to_string() +
                         " is not invariant");
  }
}

// Products a^e * mu_j reachable through products that stay in the box.
void enumerate_products(const std::vector<LaurentElement>& algebra, const std::vector<Variable>& vars,
                        const std::vector<LaurentElement>& module, std::int64_t bound,
                        std::vector<ProductLabel>& labels, std::vector<LaurentElement>& values) {
  struct Node {
    std::vector<std::int64_t> exps;
    LaurentElement value;
  };
  for (std::size_t j = 0; j < module.size(); ++j) {
    if (module[j].is_zero() || module[j].sup_norm() > bound) continue;
    std::set<std::vector<std::int64_t>> seen;
    std::deque<Node> queue;
    std::vector<std::int64_t> zero(vars.size(), 0);
    seen.insert(zero);
    queue.push_back({zero, module[j]});
    while (!queue.empty()) {
      Node node = std::move(queue.front());
      queue.pop_front();
      for (std::size_t v = 0; v < vars.size(); ++v) {
        for (int step : {1, -1}) {
          if (step < 0 && !vars[v].negative) continue;
          auto exps = node.exps;
          exps[v] += step;
          if (seen.count(exps)) continue;
          seen.insert(exps);
          const auto& factor = algebra[step > 0 ? vars[v].positive : *vars[v].negative];
          LaurentElement value = multiply(node.value, factor);
          if (value.sup_norm() > bound) continue;
          queue.push_back({std::move(exps), std::move(value)});
        }
      }
      labels.push_back({std::move(node.exps), j});
      values.push_back(std::move(node.value));
      if (labels.size() > kProductCap)
        throw std::invalid_argument("more than " + std::to_string(kProductCap) + " products inside the box");
    }
  }
}

LaurentElement combination(const std::vector<LaurentElement>& values, const IntVector& c, Index rank) {
  LaurentElement out(rank);
  for (Index i = 0; i < c.size(); ++i)
    if (c(i) != 0) out += values[static_cast<std::size_t>(i)] * c(i);
  return out;
}

}  // namespace

std::string to_string(DecompositionFailure::Kind kind) {
  switch (kind) {
    case DecompositionFailure::Kind::kRelation:
      return "relation";
    case DecompositionFailure::Kind::kTorsion:
      return "torsion";
    case DecompositionFailure::Kind::kUnreachable:
      return "unreachable";
  }
  return "?";
}

DecompositionResult verify_free_decomposition(const GroupPtr& group, const std::vector<LaurentElement>& algebra_gens,
                                              const std::vector<LaurentElement>& module_gens, std::int64_t bound) {
  const FiniteMatrixGroup& g = *group;
  require_invariant(g, algebra_gens, "algebra_gens");
  require_invariant(g, module_gens, "module_gens");
  for (std::size_t i = 0; i < algebra_gens.size(); ++i)
    if (algebra_gens[i].sup_norm() == 0)
      throw std::invalid_argument("algebra_gens[" + std::to_string(i) + "] is a constant");

  DecompositionResult result;
  auto& cert = result.certificate;
  cert.bound = bound;
  std::int64_t width = 0;
  for (const auto& a : algebra_gens) width = std::max(width, a.sup_norm());
  for (const auto& m : module_gens) width = std::max(width, m.sup_norm());
  cert.interior_bound = bound - width;

  const auto vars = merge_inverse_pairs(algebra_gens);
  for (const auto& v : vars) {
    cert.variables.push_back({v.positive});
    if (v.negative) cert.variables.back().push_back(*v.negative);
  }
  std::vector<LaurentElement> values;
  enumerate_products(algebra_gens, vars, module_gens, bound, cert.products, values);

  const OrbitBasis basis(group, bound);
  const auto& reps = basis.representatives();
  cert.truncation_size = reps.size();
  const Index rows = static_cast<Index>(values.size());
  const Index cols = static_cast<Index>(reps.size());
  IntMatrix m = IntMatrix::Zero(rows, cols);
  for (Index p = 0; p < rows; ++p)
    for (const auto& [e, c] : values[static_cast<std::size_t>(p)].terms()) {
      auto pos = basis.position(e);
      if (!pos) throw std::logic_error("product support leaves the truncation");
      if (reps[*pos] == e) m(p, static_cast<Index>(*pos)) = c;
    }

  const auto h = hnf(m);
  if (h.rank < rows) {
    const IntVector c = h.U.row(h.rank).transpose();
    IntVector positive = c.unaryExpr([](const Integer& x) { return x > 0 ? x : Integer(0); });
    std::string text;
    for (Index i = 0; i < rows; ++i) {
      if (c(i) == 0) continue;
      if (!text.empty()) text += " + ";
      text += to_string(c(i)) + "*" + label_to_string(cert.products[static_cast<std::size_t>(i)]);
    }
    result.failure = DecompositionFailure{DecompositionFailure::Kind::kRelation,
                                          "Z-relation among products: " + text + " = 0",
                                          combination(values, positive, g.rank())};
    return result;
  }

  const IntMatrix span = h.H.topRows(h.rank);
  if (h.rank > 0) {
    const auto s = snf(span);
    for (Index i = 0; i < h.rank; ++i) {
      if (s.S(i, i) == 1) continue;
      const IntMatrix vinv = inverse_unimodular(s.V);
      LaurentElement w(g.rank());
      for (Index t = 0; t < cols; ++t)
        if (vinv(i, t) != 0) w += basis.sum(static_cast<std::size_t>(t)) * vinv(i, t);
      result.failure = DecompositionFailure{
          DecompositionFailure::Kind::kTorsion,
          "span is not saturated: invariant factor " + to_string(s.S(i, i)) + " in the cokernel", std::move(w)};
      return result;
    }
  }

  std::vector<Index> pivots;
  for (Index k = 0; k < h.rank; ++k) {
    Index p = 0;
    while (span(k, p) == 0) ++p;
    pivots.push_back(p);
  }
  for (Index t = 0; t < cols; ++t) {
    if (basis.orbit_norm(static_cast<std::size_t>(t)) > cert.interior_bound) continue;
    IntVector v = IntVector::Zero(cols);
    v(t) = 1;
    IntVector q = IntVector::Zero(h.rank);
    bool ok = true;
    for (Index k = 0; k < h.rank && ok; ++k) {
      const Index p = pivots[static_cast<std::size_t>(k)];
      for (Index c = 0; c < p && ok; ++c) ok = v(c) == 0;
      if (!ok || v(p) == 0) continue;
      if (v(p) % span(k, p) != 0) {
        ok = false;
        break;
      }
      q(k) = v(p) / span(k, p);
      v -= q(k) * span.row(k).transpose();
    }
    ok = ok && v.isZero();
    if (!ok) {
      result.failure = DecompositionFailure{
          DecompositionFailure::Kind::kUnreachable,
          "orbit sum of " + LaurentElement::monomial(reps[static_cast<std::size_t>(t)]).to_string() +
              " is not in the span of the products",
          basis.sum(static_cast<std::size_t>(t))};
      return result;
    }
    const IntVector coeffs = (q.transpose() * h.U.topRows(h.rank)).transpose();
    OrbitExpression expr{reps[static_cast<std::size_t>(t)], {}};
    for (Index i = 0; i < rows; ++i)
      if (coeffs(i) != 0) expr.coefficients.emplace_back(static_cast<std::size_t>(i), coeffs(i));
    cert.expressions.push_back(std::move(expr));
  }
  result.holds = true;
  return result;
}

DecompositionCertificate require_free_decomposition(const GroupPtr& group,
                                                    const std::vector<LaurentElement>& algebra_gens,
                                                    const std::vector<LaurentElement>& module_gens,
                                                    std::int64_t bound) {
  auto r = verify_free_decomposition(group, algebra_gens, module_gens, bound);
  if (!r.holds)
    throw DecompositionFails(to_string(r.failure->kind) + ": " + r.failure->description + "; witness " +
                             r.failure->witness.to_string());
  return std::move(r.certificate);
}

int homogeneous_degree(const LaurentElement& a) {
  if (a.is_zero()) throw std::invalid_argument("zero has no degree");
  std::optional<std::int64_t> degree;
  for (const auto& [e, c] : a.terms()) {
    std::int64_t d = 0;
    for (auto x : e) {
      if (x < 0) throw std::invalid_argument(a.to_string() + " is not a polynomial");
      d += x;
    }
    if (degree && *degree != d) throw std::invalid_argument(a.to_string() + " is not homogeneous");
    degree = d;
  }
  return static_cast<int>(*degree);
}

std::vector<GradedSlice> graded_slices(const GroupPtr& group, const std::vector<LaurentElement>& algebra_gens,
                                       const std::vector<LaurentElement>& module_gens, int max_degree) {
  const FiniteMatrixGroup& g = *group;
  const Index n = g.rank();
  for (const auto& x : g.lattice().generators) {
    for (Index c = 0; c < n; ++c) {
      Index ones = 0;
      for (Index r = 0; r < n; ++r) {
        if (x(r, c) == 1) ++ones;
        else if (x(r, c) != 0) throw std::invalid_argument("graded slices need a permutation action");
      }
      if (ones != 1) throw std::invalid_argument("graded slices need a permutation action");
    }
  }
  require_invariant(g, algebra_gens, "algebra_gens");
  require_invariant(g, module_gens, "module_gens");
  std::vector<int> adeg, mdeg;
  for (const auto& a : algebra_gens) {
    adeg.push_back(homogeneous_degree(a));
    if (adeg.back() == 0) throw std::invalid_argument("algebra generator of degree 0");
  }
  for (const auto& m : module_gens) mdeg.push_back(homogeneous_degree(m));

  std::vector<GradedSlice> out;
  for (int k = 0; k <= max_degree; ++k) {
    // Orbit representatives of degree-k monomials.
    std::map<Exponent, std::size_t> column;
    std::size_t orbits = 0;
    Exponent e(static_cast<std::size_t>(n), 0);
    std::function<void(std::size_t, int)> monomials = [&](std::size_t i, int left) {
      if (i + 1 == e.size()) {
        e[i] = left;
        if (!column.count(e)) {
          for (const auto& x : orbit(g, e)) column.emplace(x, orbits);
          ++orbits;
        }
        return;
      }
      for (int a = 0; a <= left; ++a) {
        e[i] = a;
        monomials(i + 1, left - a);
      }
    };
    if (n > 0) monomials(0, k);
    else if (k == 0) orbits = 1;

    std::vector<LaurentElement> products;
    for (std::size_t j = 0; j < module_gens.size(); ++j) {
      if (mdeg[j] > k) continue;
      std::function<void(std::size_t, int, const LaurentElement&)> extend = [&](std::size_t i, int left,
                                                                              const LaurentElement& acc) {
        if (i == algebra_gens.size()) {
          if (left == 0) products.push_back(acc);
          return;
        }
        LaurentElement cur = acc;
        for (int used = 0; used <= left; used += adeg[i]) {
          extend(i + 1, left - used, cur);
          cur = multiply(cur, algebra_gens[i]);
        }
      };
      extend(0, k - mdeg[j], module_gens[j]);
    }

    IntMatrix m = IntMatrix::Zero(static_cast<Index>(products.size()), static_cast<Index>(orbits));
    std::vector<bool> filled(orbits);
    for (std::size_t p = 0; p < products.size(); ++p) {
      std::fill(filled.begin(), filled.end(), false);
      for (const auto& [x, c] : products[p].terms()) {
        const std::size_t col = column.at(x);
        if (filled[col]) continue;
        filled[col] = true;
        m(static_cast<Index>(p), static_cast<Index>(col)) = c;
      }
    }
    GradedSlice slice;
    slice.degree = k;
    slice.product_count = products.size();
    slice.invariant_rank = orbits;
    const auto h = hnf(m);
    slice.span_rank = h.rank;
    slice.saturated = true;
    if (h.rank > 0) {
      const auto s = snf(IntMatrix(h.H.topRows(h.rank)));
      for (Index i = 0; i < h.rank; ++i) slice.saturated = slice.saturated && s.S(i, i) == 1;
    }
    out.push_back(slice);
  }
  return out;
}

}  // namespace multinv
