#include "multinv/laurent.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "multinv/errors.hpp"

namespace multinv {

namespace {

using SmallMatrix = std::vector<std::int64_t>;  // row-major

SmallMatrix small_matrix(const IntMatrix& g) {
  SmallMatrix out(static_cast<std::size_t>(g.size()));
  for (Index i = 0; i < g.rows(); ++i)
    for (Index j = 0; j < g.cols(); ++j) {
      auto v = to_int64(g(i, j));
      if (!v) throw std::overflow_error("matrix entry does not fit in 64 bits");
      out[static_cast<std::size_t>(i * g.cols() + j)] = *v;
    }
  return out;
}

Exponent apply_small(const SmallMatrix& g, const Exponent& m) {
  const std::size_t n = m.size();
  Exponent out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    __int128 acc = 0;
    for (std::size_t j = 0; j < n; ++j) acc += static_cast<__int128>(g[i * n + j]) * m[j];
    out[i] = static_cast<std::int64_t>(acc);
  }
  return out;
}

std::vector<SmallMatrix> small_elements(const FiniteMatrixGroup& g) {
  std::vector<SmallMatrix> out;
  out.reserve(g.order());
  for (const auto& e : g.elements()) out.push_back(small_matrix(e));
  return out;
}

std::vector<Exponent> orbit_small(const std::vector<SmallMatrix>& elements, const Exponent& m) {
  std::vector<Exponent> out;
  out.reserve(elements.size());
  for (const auto& e : elements) out.push_back(apply_small(e, m));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::int64_t norm(const Exponent& m) {
  std::int64_t s = 0;
  for (auto v : m) s = std::max(s, v < 0 ? -v : v);
  return s;
}

void check_rank(const LaurentElement& a, const LaurentElement& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("Laurent elements of different rank");
}

}  // namespace

LaurentElement LaurentElement::constant(Index rank, const Integer& c) {
  LaurentElement out(rank);
  out.add_term(Exponent(static_cast<std::size_t>(rank), 0), c);
  return out;
}

LaurentElement LaurentElement::monomial(const Exponent& e, const Integer& c) {
  LaurentElement out(static_cast<Index>(e.size()));
  out.add_term(e, c);
  return out;
}

LaurentElement LaurentElement::variable(Index rank, Index i) {
  Exponent e(static_cast<std::size_t>(rank), 0);
  e.at(static_cast<std::size_t>(i)) = 1;
  return monomial(e);
}

Integer LaurentElement::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

void LaurentElement::add_term(const Exponent& e, const Integer& c) {
  if (static_cast<Index>(e.size()) != rank_) throw std::invalid_argument("exponent has wrong length");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentElement& LaurentElement::operator+=(const LaurentElement& other) {
  check_rank(*this, other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentElement& LaurentElement::operator-=(const LaurentElement& other) {
  check_rank(*this, other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentElement& LaurentElement::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

LaurentElement LaurentElement::apply(const IntMatrix& g) const {
  if (g.rows() != rank_ || g.cols() != rank_) throw std::invalid_argument("matrix size does not match rank");
  const SmallMatrix s = small_matrix(g);
  LaurentElement out(rank_);
  for (const auto& [e, c] : terms_) out.add_term(apply_small(s, e), c);
  return out;
}

std::int64_t LaurentElement::sup_norm() const {
  std::int64_t s = 0;
  for (const auto& [e, c] : terms_) s = std::max(s, norm(e));
  return s;
}

LaurentElement LaurentElement::divide_exact(const Integer& d) const {
  if (d == 0) throw std::domain_error("division by zero");
  LaurentElement out(rank_);
  for (const auto& [e, c] : terms_) {
    if (c % d != 0) throw std::domain_error("coefficient " + multinv::to_string(c) + " not divisible");
    out.terms_.emplace(e, c / d);
  }
  return out;
}

std::string LaurentElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    const Integer a = negative ? Integer(-c) : c;
    if (first) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    first = false;
    if (a != 1) s += multinv::to_string(a) + "*";
    s += "x^(";
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(e[i]);
    }
    s += ")";
  }
  return s;
}

LaurentElement operator+(LaurentElement a, const LaurentElement& b) { return a += b; }
LaurentElement operator-(LaurentElement a, const LaurentElement& b) { return a -= b; }
LaurentElement operator*(LaurentElement a, const Integer& c) { return a *= c; }

LaurentElement multiply(const LaurentElement& a, const LaurentElement& b) {
  check_rank(a, b);
  LaurentElement out(a.rank());
  Exponent e(static_cast<std::size_t>(a.rank()));
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

LaurentElement operator*(const LaurentElement& a, const LaurentElement& b) { return multiply(a, b); }

LaurentElement power(const LaurentElement& a, unsigned k) {
  LaurentElement out = LaurentElement::constant(a.rank(), 1);
  for (unsigned i = 0; i < k; ++i) out = multiply(out, a);
  return out;
}

Exponent apply_to_exponent(const IntMatrix& g, const Exponent& m) {
  if (g.rows() != static_cast<Index>(m.size()) || g.cols() != g.rows())
    throw std::invalid_argument("matrix size does not match exponent");
  return apply_small(small_matrix(g), m);
}

std::vector<Exponent> orbit(const FiniteMatrixGroup& g, const Exponent& m) {
  return orbit_small(small_elements(g), m);
}

Exponent orbit_representative(const FiniteMatrixGroup& g, const Exponent& m) { return orbit(g, m).front(); }

LaurentElement orbit_sum(const FiniteMatrixGroup& g, const Exponent& m) {
  LaurentElement out(g.rank());
  for (const auto& e : orbit(g, m)) out.add_term(e, 1);
  return out;
}

bool is_invariant(const GLattice& lattice, const LaurentElement& a) {
  for (const auto& g : lattice.generators)
    if (!(a.apply(g) == a)) return false;
  return true;
}

bool is_invariant(const FiniteMatrixGroup& g, const LaurentElement& a) { return is_invariant(g.lattice(), a); }

std::map<Exponent, Integer> express_in_orbit_basis(const FiniteMatrixGroup& g, const LaurentElement& a) {
  if (a.rank() != g.rank()) throw std::invalid_argument("element rank does not match the lattice");
  if (!is_invariant(g, a)) throw NotInvariant("element " + a.to_string() + " is not invariant");
  const auto elements = small_elements(g);
  std::map<Exponent, Integer> out;
  std::set<Exponent> seen;
  for (const auto& [e, c] : a.terms()) {
    if (seen.count(e)) continue;
    auto orb = orbit_small(elements, e);
    seen.insert(orb.begin(), orb.end());
    out.emplace(orb.front(), c);
  }
  return out;
}

OrbitBasis::OrbitBasis(GroupPtr group, std::int64_t bound) : group_(std::move(group)), bound_(bound) {
  if (bound < 0) throw std::invalid_argument("bound must be nonnegative");
  const auto elements = small_elements(*group_);
  const std::size_t n = static_cast<std::size_t>(group_->rank());
  struct Entry {
    std::int64_t norm;
    std::vector<Exponent> members;
  };
  std::vector<Entry> entries;
  std::set<Exponent> seen;
  Exponent m(n, -bound);
  while (true) {
    if (!seen.count(m)) {
      auto orb = orbit_small(elements, m);
      seen.insert(orb.begin(), orb.end());
      std::int64_t s = 0;
      for (const auto& e : orb) s = std::max(s, norm(e));
      if (s <= bound) entries.push_back({s, std::move(orb)});
    }
    std::size_t i = n;
    while (i > 0 && m[i - 1] == bound) m[--i] = -bound;
    if (i == 0) break;
    ++m[i - 1];
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.norm != b.norm) return a.norm < b.norm;
    return a.members.front() < b.members.front();
  });
  for (auto& e : entries) {
    const std::size_t pos = representatives_.size();
    representatives_.push_back(e.members.front());
    norms_.push_back(e.norm);
    for (const auto& x : e.members) lookup_.emplace(x, pos);
    orbits_.push_back(std::move(e.members));
  }
}

LaurentElement OrbitBasis::sum(std::size_t i) const {
  LaurentElement out(group_->rank());
  for (const auto& e : orbits_.at(i)) out.add_term(e, 1);
  return out;
}

std::optional<std::size_t> OrbitBasis::position(const Exponent& m) const {
  auto it = lookup_.find(m);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

LaurentElement vandermonde(Index n) {
  LaurentElement out = LaurentElement::constant(n, 1);
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      out = multiply(out, LaurentElement::variable(n, i) - LaurentElement::variable(n, j));
  return out;
}

LaurentElement vandermonde_plus(Index n) {
  LaurentElement out = LaurentElement::constant(n, 1);
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      out = multiply(out, LaurentElement::variable(n, i) + LaurentElement::variable(n, j));
  return out;
}

LaurentElement alternating_d(Index n) {
  if (n < 2) throw std::invalid_argument("alternating_d needs n >= 2");
  const LaurentElement sum = vandermonde(n) + vandermonde_plus(n);
  for (const auto& [e, c] : sum.terms())
    if (c % 2 != 0) throw ParityViolation("Delta + Delta_+ has odd coefficient at " + LaurentElement::monomial(e).to_string());
  return sum.divide_exact(2);
}

LaurentElement elementary_symmetric(Index n, Index k) {
  if (k < 0 || k > n) throw std::invalid_argument("degree out of range");
  LaurentElement out(n);
  std::vector<bool> pick(static_cast<std::size_t>(n), false);
  std::fill(pick.begin(), pick.begin() + k, true);
  do {
    Exponent e(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < pick.size(); ++i) e[i] = pick[i] ? 1 : 0;
    out.add_term(e, 1);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

}  // namespace multinv
