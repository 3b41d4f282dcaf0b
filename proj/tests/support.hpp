#pragma once

// Independent oracles for the tests: plain int64 matrices, brute-force
// stabilizer scans and random unimodular matrices.

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "multinv/group.hpp"

namespace oracle {

using Mat = std::vector<std::vector<std::int64_t>>;
using Vec = std::vector<std::int64_t>;

inline Mat to_mat(const multinv::IntMatrix& m) {
  Mat out(static_cast<std::size_t>(m.rows()), Vec(static_cast<std::size_t>(m.cols())));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).convert_to<std::int64_t>();
  return out;
}

inline multinv::IntMatrix from_mat(const Mat& m) {
  multinv::IntMatrix out(static_cast<Eigen::Index>(m.size()), m.empty() ? 0 : static_cast<Eigen::Index>(m[0].size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) out(i, j) = m[i][j];
  return out;
}

inline Mat mul(const Mat& a, const Mat& b) {
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  Mat out(n, Vec(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t)
      for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][t] * b[t][j];
  return out;
}

inline Vec apply(const Mat& a, const Vec& v) {
  Vec out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
  return out;
}

inline Mat identity(std::size_t n) {
  Mat out(n, Vec(n, 0));
  for (std::size_t i = 0; i < n; ++i) out[i][i] = 1;
  return out;
}

/// Group elements by naive closure over int64 matrices.
inline std::vector<Mat> naive_closure(const multinv::GLattice& l) {
  std::set<Mat> seen{identity(static_cast<std::size_t>(l.rank))};
  std::vector<Mat> todo{identity(static_cast<std::size_t>(l.rank))};
  std::vector<Mat> gens;
  for (const auto& g : l.generators) gens.push_back(to_mat(g));
  while (!todo.empty()) {
    Mat x = todo.back();
    todo.pop_back();
    for (const auto& g : gens) {
      Mat y = mul(g, x);
      if (seen.insert(y).second) todo.push_back(y);
    }
  }
  return {seen.begin(), seen.end()};
}

using Mask = std::uint64_t;

/// Stabilizers {g : g m = m}, as bit masks over `elements` (at most 64), for
/// every m in [-bound, bound]^n.
inline std::set<Mask> stabilizer_census(const std::vector<Mat>& elements, std::size_t n, std::int64_t bound) {
  std::set<Mask> out;
  Vec m(n, -bound);
  while (true) {
    Mask stab = 0;
    for (std::size_t e = 0; e < elements.size(); ++e) {
      const Mat& g = elements[e];
      bool fixed = true;
      for (std::size_t i = 0; i < n && fixed; ++i) {
        std::int64_t acc = 0;
        for (std::size_t j = 0; j < n; ++j) acc += g[i][j] * m[j];
        fixed = acc == m[i];
      }
      if (fixed) stab |= Mask{1} << e;
    }
    out.insert(stab);
    std::size_t i = n;
    while (i > 0 && m[i - 1] == bound) m[--i] = -bound;
    if (i == 0) break;
    ++m[i - 1];
  }
  return out;
}

/// Smallest mask among the conjugates x H x^{-1}.
inline Mask canonical_conjugate(const std::vector<Mat>& elements, Mask h) {
  std::map<Mat, std::size_t> index;
  for (std::size_t i = 0; i < elements.size(); ++i) index[elements[i]] = i;
  Mask best = ~Mask{0};
  for (const auto& x : elements) {
    // x^{-1} is the element y with x y = 1.
    const Mat* inv = nullptr;
    for (const auto& y : elements)
      if (mul(x, y) == identity(x.size())) inv = &y;
    Mask c = 0;
    for (std::size_t e = 0; e < elements.size(); ++e)
      if (h >> e & 1) c |= Mask{1} << index.at(mul(mul(x, elements[e]), *inv));
    best = std::min(best, c);
  }
  return best;
}

struct Unimodular {
  Mat t, inverse;
};

/// Product of random elementary matrices, with its inverse.
inline Unimodular random_unimodular(std::mt19937& rng, std::size_t n, int steps = 6) {
  Unimodular u{identity(n), identity(n)};
  if (n == 0) return u;
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> coeff(-2, 2);
  for (int s = 0; s < steps; ++s) {
    std::size_t i = pick(rng), j = pick(rng);
    if (i == j) {
      for (auto& x : u.t[i]) x = -x;
      for (auto& row : u.inverse) row[i] = -row[i];
      continue;
    }
    const int c = coeff(rng);
    for (std::size_t k = 0; k < n; ++k) u.t[i][k] += c * u.t[j][k];
    for (std::size_t k = 0; k < n; ++k) u.inverse[k][j] -= c * u.inverse[k][i];
  }
  return u;
}

/// T g T^{-1} for every generator.
inline multinv::GLattice conjugate_lattice(const multinv::GLattice& l, const Unimodular& u) {
  multinv::GLattice out{l.rank, {}, l.name};
  for (const auto& g : l.generators) out.generators.push_back(from_mat(mul(mul(u.t, to_mat(g)), u.inverse)));
  return out;
}

/// Order histogram of SL(2, F_5) by enumerating all 2x2 matrices over F_5.
inline std::map<std::size_t, std::size_t> sl2_f5_histogram() {
  std::map<std::size_t, std::size_t> out;
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b)
      for (int c = 0; c < 5; ++c)
        for (int d = 0; d < 5; ++d) {
          if (((a * d - b * c) % 5 + 5) % 5 != 1) continue;
          int x = a, y = b, z = c, w = d;
          std::size_t k = 1;
          while (!(x == 1 && y == 0 && z == 0 && w == 1)) {
            const int nx = (x * a + y * c) % 5, ny = (x * b + y * d) % 5;
            const int nz = (z * a + w * c) % 5, nw = (z * b + w * d) % 5;
            x = nx, y = ny, z = nz, w = nw;
            ++k;
          }
          ++out[k];
        }
  return out;
}

inline std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace oracle
