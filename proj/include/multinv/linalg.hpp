#pragma once

// Exact integer linear algebra: Hermite and Smith normal forms, ranks,
// kernels, quotient structure and lattice splittings.  Everything is
// templated on the scalar; the library instantiates it with Integer.

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "multinv/errors.hpp"
#include "multinv/integer.hpp"

namespace multinv {

template <typename Scalar>
struct HermiteDecomposition {
  Matrix<Scalar> H;  // row Hermite normal form of the input
  Matrix<Scalar> U;  // unimodular, U * A = H
  Index rank = 0;    // number of nonzero rows of H
};

template <typename Scalar>
struct SmithDecomposition {
  Matrix<Scalar> U;  // unimodular, rows x rows
  Matrix<Scalar> S;  // diagonal, d_i | d_{i+1}, d_i >= 0
  Matrix<Scalar> V;  // unimodular, cols x cols

  std::vector<Scalar> diagonal() const {
    std::vector<Scalar> d;
    for (Index i = 0; i < std::min(S.rows(), S.cols()); ++i) d.push_back(S(i, i));
    return d;
  }
};

namespace detail {

// rows (r, i) <- [[s, t], [-b, a]] * rows (r, i); the 2x2 matrix has det 1.
template <typename Scalar>
void combine_rows(Matrix<Scalar>& m, Index r, Index i, const Scalar& s, const Scalar& t,
                  const Scalar& a, const Scalar& b) {
  for (Index c = 0; c < m.cols(); ++c) {
    Scalar top = s * m(r, c) + t * m(i, c);
    Scalar bottom = a * m(i, c) - b * m(r, c);
    m(r, c) = std::move(top);
    m(i, c) = std::move(bottom);
  }
}

template <typename Scalar>
void combine_cols(Matrix<Scalar>& m, Index r, Index i, const Scalar& s, const Scalar& t,
                  const Scalar& a, const Scalar& b) {
  for (Index k = 0; k < m.rows(); ++k) {
    Scalar left = s * m(k, r) + t * m(k, i);
    Scalar right = a * m(k, i) - b * m(k, r);
    m(k, r) = std::move(left);
    m(k, i) = std::move(right);
  }
}

template <typename Scalar>
void add_row_multiple(Matrix<Scalar>& m, Index target, Index source, const Scalar& q) {
  if (q == 0) return;
  for (Index c = 0; c < m.cols(); ++c) m(target, c) += q * m(source, c);
}

template <typename Scalar>
void add_col_multiple(Matrix<Scalar>& m, Index target, Index source, const Scalar& q) {
  if (q == 0) return;
  for (Index k = 0; k < m.rows(); ++k) m(k, target) += q * m(k, source);
}

}  // namespace detail

/// Row Hermite normal form: echelon, positive pivots, entries above each
/// pivot reduced into [0, pivot).  Zero rows are moved to the bottom.
template <typename Derived>
HermiteDecomposition<typename Derived::Scalar> hnf(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  const Index rows = a.rows();
  const Index cols = a.cols();
  // Work on [A | I] so every row operation is recorded in the right block.
  Matrix<Scalar> w(rows, cols + rows);
  w.leftCols(cols) = a;
  w.rightCols(rows) = Matrix<Scalar>::Identity(rows, rows);

  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    for (Index i = r + 1; i < rows; ++i) {
      if (w(i, c) == 0) continue;
      if (w(r, c) == 0) {
        w.row(r).swap(w.row(i));
        continue;
      }
      auto eg = extended_gcd<Scalar>(w(r, c), w(i, c));
      Scalar ra = w(r, c) / eg.gcd;
      Scalar rb = w(i, c) / eg.gcd;
      detail::combine_rows<Scalar>(w, r, i, eg.s, eg.t, ra, rb);
    }
    if (w(r, c) == 0) continue;
    if (w(r, c) < 0) w.row(r) = -w.row(r);
    for (Index i = 0; i < r; ++i) {
      Scalar q = floor_div<Scalar>(w(i, c), w(r, c));
      detail::add_row_multiple<Scalar>(w, i, r, Scalar(-q));
    }
    ++r;
  }
  HermiteDecomposition<Scalar> out;
  out.H = w.leftCols(cols);
  out.U = w.rightCols(rows);
  out.rank = r;
  return out;
}

/// Smith normal form with smallest-entry pivoting.
template <typename Derived>
SmithDecomposition<typename Derived::Scalar> snf(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  const Index rows = a.rows();
  const Index cols = a.cols();
  SmithDecomposition<Scalar> out;
  out.S = a;
  out.U = Matrix<Scalar>::Identity(rows, rows);
  out.V = Matrix<Scalar>::Identity(cols, cols);
  auto& S = out.S;
  auto& U = out.U;
  auto& V = out.V;

  const Index diag = std::min(rows, cols);
  for (Index t = 0; t < diag; ++t) {
    while (true) {
      Index pi = -1, pj = -1;
      for (Index i = t; i < rows; ++i)
        for (Index j = t; j < cols; ++j)
          if (S(i, j) != 0 && (pi < 0 || abs_value<Scalar>(S(i, j)) < abs_value<Scalar>(S(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi < 0) return out;  // remaining block is zero
      if (pi != t) {
        S.row(t).swap(S.row(pi));
        U.row(t).swap(U.row(pi));
      }
      if (pj != t) {
        S.col(t).swap(S.col(pj));
        V.col(t).swap(V.col(pj));
      }

      bool clean = true;
      for (Index i = t + 1; i < rows; ++i) {
        if (S(i, t) == 0) continue;
        Scalar q = floor_div<Scalar>(S(i, t), S(t, t));
        detail::add_row_multiple<Scalar>(S, i, t, Scalar(-q));
        detail::add_row_multiple<Scalar>(U, i, t, Scalar(-q));
        if (S(i, t) != 0) clean = false;
      }
      for (Index j = t + 1; j < cols; ++j) {
        if (S(t, j) == 0) continue;
        Scalar q = floor_div<Scalar>(S(t, j), S(t, t));
        detail::add_col_multiple<Scalar>(S, j, t, Scalar(-q));
        detail::add_col_multiple<Scalar>(V, j, t, Scalar(-q));
        if (S(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      Index bad = -1;
      for (Index i = t + 1; i < rows && bad < 0; ++i)
        for (Index j = t + 1; j < cols; ++j)
          if (S(i, j) % S(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      detail::add_row_multiple<Scalar>(S, t, bad, Scalar(1));
      detail::add_row_multiple<Scalar>(U, t, bad, Scalar(1));
    }
    if (S(t, t) < 0) {
      S.row(t) = -S.row(t);
      U.row(t) = -U.row(t);
    }
  }
  return out;
}

/// Rank by fraction-free (Bareiss) elimination.
template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  Matrix<Scalar> m = a;
  const Index rows = m.rows();
  const Index cols = m.cols();
  Scalar prev = 1;
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index p = r;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) m.row(p).swap(m.row(r));
    for (Index i = r + 1; i < rows; ++i) {
      for (Index j = c + 1; j < cols; ++j) m(i, j) = (m(r, c) * m(i, j) - m(i, c) * m(r, j)) / prev;
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

/// Exact determinant by Bareiss elimination.
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  Matrix<Scalar> m = a;
  const Index n = m.rows();
  if (n == 0) return Scalar(1);
  Scalar prev = 1;
  bool negate = false;
  for (Index k = 0; k < n - 1; ++k) {
    if (m(k, k) == 0) {
      Index p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return Scalar(0);
      m.row(p).swap(m.row(k));
      negate = !negate;
    }
    for (Index i = k + 1; i < n; ++i)
      for (Index j = k + 1; j < n; ++j) m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  Scalar d = m(n - 1, n - 1);
  return negate ? Scalar(-d) : d;
}

/// Rows form the canonical (HNF) basis of {v : A v = 0}; always saturated.
template <typename Derived>
Matrix<typename Derived::Scalar> kernel_lattice(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  Matrix<Scalar> at = a.transpose();
  auto h = hnf(at);
  const Index k = a.cols() - h.rank;
  if (k == 0) return Matrix<Scalar>(0, a.cols());
  Matrix<Scalar> basis = h.U.bottomRows(k);
  return hnf(basis).H;
}

/// Canonical HNF basis (zero rows dropped) of the row span of A.
template <typename Derived>
Matrix<typename Derived::Scalar> row_basis(const Eigen::MatrixBase<Derived>& a) {
  auto h = hnf(a);
  return h.H.topRows(h.rank);
}

template <typename Scalar>
struct QuotientStructure {
  Index free_rank = 0;
  std::vector<Scalar> invariant_factors;  // nonzero Smith entries, including 1s

  std::vector<Scalar> torsion() const {
    std::vector<Scalar> t;
    for (const auto& d : invariant_factors)
      if (d != 1) t.push_back(d);
    return t;
  }
};

/// Structure of Z^ambient_rank / rowspan(sub_basis).
template <typename Derived>
QuotientStructure<typename Derived::Scalar> lattice_quotient_invariants(
    Index ambient_rank, const Eigen::MatrixBase<Derived>& sub_basis) {
  using Scalar = typename Derived::Scalar;
  if (sub_basis.rows() > 0 && sub_basis.cols() != ambient_rank)
    throw std::invalid_argument("sub-basis width does not match the ambient rank");
  QuotientStructure<Scalar> q;
  q.free_rank = ambient_rank;
  if (sub_basis.rows() == 0) return q;
  auto s = snf(sub_basis);
  for (const auto& d : s.diagonal()) {
    if (d == 0) continue;
    q.invariant_factors.push_back(d);
    --q.free_rank;
  }
  return q;
}

/// Inverse of a unimodular matrix (throws if |det| != 1).
template <typename Derived>
Matrix<typename Derived::Scalar> inverse_unimodular(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  auto h = hnf(a);
  if (a.rows() != a.cols() || h.rank != a.rows() || !h.H.isIdentity())
    throw ValidationError("matrix is not unimodular");
  return h.U;
}

/// A basis of Z^n (columns of `basis`) whose first `sub_rank` columns span a
/// given saturated sublattice.
template <typename Scalar>
struct LatticeSplitting {
  Matrix<Scalar> basis;    // n x n, columns
  Matrix<Scalar> inverse;  // basis^{-1}
  Index sub_rank = 0;

  Index ambient_rank() const { return basis.rows(); }
  Index quotient_rank() const { return basis.rows() - sub_rank; }

  /// Matrix of g on the quotient lattice in the complement coordinates.
  Matrix<Scalar> quotient_action(const Matrix<Scalar>& g) const {
    Matrix<Scalar> m = inverse * g * basis;
    const Index q = quotient_rank();
    if (!m.bottomLeftCorner(q, sub_rank).isZero())
      throw std::invalid_argument("matrix does not stabilize the sublattice");
    return m.bottomRightCorner(q, q);
  }

  /// Lift of quotient coordinates into the complement inside Z^n.
  Vector<Scalar> lift(const Vector<Scalar>& quotient_coordinates) const {
    return basis.rightCols(quotient_rank()) * quotient_coordinates;
  }
};

/// Completes the rows of a saturated sublattice basis to a basis of Z^n.
/// Throws std::invalid_argument if the rows do not span a saturated sublattice.
template <typename Derived>
LatticeSplitting<typename Derived::Scalar> split_lattice(Index ambient_rank,
                                                          const Eigen::MatrixBase<Derived>& sub_basis) {
  using Scalar = typename Derived::Scalar;
  LatticeSplitting<Scalar> out;
  if (sub_basis.rows() == 0) {
    out.basis = Matrix<Scalar>::Identity(ambient_rank, ambient_rank);
    out.inverse = out.basis;
    return out;
  }
  auto s = snf(sub_basis);
  Index k = 0;
  for (const auto& d : s.diagonal()) {
    if (d == 0) continue;
    if (d != 1) throw std::invalid_argument("sublattice is not saturated");
    ++k;
  }
  // U K V = [I 0], so the first k rows of V^{-1} span the rows of K.
  Matrix<Scalar> vinv = inverse_unimodular(s.V);
  out.basis = vinv.transpose();
  out.inverse = s.V.transpose();
  out.sub_rank = k;
  return out;
}

}  // namespace multinv
