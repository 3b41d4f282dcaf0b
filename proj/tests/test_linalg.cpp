#include <random>

#include <gtest/gtest.h>

#include "multinv/linalg.hpp"

using namespace multinv;

namespace {

IntMatrix random_matrix(std::mt19937& rng, Index max_dim = 6, int range = 5) {
  std::uniform_int_distribution<Index> dim(1, max_dim);
  std::uniform_int_distribution<int> entry(-range, range);
  IntMatrix a(dim(rng), dim(rng));
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) a(i, j) = entry(rng);
  return a;
}

bool is_unimodular(const IntMatrix& u) { return abs_value(determinant(u)) == 1; }

bool is_row_hnf(const IntMatrix& h) {
  Index last_pivot = -1;
  bool zero_seen = false;
  for (Index r = 0; r < h.rows(); ++r) {
    Index p = 0;
    while (p < h.cols() && h(r, p) == 0) ++p;
    if (p == h.cols()) {
      zero_seen = true;
      continue;
    }
    if (zero_seen || p <= last_pivot || h(r, p) <= 0) return false;
    for (Index k = 0; k < r; ++k)
      if (h(k, p) < 0 || h(k, p) >= h(r, p)) return false;
    last_pivot = p;
  }
  return true;
}

}  // namespace

TEST(Hnf, IdentityIsFixed) {
  const auto d = hnf(IntMatrix::Identity(3, 3));
  EXPECT_EQ(d.H, IntMatrix::Identity(3, 3));
  EXPECT_EQ(d.U, IntMatrix::Identity(3, 3));
}

TEST(Hnf, EchelonInputUnchanged) {
  const IntMatrix a = int_matrix({{2, 0}, {0, 3}});
  const auto d = hnf(a);
  EXPECT_EQ(d.H, a);
  EXPECT_EQ(d.U, IntMatrix::Identity(2, 2));
}

TEST(Hnf, SwapsRows) {
  const auto d = hnf(int_matrix({{0, 1}, {1, 0}}));
  EXPECT_EQ(d.H, IntMatrix::Identity(2, 2));
  EXPECT_EQ(d.U, int_matrix({{0, 1}, {1, 0}}));
}

TEST(Snf, ZeroMatrix) {
  const auto s = snf(IntMatrix::Zero(2, 2));
  EXPECT_EQ(s.S, IntMatrix::Zero(2, 2));
}

TEST(Snf, CoprimeDiagonal) {
  const auto s = snf(int_matrix({{2, 0}, {0, 3}}));
  EXPECT_EQ(s.S, int_matrix({{1, 0}, {0, 6}}));
}

TEST(Snf, GcdLcm) {
  const auto s = snf(int_matrix({{4, 0}, {0, 6}}));
  EXPECT_EQ(s.S, int_matrix({{2, 0}, {0, 12}}));
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(IntMatrix::Zero(3, 3)), 0);
  EXPECT_EQ(rank(IntMatrix::Identity(4, 4)), 4);
  EXPECT_EQ(rank(int_matrix({{1, 2}, {2, 4}})), 1);
}

TEST(Kernel, Examples) {
  EXPECT_EQ(kernel_lattice(IntMatrix::Identity(2, 2)).rows(), 0);
  EXPECT_EQ(kernel_lattice(IntMatrix::Zero(1, 3)).rows(), 3);
  const IntMatrix k = kernel_lattice(int_matrix({{1, -1, 0}}));
  EXPECT_EQ(k, int_matrix({{1, 1, 0}, {0, 0, 1}}));
}

TEST(QuotientInvariants, Examples) {
  auto q = lattice_quotient_invariants(2, int_matrix({{2, 0}, {0, 3}}));
  EXPECT_EQ(q.free_rank, 0);
  EXPECT_EQ(q.invariant_factors, (std::vector<Integer>{1, 6}));
  q = lattice_quotient_invariants(3, IntMatrix(0, 3));
  EXPECT_EQ(q.free_rank, 3);
  EXPECT_TRUE(q.torsion().empty());
  q = lattice_quotient_invariants(2, int_matrix({{1, 0}}));
  EXPECT_EQ(q.free_rank, 1);
  EXPECT_TRUE(q.torsion().empty());
}

TEST(LinalgProperty, SmithContract) {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 1000; ++trial) {
    const IntMatrix a = random_matrix(rng);
    const auto s = snf(a);
    ASSERT_EQ(IntMatrix(s.U * a * s.V), s.S) << to_string(a);
    ASSERT_TRUE(is_unimodular(s.U));
    ASSERT_TRUE(is_unimodular(s.V));
    const Index d = std::min(a.rows(), a.cols());
    for (Index i = 0; i < s.S.rows(); ++i)
      for (Index j = 0; j < s.S.cols(); ++j)
        if (i != j) ASSERT_EQ(s.S(i, j), 0);
    for (Index i = 0; i < d; ++i) ASSERT_GE(s.S(i, i), 0);
    for (Index i = 0; i + 1 < d; ++i) {
      if (s.S(i, i) == 0) {
        ASSERT_EQ(s.S(i + 1, i + 1), 0);
      } else {
        ASSERT_EQ(s.S(i + 1, i + 1) % s.S(i, i), 0) << to_string(a);
      }
    }
  }
}

TEST(LinalgProperty, HermiteContract) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    const IntMatrix a = random_matrix(rng);
    const auto h = hnf(a);
    ASSERT_EQ(IntMatrix(h.U * a), h.H);
    ASSERT_TRUE(is_unimodular(h.U));
    ASSERT_TRUE(is_row_hnf(h.H)) << to_string(h.H);
    ASSERT_EQ(h.rank, rank(a));
  }
}

TEST(LinalgProperty, RankIdentities) {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int trial = 0; trial < 1000; ++trial) {
    const IntMatrix a = random_matrix(rng, 5, 3);
    IntMatrix b(a.cols(), std::uniform_int_distribution<Index>(1, 5)(rng));
    for (Index i = 0; i < b.rows(); ++i)
      for (Index j = 0; j < b.cols(); ++j) b(i, j) = entry(rng);
    const Index ra = rank(a);
    ASSERT_EQ(ra, rank(IntMatrix(a.transpose())));
    ASSERT_LE(rank(IntMatrix(a * b)), std::min(ra, rank(b)));
    const auto s = snf(a);
    Index nonzero = 0;
    for (Index i = 0; i < std::min(a.rows(), a.cols()); ++i) nonzero += s.S(i, i) != 0;
    ASSERT_EQ(ra, nonzero);
  }
}

TEST(LinalgProperty, KernelIsSaturatedComplement) {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> small(-3, 3);
  for (int trial = 0; trial < 1000; ++trial) {
    const IntMatrix a = random_matrix(rng, 4, 2);
    const IntMatrix k = kernel_lattice(a);
    ASSERT_EQ(k.rows() + rank(a), a.cols());
    if (k.rows() > 0) ASSERT_TRUE(IntMatrix(a * k.transpose()).isZero());
    if (k.rows() == 0) continue;
    // Saturation: the kernel basis has all invariant factors 1.
    const auto s = snf(k);
    for (Index i = 0; i < k.rows(); ++i) ASSERT_EQ(s.S(i, i), 1);
    // v primitive with g * v in the row span forces v in the row span.
    IntVector w = k.transpose() * IntVector(IntVector::NullaryExpr(k.rows(), [&](Index) { return Integer(small(rng)); }));
    if (w.isZero()) continue;
    Integer g = 0;
    for (Index i = 0; i < w.size(); ++i) g = gcd_value(g, w(i));
    const IntVector v = w / g;
    IntMatrix stacked(k.rows() + 1, k.cols());
    stacked << k, v.transpose();
    ASSERT_EQ(IntMatrix(hnf(stacked).H.topRows(k.rows())), k);
  }
}

TEST(Splitting, QuotientActionOfPermutation) {
  // Transposition on Z^3 with the fixed diagonal split off.
  const IntMatrix g = int_matrix({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
  const auto s = split_lattice(3, int_matrix({{1, 1, 1}}));
  EXPECT_EQ(s.sub_rank, 1);
  const IntMatrix q = s.quotient_action(g);
  EXPECT_EQ(q.rows(), 2);
  EXPECT_EQ(abs_value(determinant(q)), 1);
  EXPECT_EQ(IntMatrix(q * q), IntMatrix::Identity(2, 2));
  EXPECT_THROW(split_lattice(2, int_matrix({{2, 0}})), std::invalid_argument);
}
