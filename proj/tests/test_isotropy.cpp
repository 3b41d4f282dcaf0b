#include <random>

#include <gtest/gtest.h>

#include "multinv/catalog.hpp"
#include "multinv/errors.hpp"
#include "multinv/isotropy.hpp"
#include "multinv/linalg.hpp"
#include "multinv/reflection.hpp"
#include "support.hpp"

using namespace multinv;

namespace {

ElementIndex find(const GroupPtr& g, const IntMatrix& m) { return *g->index_of(m); }

const IntMatrix kT12 = int_matrix({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});

oracle::Mask mask_of(const Subgroup& h, const std::vector<oracle::Mat>& elements) {
  oracle::Mask m = 0;
  for (std::size_t e = 0; e < elements.size(); ++e)
    if (h.contains(*h.group().index_of(oracle::from_mat(elements[e])))) m |= oracle::Mask{1} << e;
  return m;
}

}  // namespace

TEST(FixedLattice, Examples) {
  const auto s3 = close(sym_lattice(3));
  EXPECT_EQ(fixed_lattice(trivial_subgroup(s3)), IntMatrix::Identity(3, 3));
  const Subgroup t = subgroup_generated(s3, std::vector<ElementIndex>{find(s3, kT12)});
  EXPECT_EQ(fixed_lattice(t), int_matrix({{1, 1, 0}, {0, 0, 1}}));
  const auto minus = close(GLattice{2, {-IntMatrix::Identity(2, 2)}, ""});
  EXPECT_EQ(fixed_lattice(whole_group(minus)).rows(), 0);
}

TEST(IsotropyGroupOf, Examples) {
  const auto s3 = close(sym_lattice(3));
  EXPECT_TRUE(isotropy_group_of(s3, int_vector({0, 0, 0})).is_whole());
  const Subgroup t = subgroup_generated(s3, std::vector<ElementIndex>{find(s3, kT12)});
  EXPECT_EQ(isotropy_group_of(s3, int_vector({1, 1, 0})), t);
  EXPECT_TRUE(isotropy_group_of(s3, int_vector({1, 2, 3})).is_trivial());
}

TEST(Catalog, Examples) {
  const auto minus = close(GLattice{2, {-IntMatrix::Identity(2, 2)}, ""});
  auto c = enumerate_isotropy_groups(minus);
  ASSERT_EQ(c.classes.size(), 2u);
  EXPECT_TRUE(c.classes[0].group.is_whole());
  EXPECT_TRUE(c.classes[0].witness.isZero());
  EXPECT_TRUE(c.classes[1].group.is_trivial());

  const auto s3 = close(sym_lattice(3));
  c = enumerate_isotropy_groups(s3);
  ASSERT_EQ(c.classes.size(), 3u);
  EXPECT_EQ(c.classes[0].group.order(), 6u);
  EXPECT_EQ(c.classes[1].group.order(), 2u);
  EXPECT_EQ(c.classes[2].group.order(), 1u);

  const auto ico = close(builtin("icosian"));
  c = enumerate_isotropy_groups(ico);
  ASSERT_EQ(c.classes.size(), 2u);
  EXPECT_TRUE(c.classes[0].group.is_whole());
  EXPECT_TRUE(c.classes[1].group.is_trivial());
}

TEST(Witness, Examples) {
  const auto s3 = close(sym_lattice(3));
  EXPECT_TRUE(witness_vector(whole_group(s3)).isZero());
  const Subgroup t = subgroup_generated(s3, std::vector<ElementIndex>{find(s3, kT12)});
  const IntVector w = witness_vector(t);
  EXPECT_EQ(w(0), w(1));
  EXPECT_NE(w(0), w(2));
  EXPECT_EQ(isotropy_group_of(s3, w), t);
  EXPECT_EQ(witness_vector(trivial_subgroup(s3)), int_vector({0, 1, 2}));
  // A 3-cycle subgroup fixes only the diagonal, whose stabilizer is S3.
  const Subgroup c = subgroup_generated(s3, std::vector<ElementIndex>{find(s3, int_matrix({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}))});
  EXPECT_THROW(witness_vector(c), NotIsotropy);
}

TEST(MinimalIsotropy, Examples) {
  const auto s3 = close(sym_lattice(3));
  auto m = minimal_nontrivial_isotropy(s3);
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m[0].group.order(), 2u);
  EXPECT_TRUE(m[0].quotient_fixed_point_free);
  const auto minus = close(GLattice{2, {-IntMatrix::Identity(2, 2)}, ""});
  m = minimal_nontrivial_isotropy(minus);
  ASSERT_EQ(m.size(), 1u);
  EXPECT_TRUE(m[0].group.is_whole());
  EXPECT_TRUE(minimal_nontrivial_isotropy(close(GLattice{2, {}, ""})).empty());
}

TEST(FixedPointFree, Examples) {
  EXPECT_TRUE(is_fixed_point_free(*close(GLattice{2, {-IntMatrix::Identity(2, 2)}, ""})));
  EXPECT_FALSE(is_fixed_point_free(*close(sym_lattice(3))));
  const auto ico = close(builtin("icosian"));
  EXPECT_TRUE(is_fixed_point_free(*ico));
  // Independent route: det(g - I) != 0 for every g != 1.
  for (ElementIndex i = 0; i < ico->order(); ++i) {
    if (i == ico->identity()) continue;
    EXPECT_NE(determinant(IntMatrix(ico->element(i) - IntMatrix::Identity(8, 8))), 0);
  }
}

TEST(BinaryIcosahedral, Recognition) {
  const auto oracle_hist = oracle::sl2_f5_histogram();
  EXPECT_EQ(sl2_f5_order_histogram(), OrderHistogram(oracle_hist.begin(), oracle_hist.end()));
  EXPECT_FALSE(recognize_binary_icosahedral(whole_group(close(sym_lattice(5)))));
  EXPECT_FALSE(recognize_binary_icosahedral(whole_group(close(sym_lattice(3)))));
  EXPECT_TRUE(recognize_binary_icosahedral(whole_group(close(builtin("icosian")))));
}

TEST(FpfConstraints, Examples) {
  const auto ico = check_fpf_constraints(close(builtin("icosian")));
  EXPECT_TRUE(ico.perfect_fpf_applicable);
  EXPECT_TRUE(ico.binary_icosahedral);
  EXPECT_TRUE(ico.rank_multiple_of_8);
  EXPECT_TRUE(ico.rank_bound_applicable);
  ASSERT_TRUE(ico.min_quotient_rank.has_value());
  EXPECT_GE(*ico.min_quotient_rank, 8);
  const auto minus = check_fpf_constraints(close(GLattice{2, {-IntMatrix::Identity(2, 2)}, ""}));
  EXPECT_FALSE(minus.perfect_fpf_applicable);
  const auto s3 = check_fpf_constraints(close(sym_lattice(3)));
  EXPECT_FALSE(s3.perfect_fpf_applicable);
  EXPECT_FALSE(s3.rank_bound_applicable);
}

TEST(IsotropyProperty, CatalogMatchesBruteForceCensus) {
  for (const auto& name : builtin_names()) {
    const GLattice l = builtin(name);
    const auto g = close(l);
    if (l.rank > 4 || g->order() > 48) continue;
    const auto elements = oracle::naive_closure(l);
    const auto census = oracle::stabilizer_census(elements, static_cast<std::size_t>(l.rank),
                                                  static_cast<std::int64_t>(g->order()));
    std::set<oracle::Mask> expected;
    for (auto m : census) expected.insert(oracle::canonical_conjugate(elements, m));
    std::set<oracle::Mask> actual;
    const auto catalog = enumerate_isotropy_groups(g);
    for (const auto& c : catalog.classes) {
      ASSERT_EQ(isotropy_group_of(g, c.witness), c.group) << name;
      actual.insert(oracle::canonical_conjugate(elements, mask_of(c.group, elements)));
    }
    EXPECT_EQ(actual.size(), catalog.classes.size()) << name << ": duplicate conjugacy classes";
    EXPECT_EQ(actual, expected) << name;
  }
}

TEST(IsotropyProperty, IntersectionsAndEquivariance) {
  std::mt19937 rng(4242);
  int cases = 0;
  for (const auto& name : builtin_names()) {
    const auto g = close(builtin(name));
    const auto catalog = enumerate_isotropy_groups(g);
    for (const auto& a : catalog.classes)
      for (const auto& b : catalog.classes)
        ASSERT_NE(catalog.find_conjugate(intersect_subgroups(a.group, b.group)), nullptr) << name;
    std::uniform_int_distribution<ElementIndex> pick(0, static_cast<ElementIndex>(g->order() - 1));
    std::uniform_int_distribution<int> entry(-3, 3);
    for (int trial = 0; trial < 80; ++trial) {
      IntVector m(g->rank());
      for (Index i = 0; i < m.size(); ++i) m(i) = entry(rng);
      const ElementIndex x = pick(rng);
      const Subgroup h = isotropy_group_of(g, m);
      const IntVector xm = g->element(x) * m;
      ASSERT_EQ(isotropy_group_of(g, xm), conjugate(h, x));
      // m lies in L^{G_m}.
      const IntMatrix f = fixed_lattice(h);
      IntMatrix stacked(f.rows() + 1, f.cols());
      stacked << f, m.transpose();
      ASSERT_EQ(rank(stacked), f.rows());
      ASSERT_NE(catalog.find_conjugate(h), nullptr);
      ++cases;
    }
  }
  EXPECT_GE(cases, 1000);
}

TEST(IsotropyProperty, MinimalIsotropyActsFreelyOnQuotient) {
  for (const auto& name : builtin_names()) {
    const auto g = close(builtin(name));
    for (const auto& m : minimal_nontrivial_isotropy(g)) {
      EXPECT_TRUE(m.quotient_fixed_point_free) << name;
      const auto split = split_lattice(g->rank(), fixed_lattice(m.group));
      for (ElementIndex e : m.group.members()) {
        if (e == g->identity()) continue;
        const IntMatrix q = split.quotient_action(g->element(e));
        EXPECT_NE(determinant(IntMatrix(q - IntMatrix::Identity(q.rows(), q.cols()))), 0) << name;
      }
    }
  }
}
