#include <random>

#include <gtest/gtest.h>

#include "multinv/catalog.hpp"
#include "multinv/errors.hpp"
#include "multinv/group.hpp"
#include "multinv/isotropy.hpp"
#include "multinv/linalg.hpp"
#include "support.hpp"

using namespace multinv;

namespace {

ElementIndex find(const GroupPtr& g, const IntMatrix& m) {
  auto i = g->index_of(m);
  EXPECT_TRUE(i.has_value());
  return *i;
}

const IntMatrix kC4 = int_matrix({{0, 1, 0}, {-1, 0, 0}, {0, 0, -1}});
const IntMatrix kT12 = int_matrix({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
const IntMatrix kT13 = int_matrix({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
const IntMatrix kC123 = int_matrix({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});

GroupPtr s3() { return close(GLattice{3, {kT12, kC123}, "S3"}); }

}  // namespace

TEST(Close, Examples) {
  EXPECT_EQ(close(GLattice{3, {-IntMatrix::Identity(3, 3)}, ""})->order(), 2u);
  EXPECT_EQ(close(GLattice{3, {kC4}, ""})->order(), 4u);
  EXPECT_EQ(s3()->order(), 6u);
}

TEST(Close, RejectsInfiniteAndOversized) {
  EXPECT_THROW(close(GLattice{2, {int_matrix({{1, 1}, {0, 1}})}, ""}), CapExceeded);
  EXPECT_THROW(close(sym_lattice(5), 100), CapExceeded);
  EXPECT_THROW(close(GLattice{2, {int_matrix({{2, 0}, {0, 1}})}, ""}), ValidationError);
}

TEST(Close, ElementsSortedAndIndexed) {
  const auto g = close(builtin("signed_root_s5"));
  for (std::size_t i = 1; i < g->order(); ++i) EXPECT_TRUE(lex_less(g->element(i - 1), g->element(i)));
  for (std::size_t i = 0; i < g->order(); ++i) EXPECT_EQ(g->index_of(g->element(i)), static_cast<ElementIndex>(i));
  EXPECT_EQ(g->element(g->identity()), IntMatrix::Identity(4, 4));
}

TEST(Close, MatchesNaiveClosure) {
  for (const auto& name : builtin_names()) {
    const GLattice l = builtin(name);
    const auto g = close(l);
    const auto naive = oracle::naive_closure(l);
    ASSERT_EQ(g->order(), naive.size()) << name;
    for (const auto& m : naive) EXPECT_TRUE(g->index_of(oracle::from_mat(m)).has_value()) << name;
  }
}

TEST(Close, Idempotent) {
  const auto g = close(builtin("alt4_u4"));
  GLattice all{4, g->elements(), "again"};
  EXPECT_EQ(close(all)->elements(), g->elements());
}

TEST(SubgroupGenerated, Examples) {
  const auto g = s3();
  EXPECT_TRUE(subgroup_generated(g, std::vector<ElementIndex>{}).is_trivial());
  const ElementIndex c = find(g, kC123);
  EXPECT_EQ(subgroup_generated(g, std::vector<ElementIndex>{c}).order(), 3u);
  const auto c4 = close(GLattice{3, {kC4}, ""});
  const ElementIndex sq = find(c4, IntMatrix(kC4 * kC4));
  EXPECT_EQ(subgroup_generated(c4, std::vector<ElementIndex>{sq}).order(), 2u);
}

TEST(Intersect, Examples) {
  const auto g = s3();
  const Subgroup t = subgroup_generated(g, std::vector<ElementIndex>{find(g, kT12)});
  const Subgroup c = subgroup_generated(g, std::vector<ElementIndex>{find(g, kC123)});
  EXPECT_EQ(intersect_subgroups(t, t), t);
  EXPECT_TRUE(intersect_subgroups(t, trivial_subgroup(g)).is_trivial());
  EXPECT_TRUE(intersect_subgroups(t, c).is_trivial());
}

TEST(Commutator, Examples) {
  const auto c4 = close(GLattice{3, {kC4}, ""});
  EXPECT_TRUE(commutator_subgroup(whole_group(c4)).is_trivial());
  const auto g = s3();
  const Subgroup d = commutator_subgroup(whole_group(g));
  EXPECT_EQ(d.order(), 3u);
  EXPECT_TRUE(d.contains(find(g, kC123)));
  const auto ico = close(builtin("icosian"));
  EXPECT_TRUE(is_perfect(whole_group(ico)));
}

TEST(Abelianization, Examples) {
  const auto c4 = close(GLattice{3, {kC4}, ""});
  EXPECT_EQ(abelianization(whole_group(c4)), (std::vector<std::size_t>{4}));
  EXPECT_EQ(abelianization(whole_group(s3())), (std::vector<std::size_t>{2}));
  EXPECT_TRUE(abelianization(whole_group(close(builtin("icosian")))).empty());
  // Klein four group and Z/2 x Z/4.
  EXPECT_EQ(abelianization(whole_group(close(diag_sl(3)))), (std::vector<std::size_t>{2, 2}));
  const IntMatrix c4_plus_sign = int_matrix({{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}});
  const IntMatrix sign = int_matrix({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, 1}});
  EXPECT_EQ(abelianization(whole_group(close(GLattice{4, {c4_plus_sign, sign}, ""}))),
            (std::vector<std::size_t>{2, 4}));
}

TEST(Histogram, Examples) {
  EXPECT_EQ(element_order_histogram(*close(GLattice{2, {-IntMatrix::Identity(2, 2)}, ""})),
            (OrderHistogram{{1, 1}, {2, 1}}));
  EXPECT_EQ(element_order_histogram(*s3()), (OrderHistogram{{1, 1}, {2, 3}, {3, 2}}));
  const auto oracle_hist = oracle::sl2_f5_histogram();
  EXPECT_EQ(element_order_histogram(*close(builtin("icosian"))), OrderHistogram(oracle_hist.begin(), oracle_hist.end()));
}

TEST(Conjugacy, Examples) {
  const auto g = s3();
  const Subgroup t12 = subgroup_generated(g, std::vector<ElementIndex>{find(g, kT12)});
  const Subgroup t13 = subgroup_generated(g, std::vector<ElementIndex>{find(g, kT13)});
  const Subgroup c = subgroup_generated(g, std::vector<ElementIndex>{find(g, kC123)});
  EXPECT_TRUE(are_conjugate_subgroups(t12, t12));
  EXPECT_TRUE(are_conjugate_subgroups(t12, t13));
  EXPECT_FALSE(are_conjugate_subgroups(t12, c));
  auto x = conjugating_element(t12, t13);
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(conjugate(t12, *x), t13);
  EXPECT_TRUE(is_subconjugate(t13, whole_group(g)));
  EXPECT_FALSE(is_subconjugate(c, t12));
}

TEST(SubgroupFromMembers, RejectsNonClosedSets) {
  const auto g = s3();
  std::vector<ElementIndex> bad{g->identity(), find(g, kC123)};
  std::sort(bad.begin(), bad.end());
  EXPECT_THROW(subgroup_from_members(g, bad), std::invalid_argument);
}

TEST(GroupProperty, LagrangeAndNormality) {
  std::mt19937 rng(314159);
  std::vector<GroupPtr> groups;
  for (const auto& name : builtin_names()) groups.push_back(close(builtin(name)));
  int cases = 0;
  for (int trial = 0; trial < 1200; ++trial) {
    const auto& g = groups[trial % groups.size()];
    std::uniform_int_distribution<ElementIndex> pick(0, static_cast<ElementIndex>(g->order() - 1));
    std::vector<ElementIndex> seed{pick(rng)};
    if (rng() % 2) seed.push_back(pick(rng));
    const Subgroup h = subgroup_generated(g, seed);
    ASSERT_EQ(g->order() % h.order(), 0u);
    const Subgroup d = commutator_subgroup(h);
    ASSERT_EQ(h.order() % d.order(), 0u);
    ASSERT_TRUE(is_normal_in(d, h));
    const auto ab = abelianization(h);
    std::size_t product = 1;
    for (auto f : ab) product *= f;
    ASSERT_EQ(product, h.order() / d.order());
    for (std::size_t i = 1; i < ab.size(); ++i) ASSERT_EQ(ab[i] % ab[i - 1], 0u);
    const Subgroup k = subgroup_generated(g, std::vector<ElementIndex>{pick(rng)});
    ASSERT_EQ(g->order() % intersect_subgroups(h, k).order(), 0u);
    ASSERT_EQ(g->order() % join(h, k).order(), 0u);
    ++cases;
  }
  EXPECT_GE(cases, 1000);
}

TEST(GroupProperty, DeterminantsAndOrders) {
  for (const auto& name : builtin_names()) {
    const auto g = close(builtin(name));
    for (ElementIndex i = 0; i < g->order(); ++i) {
      ASSERT_EQ(abs_value(determinant(g->element(i))), 1);
      ASSERT_EQ(g->order() % g->element_order(i), 0u);
      ASSERT_EQ(g->product(i, g->inverse(i)), g->identity());
    }
  }
}
