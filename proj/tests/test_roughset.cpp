#include <gtest/gtest.h>

#include <random>

#include "dyncore/errors.hpp"
#include "dyncore/roughset.hpp"
#include "fixtures.hpp"

namespace dyncore {
namespace {

using test::kA;
using test::kB;
using test::kC;

// Pairwise-comparison oracle for condition_classes.
bool same_class(const Partition& p, ObjectIndex x, ObjectIndex y) {
  for (const auto& b : p.blocks) {
    const bool hx = std::find(b.begin(), b.end(), x) != b.end();
    const bool hy = std::find(b.begin(), b.end(), y) != b.end();
    if (hx || hy) return hx && hy;
  }
  return false;
}

TEST(ConditionClasses, FixA) {
  const auto t = SubSystem::whole(test::fix_a());
  const auto p = condition_classes(t, AttrSet::of({kA}));
  EXPECT_EQ(p, (Partition{{{0, 2}, {1}}}));
}

TEST(ConditionClasses, EmptyAndFullAttributeSets) {
  const auto t = SubSystem::whole(test::fix_a());
  EXPECT_EQ(condition_classes(t, AttrSet{}), (Partition{{{0, 1, 2}}}));
  EXPECT_EQ(condition_classes(t, t.parent().all_attributes()),
            (Partition{{{0}, {1}, {2}}}));
}

TEST(ConditionClasses, RejectsForeignAttributes) {
  const auto t = SubSystem::whole(test::fix_b());
  EXPECT_THROW(condition_classes(t, AttrSet::of({5})), DomainError);
}

TEST(ConditionClasses, AgreesWithPairwiseComparisonAndRefines) {
  std::mt19937_64 rng(21);
  for (int iter = 0; iter < 100; ++iter) {
    const auto s = test::random_system(rng);
    const auto t = SubSystem::whole(s);
    const auto all = s->all_attributes().mask();
    const AttrSet small = AttrSet::from_mask(rng() & all);
    const AttrSet large = small | AttrSet::from_mask(rng() & all);
    const auto p = condition_classes(t, small);
    const auto q = condition_classes(t, large);
    for (ObjectIndex x = 0; x < s->num_objects(); ++x) {
      for (ObjectIndex y = 0; y < s->num_objects(); ++y) {
        bool equal = true;
        for (std::size_t a : small.indices()) equal &= s->value(x, a) == s->value(y, a);
        EXPECT_EQ(same_class(p, x, y), equal);
        // refinement: same class under the larger set implies same class under the smaller
        if (same_class(q, x, y)) EXPECT_TRUE(same_class(p, x, y));
      }
    }
    const auto pos_small = positive_region(t, small);
    const auto pos_large = positive_region(t, large);
    EXPECT_TRUE(std::includes(pos_large.begin(), pos_large.end(), pos_small.begin(),
                              pos_small.end()));
  }
}

TEST(GeneralizedDecision, FixB) {
  const auto g = generalized_decision(SubSystem::whole(test::fix_b()));
  ASSERT_EQ(g.classes.blocks.size(), 2u);
  EXPECT_EQ(g.classes.blocks[0], (std::vector<ObjectIndex>{0, 1}));
  EXPECT_EQ(g.decisions[0], (std::vector<ValueCode>{0, 1}));
  EXPECT_EQ(g.decisions[1], (std::vector<ValueCode>{0}));
  EXPECT_FALSE(g.consistent());
}

TEST(GeneralizedDecision, ConsistentAndSingleRow) {
  const auto g = generalized_decision(SubSystem::whole(test::fix_a()));
  EXPECT_TRUE(g.consistent());
  EXPECT_EQ(g.decisions.size(), 3u);
  const auto one = std::make_shared<const DecisionSystem>(
      DecisionSystem::from_codes({{1, 2}}, {3}));
  const auto h = generalized_decision(SubSystem::whole(one));
  ASSERT_EQ(h.decisions.size(), 1u);
  EXPECT_EQ(h.decisions[0].size(), 1u);
}

TEST(PositiveRegion, FixB) {
  const auto t = SubSystem::whole(test::fix_b());
  EXPECT_EQ(positive_region(t, AttrSet::of({kB})), (std::vector<ObjectIndex>{2}));
  EXPECT_TRUE(positive_region(t, AttrSet{}).empty());
}

TEST(PositiveRegion, ConsistentTableCoversUniverse) {
  const auto t = SubSystem::whole(test::fix_a());
  EXPECT_EQ(positive_region(t, t.parent().all_attributes()),
            (std::vector<ObjectIndex>{0, 1, 2}));
}

TEST(PositiveRegion, UsesParentIndicesOnSubsystems) {
  const auto b = make_subsystem(test::fix_a(), {1, 2});
  EXPECT_EQ(positive_region(b, AttrSet{}), (std::vector<ObjectIndex>{1, 2}));
}

TEST(DiscernibilityMatrix, FixA) {
  const auto m = discernibility_matrix(SubSystem::whole(test::fix_a()));
  const std::vector<DiscernibilityCell> expected{
      {0, 1, AttrSet::of({kA})},
      {0, 2, AttrSet::of({kB, kC})},
  };
  EXPECT_EQ(m.cells, expected);
}

TEST(DiscernibilityMatrix, FixBOmitsSharedClass) {
  const auto m = discernibility_matrix(SubSystem::whole(test::fix_b()));
  const std::vector<DiscernibilityCell> expected{
      {0, 2, AttrSet::of({kB})},
      {1, 2, AttrSet::of({kB})},
  };
  EXPECT_EQ(m.cells, expected);
}

TEST(DiscernibilityMatrix, ConstantDecisionHasNoCells) {
  EXPECT_TRUE(discernibility_matrix(SubSystem::whole(test::fix_c())).cells.empty());
}

TEST(DiscernibilityMatrix, InconsistentClassesWithDifferentDecisionSetsAreNotPaired) {
  // Classes {0,1} (∂={0,1}) and {2,3} (∂={1,2}) lie outside the positive
  // region; the empty set preserves POS = ∅, so no cell may force a split.
  const auto s = std::make_shared<const DecisionSystem>(DecisionSystem::from_codes(
      {{0}, {0}, {1}, {1}}, {0, 1, 1, 2}));
  EXPECT_TRUE(discernibility_matrix(SubSystem::whole(s)).cells.empty());
  EXPECT_TRUE(is_reduct(SubSystem::whole(s), AttrSet{}));
}

TEST(DiscernibilityMatrix, CellsNonEmptyAndSerialMatchesParallel) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const auto t = SubSystem::whole(test::random_system(rng, {1, 30, 1, 8}));
    const auto par = discernibility_matrix(t, Execution::parallel);
    const auto ser = discernibility_matrix(t, Execution::serial);
    EXPECT_EQ(par.cells, ser.cells);
    for (const auto& c : par.cells) {
      EXPECT_FALSE(c.attrs.empty());
      EXPECT_LT(c.first, c.second);
    }
  }
}

TEST(IsReduct, FixtureExamples) {
  const auto a = SubSystem::whole(test::fix_a());
  EXPECT_TRUE(is_reduct(a, AttrSet::of({kA, kB})));
  EXPECT_TRUE(is_reduct(a, AttrSet::of({kA, kC})));
  EXPECT_FALSE(is_reduct(a, AttrSet::of({kA, kB, kC})));
  EXPECT_FALSE(is_reduct(a, AttrSet::of({kA})));
  EXPECT_TRUE(is_reduct(SubSystem::whole(test::fix_c()), AttrSet{}));
  EXPECT_TRUE(is_reduct(SubSystem::whole(test::fix_b()), AttrSet::of({kB})));
}

TEST(IsReduct, NoImmediateSubsetOfAReductIsAReduct) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 100; ++i) {
    const auto s = test::random_system(rng);
    const auto t = SubSystem::whole(s);
    const auto all = s->all_attributes().mask();
    for (std::uint64_t m = 0; m <= all; ++m) {
      const auto r = AttrSet::from_mask(m);
      if (!is_reduct(t, r)) continue;
      for (std::size_t a : r.indices()) {
        AttrSet smaller = r;
        smaller.erase(a);
        EXPECT_FALSE(is_reduct(t, smaller));
      }
    }
  }
}

}  // namespace
}  // namespace dyncore
