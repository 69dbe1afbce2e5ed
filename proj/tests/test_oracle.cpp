#include <gtest/gtest.h>

#include <random>

#include "dyncore/errors.hpp"
#include "dyncore/oracle.hpp"
#include "dyncore/roughset.hpp"
#include "fixtures.hpp"

namespace dyncore {
namespace {

using test::kA;
using test::kB;
using test::kC;

TEST(BruteForceReducts, Fixtures) {
  EXPECT_EQ(oracle::brute_force_reducts(SubSystem::whole(test::fix_a())),
            (ReductSet{AttrSet::of({kA, kB}), AttrSet::of({kA, kC})}));
  EXPECT_EQ(oracle::brute_force_reducts(SubSystem::whole(test::fix_b())),
            ReductSet{AttrSet::of({kB})});
  EXPECT_EQ(oracle::brute_force_reducts(SubSystem::whole(test::fix_c())),
            ReductSet{AttrSet{}});
}

TEST(BruteForceCore, Fixtures) {
  EXPECT_EQ(oracle::brute_force_core(SubSystem::whole(test::fix_a())), AttrSet::of({kA}));
  EXPECT_EQ(oracle::brute_force_core(SubSystem::whole(test::fix_b())), AttrSet::of({kB}));
  EXPECT_EQ(oracle::brute_force_core(SubSystem::whole(test::fix_c())), AttrSet{});
}

TEST(BruteForceReducts, Limits) {
  std::vector<std::vector<ValueCode>> wide{std::vector<ValueCode>(17, 0)};
  const auto s = std::make_shared<const DecisionSystem>(DecisionSystem::from_codes(wide, {0}));
  EXPECT_THROW(oracle::brute_force_reducts(SubSystem::whole(s)), CapacityError);
  std::vector<std::vector<ValueCode>> tall(65, std::vector<ValueCode>{0});
  const auto t = std::make_shared<const DecisionSystem>(
      DecisionSystem::from_codes(tall, std::vector<ValueCode>(65, 0)));
  EXPECT_THROW(oracle::brute_force_core(SubSystem::whole(t)), CapacityError);
}

TEST(BruteForceReducts, MembersAreMinimalPreservers) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 100; ++i) {
    const auto s = test::random_system(rng);
    const auto t = SubSystem::whole(s);
    const auto target = positive_region(t, s->all_attributes());
    const auto reducts = oracle::brute_force_reducts(t);
    EXPECT_FALSE(reducts.empty());
    for (AttrSet r : reducts) {
      EXPECT_TRUE(is_reduct(t, r));
      EXPECT_EQ(positive_region(t, r), target);
      for (std::size_t a : r.indices()) {
        AttrSet smaller = r;
        smaller.erase(a);
        EXPECT_NE(positive_region(t, smaller), target);
      }
    }
  }
}

TEST(BruteForceReducts, SerialAndParallelAgree) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    const auto t = SubSystem::whole(test::random_system(rng, {10, 40, 6, 10}));
    EXPECT_EQ(oracle::brute_force_reducts(t, Execution::serial),
              oracle::brute_force_reducts(t, Execution::parallel));
  }
}

}  // namespace
}  // namespace dyncore
