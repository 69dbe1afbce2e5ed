#include <gtest/gtest.h>

#include <random>

#include "dyncore/errors.hpp"
#include "dyncore/oracle.hpp"
#include "dyncore/reducts.hpp"
#include "fixtures.hpp"

namespace dyncore {
namespace {

using test::kA;
using test::kB;
using test::kC;

TEST(AttrSet, CanonicalOrderIsLexicographicOnIndices) {
  const auto e = AttrSet{};
  const auto a = AttrSet::of({0});
  const auto ab = AttrSet::of({0, 1});
  const auto ac = AttrSet::of({0, 2});
  const auto b = AttrSet::of({1});
  EXPECT_LT(e, a);
  EXPECT_LT(a, ab);
  EXPECT_LT(ab, ac);
  EXPECT_LT(ac, b);
  EXPECT_THROW(AttrSet::of({64}), CapacityError);
  EXPECT_THROW(AttrSet::full(65), CapacityError);
  EXPECT_EQ(AttrSet::full(64).size(), 64u);
}

TEST(ReductSet, CanonicalisesAndDetectsAntichains) {
  const ReductSet r{AttrSet::of({kA, kC}), AttrSet::of({kA, kB}), AttrSet::of({kA, kC})};
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r.sets()[0], AttrSet::of({kA, kB}));
  EXPECT_TRUE(r.is_antichain());
  EXPECT_FALSE((ReductSet{AttrSet::of({kA}), AttrSet::of({kA, kB})}).is_antichain());
}

TEST(IntersectAll, Conventions) {
  const AttrSet c = AttrSet::full(3);
  EXPECT_EQ(intersect_all(ReductSet{}, c), c);
  EXPECT_EQ(intersect_all(ReductSet{AttrSet{}}, c), AttrSet{});
  EXPECT_EQ(intersect_all(ReductSet{AttrSet::of({kA, kB}), AttrSet::of({kA, kC})}, c),
            AttrSet::of({kA}));
}

TEST(DiscernibilityFunction, AbsorbsAndOrdersShortestFirst) {
  const DiscernibilityFunction f({AttrSet::of({kA, kB, kC}), AttrSet::of({kB, kC}),
                                  AttrSet::of({kA}), AttrSet::of({kB, kC})});
  const std::vector<AttrSet> expected{AttrSet::of({kA}), AttrSet::of({kB, kC})};
  EXPECT_EQ(std::vector<AttrSet>(f.clauses().begin(), f.clauses().end()), expected);
  // idempotent
  EXPECT_EQ(DiscernibilityFunction(expected), f);
  EXPECT_THROW(DiscernibilityFunction({AttrSet{}}), DomainError);
}

TEST(PrimeImplicants, SmallCnf) {
  // (a) ∧ (b ∨ c) -> {a,b}, {a,c}
  const DiscernibilityFunction f({AttrSet::of({kA}), AttrSet::of({kB, kC})});
  EXPECT_EQ(prime_implicants(f, 100),
            (ReductSet{AttrSet::of({kA, kB}), AttrSet::of({kA, kC})}));
  EXPECT_EQ(prime_implicants(DiscernibilityFunction({}), 100), ReductSet{AttrSet{}});
  // (a∨b)∧(b∨c)∧(a∨c) -> {a,b},{a,c},{b,c}
  const DiscernibilityFunction g(
      {AttrSet::of({kA, kB}), AttrSet::of({kB, kC}), AttrSet::of({kA, kC})});
  EXPECT_EQ(prime_implicants(g, 100),
            (ReductSet{AttrSet::of({kA, kB}), AttrSet::of({kA, kC}), AttrSet::of({kB, kC})}));
}

TEST(PrimeImplicants, CapIsEnforced) {
  // (a0∨a1)∧(a2∨a3)∧... has 2^k prime implicants.
  std::vector<AttrSet> clauses;
  for (std::size_t i = 0; i < 10; ++i) clauses.push_back(AttrSet::of({2 * i, 2 * i + 1}));
  const DiscernibilityFunction f(clauses);
  EXPECT_EQ(prime_implicants(f, 1024).size(), 1024u);
  EXPECT_THROW(prime_implicants(f, 1000), CapacityError);
}

TEST(AllReducts, Fixtures) {
  EXPECT_EQ(all_reducts(SubSystem::whole(test::fix_a())),
            (ReductSet{AttrSet::of({kA, kB}), AttrSet::of({kA, kC})}));
  EXPECT_EQ(all_reducts(SubSystem::whole(test::fix_b())), ReductSet{AttrSet::of({kB})});
  EXPECT_EQ(all_reducts(SubSystem::whole(test::fix_c())), ReductSet{AttrSet{}});
}

TEST(AllReducts, AttributeLimit) {
  std::vector<std::vector<ValueCode>> rows{std::vector<ValueCode>(25, 0),
                                           std::vector<ValueCode>(25, 1)};
  const auto s = std::make_shared<const DecisionSystem>(
      DecisionSystem::from_codes(rows, {0, 1}));
  const auto t = SubSystem::whole(s);
  try {
    all_reducts(t);
    FAIL() << "expected CapacityError";
  } catch (const CapacityError& e) {
    EXPECT_NE(std::string(e.what()).find("24"), std::string::npos);
  }
  EXPECT_EQ(all_reducts(t, {25, 100000}).size(), 25u);
  // core needs no enumeration
  EXPECT_EQ(core_of(t), AttrSet{});
}

TEST(CoreOf, Fixtures) {
  EXPECT_EQ(core_of(SubSystem::whole(test::fix_a())), AttrSet::of({kA}));
  EXPECT_EQ(core_of(SubSystem::whole(test::fix_b())), AttrSet::of({kB}));
  EXPECT_EQ(core_of(SubSystem::whole(test::fix_c())), AttrSet{});
}

TEST(AllReducts, AgreesWithOracleOnSubsystems) {
  std::mt19937_64 rng(1234);
  for (int i = 0; i < 200; ++i) {
    const auto s = test::random_system(rng, {1, 12, 1, 6, 2, 4, 2, 4});
    std::vector<ObjectIndex> rows;
    for (ObjectIndex r = 0; r < s->num_objects(); ++r) {
      if (rng() % 3 != 0) rows.push_back(r);
    }
    if (rows.empty()) rows.push_back(0);
    const auto b = make_subsystem(s, rows);
    const auto reducts = all_reducts(b);
    EXPECT_EQ(reducts, oracle::brute_force_reducts(b));
    EXPECT_EQ(core_of(b), intersect_all(reducts, s->all_attributes()));
    EXPECT_TRUE(reducts.is_antichain());
    for (AttrSet r : reducts) EXPECT_TRUE(is_reduct(b, r));
  }
}

TEST(AllReducts, SerialAndParallelAgree) {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 30; ++i) {
    const auto t = SubSystem::whole(test::random_system(rng, {20, 60, 4, 12}));
    EXPECT_EQ(all_reducts(t, {}, Execution::serial), all_reducts(t, {}, Execution::parallel));
  }
}

}  // namespace
}  // namespace dyncore
