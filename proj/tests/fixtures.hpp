#pragma once

// Shared test fixtures and random instance generators.

#include <cstdint>
#include <memory>
#include <random>
#include <vector>

#include "dyncore/table.hpp"

namespace dyncore::test {

inline constexpr std::size_t kA = 0, kB = 1, kC = 2;

// FIX-A: consistent, three objects, RED = {{a,b},{a,c}}, CORE = {a}.
//   u1 (0,0,0 -> 0), u2 (1,0,0 -> 1), u3 (0,1,1 -> 1)
inline std::shared_ptr<const DecisionSystem> fix_a() {
  return std::make_shared<const DecisionSystem>(DecisionSystem::from_codes(
      {{0, 0, 0}, {1, 0, 0}, {0, 1, 1}}, {0, 1, 1}, {"a", "b", "c"}, "d"));
}

// FIX-B: inconsistent pair u1/u2, RED = {{b}}.
//   u1 (0,0 -> 0), u2 (0,0 -> 1), u3 (0,1 -> 0)
inline std::shared_ptr<const DecisionSystem> fix_b() {
  return std::make_shared<const DecisionSystem>(DecisionSystem::from_codes(
      {{0, 0}, {0, 0}, {0, 1}}, {0, 1, 0}, {"a", "b"}, "d"));
}

// FIX-C: constant decision, RED = {∅}.
inline std::shared_ptr<const DecisionSystem> fix_c() {
  return std::make_shared<const DecisionSystem>(DecisionSystem::from_codes(
      {{0, 0}, {1, 0}, {0, 1}}, {0, 0, 0}, {"a", "b"}, "d"));
}

struct RandomTableShape {
  std::size_t min_objects = 1, max_objects = 10;
  std::size_t min_attrs = 1, max_attrs = 6;
  ValueCode min_arity = 2, max_arity = 3;
  ValueCode min_decision_arity = 2, max_decision_arity = 3;
};

inline std::shared_ptr<const DecisionSystem> random_system(
    std::mt19937_64& rng, const RandomTableShape& shape = {}) {
  auto pick = [&rng](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  const std::size_t n = pick(shape.min_objects, shape.max_objects);
  const std::size_t width = pick(shape.min_attrs, shape.max_attrs);
  std::vector<ValueCode> arity(width);
  for (auto& k : arity) k = static_cast<ValueCode>(pick(shape.min_arity, shape.max_arity));
  const auto decision_arity =
      static_cast<ValueCode>(pick(shape.min_decision_arity, shape.max_decision_arity));
  std::vector<std::vector<ValueCode>> rows(n, std::vector<ValueCode>(width));
  std::vector<ValueCode> decisions(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t a = 0; a < width; ++a) {
      rows[r][a] = static_cast<ValueCode>(pick(0, arity[a] - 1));
    }
    decisions[r] = static_cast<ValueCode>(pick(0, decision_arity - 1));
  }
  return std::make_shared<const DecisionSystem>(
      DecisionSystem::from_codes(rows, decisions));
}

}  // namespace dyncore::test
