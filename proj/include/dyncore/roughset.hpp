#pragma once

#include <vector>

#include "dyncore/attr_set.hpp"
#include "dyncore/execution.hpp"
#include "dyncore/table.hpp"

namespace dyncore {

/// Equivalence classes over a subsystem's objects. Object indices refer to
/// rows of the parent system. Blocks are sorted internally and ordered by
/// their smallest member.
struct Partition {
  std::vector<std::vector<ObjectIndex>> blocks;

  friend bool operator==(const Partition&, const Partition&) = default;
};

/// Indiscernibility classes of `table` under `attrs`. attrs = {} yields a
/// single block holding every object.
Partition condition_classes(const SubSystem& table, AttrSet attrs);

/// The generalized decision: for each class of condition_classes(table, C),
/// the sorted set of decision codes that occur in it.
struct GeneralizedDecision {
  Partition classes;
  std::vector<std::vector<ValueCode>> decisions;  // aligned with classes

  bool consistent() const;
};

GeneralizedDecision generalized_decision(const SubSystem& table);

/// Union of the blocks of condition_classes(table, attrs) whose members all
/// share one decision code. Sorted parent row indices.
std::vector<ObjectIndex> positive_region(const SubSystem& table, AttrSet attrs);

struct DiscernibilityCell {
  ObjectIndex first;   // parent row index, first < second
  ObjectIndex second;
  AttrSet attrs;       // attributes on which the two objects differ

  friend bool operator==(const DiscernibilityCell&,
                         const DiscernibilityCell&) = default;
};

/// Relative discernibility matrix, stored sparsely. A pair (x, y) has a cell
/// iff the generalized decisions of x and y differ and at least one of them
/// lies in the positive region of C. Cells appear in (first, second) order.
struct DiscernibilityMatrix {
  std::vector<DiscernibilityCell> cells;
};

DiscernibilityMatrix discernibility_matrix(
    const SubSystem& table, Execution exec = Execution::parallel);

/// True iff `attrs` preserves positive_region(table, C) and no single
/// attribute can be dropped while preserving it.
bool is_reduct(const SubSystem& table, AttrSet attrs);

}  // namespace dyncore
