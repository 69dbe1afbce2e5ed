#pragma once

#include <cstddef>

#include "dyncore/attr_set.hpp"
#include "dyncore/execution.hpp"
#include "dyncore/reducts.hpp"
#include "dyncore/table.hpp"

namespace dyncore::oracle {

inline constexpr std::size_t kMaxOracleAttributes = 16;
inline constexpr std::size_t kMaxOracleObjects = 64;

/// Reference enumeration of RED(table): tests all 2^|C| subsets for
/// positive-region preservation and keeps the minimal ones. Independent of
/// the discernibility-function route. CapacityError beyond 16 attributes or
/// 64 objects.
ReductSet brute_force_reducts(const SubSystem& table,
                              Execution exec = Execution::parallel);

/// Literal intersection of brute_force_reducts(table).
AttrSet brute_force_core(const SubSystem& table,
                         Execution exec = Execution::parallel);

}  // namespace dyncore::oracle
