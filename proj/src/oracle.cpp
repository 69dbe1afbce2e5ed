#include "dyncore/oracle.hpp"

#include <string>
#include <vector>

#include "dyncore/errors.hpp"
#include "dyncore/roughset.hpp"

namespace dyncore::oracle {

namespace {

void check_limits(const SubSystem& table) {
  if (table.parent().num_attributes() > kMaxOracleAttributes) {
    throw CapacityError("oracle supports at most " +
                        std::to_string(kMaxOracleAttributes) +
                        " condition attributes");
  }
  if (table.size() > kMaxOracleObjects) {
    throw CapacityError("oracle supports at most " +
                        std::to_string(kMaxOracleObjects) + " objects");
  }
}

}  // namespace

ReductSet brute_force_reducts(const SubSystem& table, Execution exec) {
  check_limits(table);
  const std::size_t width = table.parent().num_attributes();
  const std::uint64_t count = std::uint64_t{1} << width;
  const auto target = positive_region(table, table.parent().all_attributes());

  std::vector<char> preserves(count);
  const bool parallel = exec == Execution::parallel;
#pragma omp parallel for schedule(dynamic, 8) if (parallel)
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    preserves[mask] =
        positive_region(table, AttrSet::from_mask(mask)) == target ? 1 : 0;
  }

  // A preserving subset is a reduct iff no preserving proper subset exists.
  std::vector<AttrSet> reducts;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    if (!preserves[mask]) continue;
    bool minimal = true;
    for (std::uint64_t sub = (mask - 1) & mask; sub != mask; sub = (sub - 1) & mask) {
      if (preserves[sub]) {
        minimal = false;
        break;
      }
      if (sub == 0) break;
    }
    if (minimal) reducts.push_back(AttrSet::from_mask(mask));
  }
  return ReductSet(std::move(reducts));
}

AttrSet brute_force_core(const SubSystem& table, Execution exec) {
  const auto reducts = brute_force_reducts(table, exec);
  AttrSet core = table.parent().all_attributes();
  for (AttrSet r : reducts) core = core & r;
  return core;
}

}  // namespace dyncore::oracle
