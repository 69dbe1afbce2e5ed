#pragma once

#include <span>
#include <string>

#include <nlohmann/json.hpp>

#include "dyncore/dynamic.hpp"
#include "dyncore/reducts.hpp"
#include "dyncore/table.hpp"

namespace dyncore::report {

// Attribute sets serialize as arrays of names sorted by name; reduct sets
// keep canonical (index) order. Objects use nlohmann's sorted-key storage,
// so dumps are byte-stable.

nlohmann::json attr_set(AttrSet set, std::span<const std::string> names);
nlohmann::json reduct_set(const ReductSet& sets, std::span<const std::string> names);

nlohmann::json input_section(const DecisionSystem& system, const std::string& path);
nlohmann::json static_section(const DecisionSystem& system, const ReductSet* reducts,
                              AttrSet core);
nlohmann::json family_section(const FamilyAnalysis& analysis);
nlohmann::json dynamic_section(const DecisionSystem& system, const DynamicSets& sets);
nlohmann::json stability_section(const DecisionSystem& system,
                                 const StabilityReport& report);
nlohmann::json verification_section(const DecisionSystem& system,
                                     const VerificationRecord& record);

}  // namespace dyncore::report
