#include "dyncore/report.hpp"

#include <algorithm>
#include <vector>

namespace dyncore::report {

using nlohmann::json;

json attr_set(AttrSet set, std::span<const std::string> names) {
  std::vector<std::string> out;
  for (std::size_t i : set.indices()) out.push_back(names[i]);
  std::sort(out.begin(), out.end());
  return out;
}

json reduct_set(const ReductSet& sets, std::span<const std::string> names) {
  json out = json::array();
  for (AttrSet s : sets) out.push_back(attr_set(s, names));
  return out;
}

json input_section(const DecisionSystem& system, const std::string& path) {
  return {{"path", path},
          {"rows", system.num_objects()},
          {"attributes", std::vector<std::string>(system.attribute_names().begin(),
                                                  system.attribute_names().end())},
          {"decision", system.decision_name()}};
}

json static_section(const DecisionSystem& system, const ReductSet* reducts,
                    AttrSet core) {
  const auto names = system.attribute_names();
  json out = {{"core", attr_set(core, names)}};
  if (reducts != nullptr) out["reducts"] = reduct_set(*reducts, names);
  return out;
}

json family_section(const FamilyAnalysis& analysis) {
  const auto names = analysis.system->attribute_names();
  json out = json::array();
  const auto members = analysis.family.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    out.push_back({{"indices", std::vector<ObjectIndex>(members[i].objects().begin(),
                                                        members[i].objects().end())},
                   {"reducts", reduct_set(analysis.per_member[i].reducts, names)},
                   {"core", attr_set(analysis.per_member[i].core, names)}});
  }
  return out;
}

json dynamic_section(const DecisionSystem& system, const DynamicSets& sets) {
  const auto names = system.attribute_names();
  return {{"lambda", sets.lambda.to_string()},
          {"dr", reduct_set(sets.dr, names)},
          {"dr_lambda", reduct_set(sets.dr_lambda, names)},
          {"gdr", reduct_set(sets.gdr, names)},
          {"gdr_lambda", reduct_set(sets.gdr_lambda, names)},
          {"dcore", attr_set(sets.dcore, names)},
          {"dcore_lambda", attr_set(sets.dcore_lambda, names)},
          {"gdcore", attr_set(sets.gdcore, names)},
          {"gdcore_lambda", attr_set(sets.gdcore_lambda, names)}};
}

json stability_section(const DecisionSystem& system, const StabilityReport& report) {
  const auto names = system.attribute_names();
  json attr = json::object();
  for (std::size_t i = 0; i < report.attr_core_support.size(); ++i) {
    attr[names[i]] = report.attr_core_support[i];
  }
  json reducts = json::array();
  for (const auto& [set, support] : report.reduct_support) {
    reducts.push_back({{"reduct", attr_set(set, names)}, {"support", support}});
  }
  return {{"attr_core_support", attr},
          {"reduct_support", reducts},
          {"family_size", report.family_size}};
}

json verification_section(const DecisionSystem& system,
                          const VerificationRecord& record) {
  const auto names = system.attribute_names();
  json out = json::array();
  for (const auto& c : record.checks) {
    json witness = {{"relation", c.equality ? "equal" : "superset"},
                    {"lhs", attr_set(c.lhs, names)},
                    {"rhs", attr_set(c.rhs, names)}};
    if (c.attribute) witness["attribute"] = names[*c.attribute];
    if (!c.note.empty()) witness["note"] = c.note;
    out.push_back({{"check", c.name},
                   {"description", c.description},
                   {"status", std::string(to_string(c.status))},
                   {"witness", witness}});
  }
  return out;
}

}  // namespace dyncore::report
