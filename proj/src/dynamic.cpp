#include "dyncore/dynamic.hpp"

#include <algorithm>
#include <exception>

#include "dyncore/errors.hpp"

namespace dyncore {

Lambda::Lambda(Rational value) : value_(value) {
  // 1/2 < p/q <= 1
  const bool above_half = value_.num * 2 > value_.den;
  const bool at_most_one = value_.num <= value_.den;
  if (!above_half || !at_most_one) {
    throw ParameterError("lambda " + value_.to_string() +
                         " outside (0.5, 1]");
  }
}

Lambda Lambda::parse(std::string_view text) {
  return Lambda(Rational::parse(text));
}

std::vector<Lambda> standard_lambda_grid() {
  return {Lambda(Rational::make(51, 100)), Lambda(Rational::make(3, 5)),
          Lambda(Rational::make(3, 4)), Lambda(Rational::make(9, 10)),
          Lambda(Rational::make(1, 1))};
}

FamilyAnalysis analyze_family(std::shared_ptr<const DecisionSystem> system,
                              Family family, const EnumerationLimits& limits,
                              Execution exec) {
  if (!system) throw DomainError("analyze_family requires a system");
  for (const auto& m : family.members()) {
    if (m.parent_ptr() != system && !(m.parent() == *system)) {
      throw DomainError("family member does not belong to the analysed system");
    }
  }
  FamilyAnalysis a{system, std::move(family), {}, {}, {}};
  const auto whole = SubSystem::whole(system);
  a.red_s = all_reducts(whole, limits, exec);
  a.core_s = core_of(whole, exec);

  const auto members = a.family.members();
  const std::size_t n = members.size();
  a.per_member.resize(n);
  std::vector<std::exception_ptr> errors(n);
  const bool parallel = exec == Execution::parallel;
  // Members are independent; the inner kernels run serially to avoid
  // nested teams.
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
  for (std::size_t i = 0; i < n; ++i) {
    try {
      a.per_member[i].reducts = all_reducts(members[i], limits, Execution::serial);
      a.per_member[i].core = core_of(members[i], Execution::serial);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!errors[i]) continue;
    try {
      std::rethrow_exception(errors[i]);
    } catch (const CapacityError& e) {
      throw CapacityError("family member " + std::to_string(i) + ": " + e.what());
    }
  }
  return a;
}

std::size_t reduct_support(const FamilyAnalysis& a, AttrSet set) {
  return static_cast<std::size_t>(
      std::count_if(a.per_member.begin(), a.per_member.end(),
                    [&](const MemberAnalysis& m) { return m.reducts.contains(set); }));
}

std::vector<std::size_t> core_support(const FamilyAnalysis& a) {
  std::vector<std::size_t> support(a.system->num_attributes(), 0);
  for (const auto& m : a.per_member) {
    for (std::size_t attr : m.core.indices()) ++support[attr];
  }
  return support;
}

ReductSet dynamic_reduct(const FamilyAnalysis& a) {
  ReductSet acc = a.red_s;
  for (const auto& m : a.per_member) acc = intersect(acc, m.reducts);
  return acc;
}

ReductSet dynamic_reduct_lambda(const FamilyAnalysis& a, const Lambda& lambda) {
  std::vector<AttrSet> kept;
  for (AttrSet q : a.red_s) {
    if (lambda.admits(reduct_support(a, q), a.family.size())) kept.push_back(q);
  }
  return ReductSet(std::move(kept));
}

ReductSet generalized_dynamic_reduct(const FamilyAnalysis& a) {
  ReductSet acc = a.per_member.front().reducts;
  for (const auto& m : a.per_member) acc = intersect(acc, m.reducts);
  return acc;
}

ReductSet generalized_dynamic_reduct_lambda(const FamilyAnalysis& a,
                                            const Lambda& lambda) {
  // Any set with nonzero support is a reduct of some member.
  std::vector<AttrSet> pool;
  for (const auto& m : a.per_member) {
    pool.insert(pool.end(), m.reducts.begin(), m.reducts.end());
  }
  std::vector<AttrSet> kept;
  for (AttrSet r : ReductSet(std::move(pool))) {
    if (lambda.admits(reduct_support(a, r), a.family.size())) kept.push_back(r);
  }
  return ReductSet(std::move(kept));
}

AttrSet dynamic_core(const FamilyAnalysis& a) {
  AttrSet acc = a.core_s;
  for (const auto& m : a.per_member) acc = acc & m.core;
  return acc;
}

namespace {

AttrSet thresholded(AttrSet candidates, const std::vector<std::size_t>& support,
                    std::size_t family_size, const Lambda& lambda) {
  AttrSet out;
  for (std::size_t attr : candidates.indices()) {
    if (lambda.admits(support[attr], family_size)) out.insert(attr);
  }
  return out;
}

}  // namespace

AttrSet dynamic_core_lambda(const FamilyAnalysis& a, const Lambda& lambda) {
  return thresholded(a.core_s, core_support(a), a.family.size(), lambda);
}

AttrSet generalized_dynamic_core(const FamilyAnalysis& a) {
  AttrSet acc = a.universe();
  for (const auto& m : a.per_member) acc = acc & m.core;
  return acc;
}

AttrSet generalized_dynamic_core_lambda(const FamilyAnalysis& a,
                                        const Lambda& lambda) {
  return thresholded(a.universe(), core_support(a), a.family.size(), lambda);
}

DynamicSets dynamic_sets(const FamilyAnalysis& a, const Lambda& lambda) {
  return DynamicSets{lambda,
                     dynamic_reduct(a),
                     dynamic_reduct_lambda(a, lambda),
                     generalized_dynamic_reduct(a),
                     generalized_dynamic_reduct_lambda(a, lambda),
                     dynamic_core(a),
                     dynamic_core_lambda(a, lambda),
                     generalized_dynamic_core(a),
                     generalized_dynamic_core_lambda(a, lambda)};
}

StabilityReport stability_report(const FamilyAnalysis& a,
                                 const std::vector<Lambda>& lambdas) {
  StabilityReport report;
  report.attr_core_support = core_support(a);
  report.family_size = a.family.size();
  std::vector<AttrSet> candidates(a.red_s.begin(), a.red_s.end());
  for (const auto& m : a.per_member) {
    candidates.insert(candidates.end(), m.reducts.begin(), m.reducts.end());
  }
  for (AttrSet r : ReductSet(std::move(candidates))) {
    report.reduct_support.emplace_back(r, reduct_support(a, r));
  }
  for (const auto& lambda : lambdas) {
    report.per_lambda.push_back(dynamic_sets(a, lambda));
  }
  return report;
}

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::vacuous: return "vacuous";
    case CheckStatus::not_applicable: return "not-applicable";
  }
  return "unknown";
}

bool VerificationRecord::ok() const { return count(CheckStatus::fail) == 0; }

std::size_t VerificationRecord::count(CheckStatus status) const {
  return static_cast<std::size_t>(std::count_if(
      checks.begin(), checks.end(),
      [&](const CheckResult& c) { return c.status == status; }));
}

namespace {

CheckResult superset_check(std::string name, std::string description,
                           AttrSet lhs, AttrSet rhs, bool vacuous) {
  CheckResult c;
  c.name = std::move(name);
  c.description = std::move(description);
  c.lhs = lhs;
  c.rhs = rhs;
  const AttrSet missing = rhs - lhs;
  if (!missing.empty()) {
    c.status = CheckStatus::fail;
    c.attribute = missing.front();
  } else {
    c.status = vacuous ? CheckStatus::vacuous : CheckStatus::pass;
  }
  return c;
}

CheckResult equality_check(std::string name, std::string description,
                           AttrSet lhs, AttrSet rhs, bool applicable) {
  CheckResult c;
  c.name = std::move(name);
  c.description = std::move(description);
  c.equality = true;
  c.lhs = lhs;
  c.rhs = rhs;
  if (!applicable) {
    c.status = CheckStatus::not_applicable;
    return c;
  }
  const AttrSet diff = (lhs - rhs) | (rhs - lhs);
  if (!diff.empty()) {
    c.status = CheckStatus::fail;
    c.attribute = diff.front();
  }
  return c;
}

}  // namespace

VerificationRecord verify_theorems(const FamilyAnalysis& a, const Lambda& lambda) {
  const AttrSet universe = a.universe();
  const auto sets = dynamic_sets(a, lambda);
  const auto members = a.family.members();
  const bool only_s = std::all_of(members.begin(), members.end(),
                                  [](const SubSystem& m) { return m.covers_parent(); });
  const bool contains_s = std::any_of(members.begin(), members.end(),
                                      [](const SubSystem& m) { return m.covers_parent(); });

  VerificationRecord rec;
  rec.checks.push_back(superset_check(
      "T1", "intersection of DR contains DCORE",
      intersect_all(sets.dr, universe), sets.dcore, sets.dr.empty()));
  rec.checks.push_back(equality_check("T2a", "F = {S} implies DCORE = CORE(S)",
                                      sets.dcore, a.core_s, only_s));
  rec.checks.push_back(equality_check(
      "T2b", "DCORE_1 = DCORE",
      dynamic_core_lambda(a, Lambda(Rational::make(1, 1))), sets.dcore, true));

  // T2c: DCORE_λ is ⊇-decreasing along the sorted grid.
  {
    auto grid = standard_lambda_grid();
    grid.push_back(lambda);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    std::optional<CheckResult> failure;
    for (std::size_t i = 0; i + 1 < grid.size() && !failure; ++i) {
      auto c = superset_check("T2c", "", dynamic_core_lambda(a, grid[i]),
                              dynamic_core_lambda(a, grid[i + 1]), false);
      if (c.status == CheckStatus::fail) {
        c.note = "lambda " + grid[i].to_string() + " vs " + grid[i + 1].to_string();
        failure = std::move(c);
      }
    }
    CheckResult c = failure ? std::move(*failure)
                            : superset_check("T2c", "", dynamic_core_lambda(a, grid.front()),
                                             dynamic_core_lambda(a, grid.back()), false);
    c.description = "lambda <= lambda1 implies DCORE_lambda1 within DCORE_lambda";
    if (!failure) {
      c.note = "lambda " + grid.front().to_string() + " vs " + grid.back().to_string();
    }
    rec.checks.push_back(std::move(c));
  }

  rec.checks.push_back(superset_check("T2d", "DCORE within DCORE_lambda",
                                      sets.dcore_lambda, sets.dcore, false));
  rec.checks.push_back(superset_check(
      "T3", "intersection of DR_lambda contains DCORE_lambda",
      intersect_all(sets.dr_lambda, universe), sets.dcore_lambda,
      sets.dr_lambda.empty()));
  rec.checks.push_back(superset_check("T4a", "DCORE within GDCORE", sets.gdcore,
                                      sets.dcore, false));
  rec.checks.push_back(superset_check("T4b", "DCORE_lambda within GDCORE_lambda",
                                      sets.gdcore_lambda, sets.dcore_lambda, false));
  rec.checks.push_back(equality_check("T4c", "S in F implies GDCORE = DCORE",
                                      sets.gdcore, sets.dcore, contains_s));
  rec.checks.push_back(superset_check(
      "T5a", "intersection of GDR contains GDCORE",
      intersect_all(sets.gdr, universe), sets.gdcore, sets.gdr.empty()));
  rec.checks.push_back(superset_check(
      "T5b", "intersection of GDR_lambda contains GDCORE_lambda",
      intersect_all(sets.gdr_lambda, universe), sets.gdcore_lambda,
      sets.gdr_lambda.empty()));
  return rec;
}

}  // namespace dyncore
