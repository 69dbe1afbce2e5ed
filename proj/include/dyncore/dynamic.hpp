#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dyncore/attr_set.hpp"
#include "dyncore/execution.hpp"
#include "dyncore/rational.hpp"
#include "dyncore/reducts.hpp"
#include "dyncore/table.hpp"

namespace dyncore {

/// Precision coefficient, an exact rational in (1/2, 1].
class Lambda {
 public:
  /// Throws ParameterError outside (1/2, 1].
  explicit Lambda(Rational value);
  /// Parses a decimal ("0.75") or fraction ("3/4").
  static Lambda parse(std::string_view text);

  const Rational& value() const { return value_; }
  std::string to_string() const { return value_.to_string(); }

  /// True iff count / total >= lambda.
  bool admits(std::size_t count, std::size_t total) const {
    return ratio_at_least(count, total, value_);
  }

  friend bool operator==(const Lambda&, const Lambda&) = default;
  friend bool operator<(const Lambda& a, const Lambda& b) {
    return a.value_ < b.value_;
  }

 private:
  Rational value_;
};

/// The reference λ grid used for monotonicity checks.
std::vector<Lambda> standard_lambda_grid();

struct MemberAnalysis {
  ReductSet reducts;
  AttrSet core;

  friend bool operator==(const MemberAnalysis&, const MemberAnalysis&) = default;
};

/// RED and CORE of a system and of every member of a family over it.
struct FamilyAnalysis {
  std::shared_ptr<const DecisionSystem> system;
  Family family;
  ReductSet red_s;
  AttrSet core_s;
  std::vector<MemberAnalysis> per_member;  // aligned with family.members()

  AttrSet universe() const { return system->all_attributes(); }
};

/// Computes RED/CORE for the system and each member. Members are processed
/// concurrently under Execution::parallel; results are identical either way.
/// A capacity error from a member names its index.
FamilyAnalysis analyze_family(std::shared_ptr<const DecisionSystem> system,
                              Family family,
                              const EnumerationLimits& limits = {},
                              Execution exec = Execution::parallel);

/// |{B ∈ F : set ∈ RED(B)}|.
std::size_t reduct_support(const FamilyAnalysis& a, AttrSet set);
/// |{B ∈ F : attr ∈ CORE(B)}| for every condition attribute.
std::vector<std::size_t> core_support(const FamilyAnalysis& a);

// Dynamic reducts.
ReductSet dynamic_reduct(const FamilyAnalysis& a);
ReductSet dynamic_reduct_lambda(const FamilyAnalysis& a, const Lambda& lambda);
ReductSet generalized_dynamic_reduct(const FamilyAnalysis& a);
ReductSet generalized_dynamic_reduct_lambda(const FamilyAnalysis& a,
                                            const Lambda& lambda);

// Dynamic cores.
AttrSet dynamic_core(const FamilyAnalysis& a);
AttrSet dynamic_core_lambda(const FamilyAnalysis& a, const Lambda& lambda);
AttrSet generalized_dynamic_core(const FamilyAnalysis& a);
AttrSet generalized_dynamic_core_lambda(const FamilyAnalysis& a,
                                        const Lambda& lambda);

/// All eight derived sets at one λ.
struct DynamicSets {
  Lambda lambda;
  ReductSet dr, dr_lambda, gdr, gdr_lambda;
  AttrSet dcore, dcore_lambda, gdcore, gdcore_lambda;
};

DynamicSets dynamic_sets(const FamilyAnalysis& a, const Lambda& lambda);

struct StabilityReport {
  std::vector<std::size_t> attr_core_support;  // indexed by attribute
  /// Support of every reduct of S or of some member, canonical order.
  std::vector<std::pair<AttrSet, std::size_t>> reduct_support;
  std::size_t family_size = 0;
  std::vector<DynamicSets> per_lambda;
};

StabilityReport stability_report(const FamilyAnalysis& a,
                                 const std::vector<Lambda>& lambdas);

enum class CheckStatus { pass, fail, vacuous, not_applicable };

std::string_view to_string(CheckStatus status);

/// Outcome of one theorem check. For containment checks the relation is
/// lhs ⊇ rhs, for identities lhs = rhs.
struct CheckResult {
  std::string name;         // "T1", "T2a", ...
  std::string description;
  CheckStatus status = CheckStatus::pass;
  bool equality = false;
  AttrSet lhs;
  AttrSet rhs;
  std::optional<std::size_t> attribute;  // offending attribute on failure
  std::string note;
};

struct VerificationRecord {
  std::vector<CheckResult> checks;

  /// No check failed.
  bool ok() const;
  std::size_t count(CheckStatus status) const;
};

/// Evaluates T1, T2a-d, T3, T4a-c and T5a-b on the analysis. T2c uses
/// standard_lambda_grid() plus `lambda`.
VerificationRecord verify_theorems(const FamilyAnalysis& a, const Lambda& lambda);

}  // namespace dyncore
