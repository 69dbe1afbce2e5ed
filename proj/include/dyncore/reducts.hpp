#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "dyncore/attr_set.hpp"
#include "dyncore/execution.hpp"
#include "dyncore/roughset.hpp"
#include "dyncore/table.hpp"

namespace dyncore {

/// A canonically ordered, duplicate-free collection of attribute sets.
///
/// Every reduct set produced by the engine is an antichain; the container
/// itself only guarantees order and uniqueness, so derived collections
/// (e.g. lambda-thresholded ones) can be checked with is_antichain().
class ReductSet {
 public:
  ReductSet() = default;
  /// Sorts into canonical order and drops duplicates.
  explicit ReductSet(std::vector<AttrSet> sets);
  ReductSet(std::initializer_list<AttrSet> sets)
      : ReductSet(std::vector<AttrSet>(sets)) {}

  std::span<const AttrSet> sets() const { return sets_; }
  auto begin() const { return sets_.begin(); }
  auto end() const { return sets_.end(); }
  std::size_t size() const { return sets_.size(); }
  bool empty() const { return sets_.empty(); }
  bool contains(AttrSet s) const;
  bool is_antichain() const;

  friend bool operator==(const ReductSet&, const ReductSet&) = default;

 private:
  std::vector<AttrSet> sets_;
};

/// Set intersection of two reduct sets (elements compared as whole sets).
ReductSet intersect(const ReductSet& a, const ReductSet& b);

/// ⋂ of the members of `sets`. The intersection over an empty collection is
/// `universe` (normally C); over {∅} it is ∅.
AttrSet intersect_all(const ReductSet& sets, AttrSet universe);

struct EnumerationLimits {
  std::size_t max_attributes = 24;
  std::size_t max_reducts = 100000;
};

/// A monotone CNF over condition attributes: one clause per distinct
/// minimal matrix cell, with no clause containing another.
class DiscernibilityFunction {
 public:
  /// Deduplicates and absorbs. Clauses are kept shortest-first, ties in
  /// canonical order. Throws DomainError on an empty clause.
  explicit DiscernibilityFunction(std::vector<AttrSet> clauses);
  static DiscernibilityFunction from_matrix(const DiscernibilityMatrix& matrix);

  std::span<const AttrSet> clauses() const { return clauses_; }

  friend bool operator==(const DiscernibilityFunction&,
                         const DiscernibilityFunction&) = default;

 private:
  std::vector<AttrSet> clauses_;
};

/// Prime implicants of the function: distributes one clause at a time and
/// absorbs after every step. An empty function yields {∅}. Throws
/// CapacityError once the working set exceeds max_terms.
ReductSet prime_implicants(const DiscernibilityFunction& function,
                           std::size_t max_terms);

/// Every relative reduct of `table`. CapacityError when |C| exceeds
/// limits.max_attributes or the enumeration exceeds limits.max_reducts.
ReductSet all_reducts(const SubSystem& table,
                      const EnumerationLimits& limits = {},
                      Execution exec = Execution::parallel);

/// Attributes forming singleton cells of the discernibility matrix; equal to
/// the intersection of all reducts. Needs no enumeration.
AttrSet core_of(const SubSystem& table, Execution exec = Execution::parallel);

}  // namespace dyncore
