#include "dyncore/reducts.hpp"

#include <algorithm>
#include <string>

#include "dyncore/errors.hpp"

namespace dyncore {

namespace {

bool shorter_first(AttrSet a, AttrSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

/// Keeps only the inclusion-minimal sets. Input may contain duplicates.
std::vector<AttrSet> minimal_sets(std::vector<AttrSet> sets) {
  std::sort(sets.begin(), sets.end(), shorter_first);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<AttrSet> kept;
  kept.reserve(sets.size());
  for (AttrSet s : sets) {
    const bool absorbed = std::any_of(kept.begin(), kept.end(), [&](AttrSet k) {
      return k.is_subset_of(s);
    });
    if (!absorbed) kept.push_back(s);
  }
  return kept;
}

}  // namespace

ReductSet::ReductSet(std::vector<AttrSet> sets) : sets_(std::move(sets)) {
  std::sort(sets_.begin(), sets_.end());
  sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
}

bool ReductSet::contains(AttrSet s) const {
  return std::binary_search(sets_.begin(), sets_.end(), s);
}

bool ReductSet::is_antichain() const {
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    for (std::size_t j = 0; j < sets_.size(); ++j) {
      if (i != j && sets_[i].is_subset_of(sets_[j])) return false;
    }
  }
  return true;
}

ReductSet intersect(const ReductSet& a, const ReductSet& b) {
  std::vector<AttrSet> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return ReductSet(std::move(out));
}

AttrSet intersect_all(const ReductSet& sets, AttrSet universe) {
  AttrSet acc = universe;
  for (AttrSet s : sets) acc = acc & s;
  return acc;
}

DiscernibilityFunction::DiscernibilityFunction(std::vector<AttrSet> clauses) {
  for (AttrSet c : clauses) {
    if (c.empty()) throw DomainError("discernibility clause is empty");
  }
  clauses_ = minimal_sets(std::move(clauses));
}

DiscernibilityFunction DiscernibilityFunction::from_matrix(
    const DiscernibilityMatrix& matrix) {
  std::vector<AttrSet> clauses;
  clauses.reserve(matrix.cells.size());
  for (const auto& cell : matrix.cells) clauses.push_back(cell.attrs);
  return DiscernibilityFunction(std::move(clauses));
}

ReductSet prime_implicants(const DiscernibilityFunction& function,
                           std::size_t max_terms) {
  std::vector<AttrSet> terms{AttrSet{}};
  for (AttrSet clause : function.clauses()) {
    std::vector<AttrSet> next;
    next.reserve(terms.size() * 2);
    for (AttrSet t : terms) {
      if (t.intersects(clause)) {
        next.push_back(t);
        continue;
      }
      for (std::size_t a : clause.indices()) {
        AttrSet grown = t;
        grown.insert(a);
        next.push_back(grown);
      }
    }
    terms = minimal_sets(std::move(next));
    if (terms.size() > max_terms) {
      throw CapacityError("reduct enumeration exceeded the cap of " +
                          std::to_string(max_terms) + " reducts");
    }
  }
  return ReductSet(std::move(terms));
}

ReductSet all_reducts(const SubSystem& table, const EnumerationLimits& limits,
                      Execution exec) {
  const std::size_t width = table.parent().num_attributes();
  if (width > limits.max_attributes) {
    throw CapacityError(std::to_string(width) +
                        " condition attributes exceed the enumeration limit of " +
                        std::to_string(limits.max_attributes));
  }
  const auto function =
      DiscernibilityFunction::from_matrix(discernibility_matrix(table, exec));
  return prime_implicants(function, limits.max_reducts);
}

AttrSet core_of(const SubSystem& table, Execution exec) {
  AttrSet core;
  for (const auto& cell : discernibility_matrix(table, exec).cells) {
    if (cell.attrs.size() == 1) core = core | cell.attrs;
  }
  return core;
}

}  // namespace dyncore
