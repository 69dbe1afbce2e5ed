#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dyncore/attr_set.hpp"
#include "dyncore/rational.hpp"

namespace dyncore {

using ValueCode = std::uint32_t;
using ObjectIndex = std::size_t;

/// Raw string values of one column, indexed by dense code in
/// first-occurrence order.
class ValueDictionary {
 public:
  /// Returns the code for `value`, assigning the next code if unseen.
  ValueCode intern(std::string_view value);
  const std::string& value(ValueCode code) const { return values_.at(code); }
  std::size_t size() const { return values_.size(); }
  std::span<const std::string> values() const { return values_; }

  friend bool operator==(const ValueDictionary&,
                         const ValueDictionary&) = default;

 private:
  std::vector<std::string> values_;
};

/// A decision table S = (U, C ∪ {d}) with coded values. Immutable.
class DecisionSystem {
 public:
  /// Validates every invariant: at least one row, unique attribute names,
  /// decision name not among the condition names, row widths, and codes
  /// within their dictionaries. Throws SchemaError otherwise.
  DecisionSystem(std::string id, std::vector<std::string> condition_names,
                 std::string decision_name,
                 std::vector<ValueDictionary> condition_dictionaries,
                 ValueDictionary decision_dictionary,
                 std::vector<std::vector<ValueCode>> condition_rows,
                 std::vector<ValueCode> decisions);

  /// Builds a table directly from integer codes. Each column is re-coded
  /// densely in first-occurrence order, with the original integer as the
  /// raw string. Attribute names default to c0, c1, ...
  static DecisionSystem from_codes(
      const std::vector<std::vector<ValueCode>>& condition_rows,
      const std::vector<ValueCode>& decisions,
      std::vector<std::string> condition_names = {},
      std::string decision_name = "d");

  const std::string& id() const { return id_; }
  std::size_t num_objects() const { return decisions_.size(); }
  std::size_t num_attributes() const { return condition_names_.size(); }

  ValueCode value(ObjectIndex row, std::size_t attr) const {
    return codes_[row * num_attributes() + attr];
  }
  std::span<const ValueCode> row(ObjectIndex row) const {
    return {codes_.data() + row * num_attributes(), num_attributes()};
  }
  ValueCode decision(ObjectIndex row) const { return decisions_[row]; }

  std::span<const std::string> attribute_names() const {
    return condition_names_;
  }
  const std::string& attribute_name(std::size_t attr) const {
    return condition_names_.at(attr);
  }
  const std::string& decision_name() const { return decision_name_; }
  const ValueDictionary& dictionary(std::size_t attr) const {
    return condition_dictionaries_.at(attr);
  }
  const ValueDictionary& decision_dictionary() const {
    return decision_dictionary_;
  }

  /// The full condition attribute set C.
  AttrSet all_attributes() const { return AttrSet::full(num_attributes()); }

  /// Equality of content; the id is a label and is ignored.
  friend bool operator==(const DecisionSystem& a, const DecisionSystem& b);

 private:
  std::string id_;
  std::vector<std::string> condition_names_;
  std::string decision_name_;
  std::vector<ValueDictionary> condition_dictionaries_;
  ValueDictionary decision_dictionary_;
  std::vector<ValueCode> codes_;  // row-major, num_objects x num_attributes
  std::vector<ValueCode> decisions_;
};

/// A row-subset view B = (U', C ∪ {d}) of a parent system.
class SubSystem {
 public:
  /// Takes `objects` as-is; they must already be strictly increasing,
  /// nonempty and in range (DomainError otherwise). Use make_subsystem for
  /// unsorted input.
  SubSystem(std::shared_ptr<const DecisionSystem> parent,
            std::vector<ObjectIndex> objects);

  /// The subsystem U' = U.
  static SubSystem whole(std::shared_ptr<const DecisionSystem> parent);

  const DecisionSystem& parent() const { return *parent_; }
  const std::shared_ptr<const DecisionSystem>& parent_ptr() const {
    return parent_;
  }
  std::span<const ObjectIndex> objects() const { return objects_; }
  std::size_t size() const { return objects_.size(); }
  bool covers_parent() const { return objects_.size() == parent_->num_objects(); }

  friend bool operator==(const SubSystem& a, const SubSystem& b) {
    return a.parent_ == b.parent_ && a.objects_ == b.objects_;
  }

 private:
  std::shared_ptr<const DecisionSystem> parent_;
  std::vector<ObjectIndex> objects_;
};

struct SamplingPlan {
  std::uint64_t seed = 0;
  std::vector<Rational> fractions;
  std::size_t samples_per_fraction = 1;

  friend bool operator==(const SamplingPlan&, const SamplingPlan&) = default;
};

/// An ordered multiset of subsystems sharing one parent.
class Family {
 public:
  /// Throws DomainError when empty or when members disagree on the parent.
  explicit Family(std::vector<SubSystem> members,
                  std::optional<SamplingPlan> plan = std::nullopt);

  std::span<const SubSystem> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  const SubSystem& operator[](std::size_t i) const { return members_[i]; }
  const std::optional<SamplingPlan>& plan() const { return plan_; }
  const DecisionSystem& parent() const { return members_.front().parent(); }

  friend bool operator==(const Family&, const Family&) = default;

 private:
  std::vector<SubSystem> members_;
  std::optional<SamplingPlan> plan_;
};

/// Parses a comma-separated table with a header row. Condition attributes
/// keep header order with the decision column removed.
/// Errors: ParseError (ragged row, no header), MissingValueError (empty
/// cell), SchemaError (unknown decision column, duplicate names, no rows).
DecisionSystem parse_decision_table(std::string_view text,
                                    std::string_view decision_column,
                                    std::string id = {});

/// Writes the table back as CSV, condition columns first, decision last.
std::string write_decision_table(const DecisionSystem& system);

/// Sorts and deduplicates `indices`. DomainError when empty or out of range.
SubSystem make_subsystem(std::shared_ptr<const DecisionSystem> system,
                         std::vector<ObjectIndex> indices);

/// Draws plan.samples_per_fraction subsystems of size ceil(f * |U|) for each
/// fraction f, ordered by (fraction, sample). Pure function of its inputs.
/// ParameterError when a fraction is outside (0, 1] or samples is zero.
Family sample_family(std::shared_ptr<const DecisionSystem> system,
                     const SamplingPlan& plan);

/// splitmix64, bit-exact with the reference sequence.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform in [0, n) by rejection sampling. Precondition: n > 0.
  std::uint64_t bounded(std::uint64_t n);

 private:
  std::uint64_t state_;
};

/// m distinct indices from [0, n), sorted, via partial Fisher-Yates.
std::vector<ObjectIndex> sample_indices(SplitMix64& rng, std::size_t n,
                                        std::size_t m);

}  // namespace dyncore
