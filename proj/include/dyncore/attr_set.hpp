#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace dyncore {

/// Hard upper bound on condition attributes representable in an AttrSet.
inline constexpr std::size_t kMaxAttributes = 64;

/// A subset of the condition attributes C, stored as a bit mask.
///
/// Ordering is lexicographic over the ascending index sequence, so
/// {0} < {0,1} < {0,2} < {1} and the empty set sorts first. This is the
/// canonical order used by ReductSet.
class AttrSet {
 public:
  constexpr AttrSet() = default;

  static constexpr AttrSet from_mask(std::uint64_t mask) {
    AttrSet s;
    s.mask_ = mask;
    return s;
  }
  static AttrSet of(std::initializer_list<std::size_t> indices);
  static AttrSet of(std::span<const std::size_t> indices);
  /// {0, ..., n-1}. Throws CapacityError when n exceeds kMaxAttributes.
  static AttrSet full(std::size_t n);

  constexpr std::uint64_t mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr std::size_t size() const {
    return static_cast<std::size_t>(std::popcount(mask_));
  }
  constexpr bool contains(std::size_t index) const {
    return index < kMaxAttributes && ((mask_ >> index) & 1U) != 0;
  }
  constexpr bool is_subset_of(AttrSet other) const {
    return (mask_ & ~other.mask_) == 0;
  }
  constexpr bool intersects(AttrSet other) const {
    return (mask_ & other.mask_) != 0;
  }

  void insert(std::size_t index);
  void erase(std::size_t index);

  /// Ascending attribute indices.
  std::vector<std::size_t> indices() const;
  /// Smallest member. Precondition: !empty().
  constexpr std::size_t front() const {
    return static_cast<std::size_t>(std::countr_zero(mask_));
  }

  friend constexpr AttrSet operator&(AttrSet a, AttrSet b) {
    return from_mask(a.mask_ & b.mask_);
  }
  friend constexpr AttrSet operator|(AttrSet a, AttrSet b) {
    return from_mask(a.mask_ | b.mask_);
  }
  /// Set difference.
  friend constexpr AttrSet operator-(AttrSet a, AttrSet b) {
    return from_mask(a.mask_ & ~b.mask_);
  }

  friend constexpr bool operator==(AttrSet a, AttrSet b) = default;
  friend std::strong_ordering operator<=>(AttrSet a, AttrSet b);

 private:
  std::uint64_t mask_ = 0;
};

/// Renders as "{a,b}" using the given attribute names, in index order.
std::string to_string(AttrSet set, std::span<const std::string> names);

}  // namespace dyncore
