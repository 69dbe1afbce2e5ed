#include "dyncore/attr_set.hpp"

#include "dyncore/errors.hpp"

namespace dyncore {

namespace {

void check_index(std::size_t index) {
  if (index >= kMaxAttributes) {
    throw CapacityError("attribute index " + std::to_string(index) +
                        " exceeds the limit of " +
                        std::to_string(kMaxAttributes) + " attributes");
  }
}

}  // namespace

AttrSet AttrSet::of(std::initializer_list<std::size_t> indices) {
  return of(std::span<const std::size_t>(indices.begin(), indices.size()));
}

AttrSet AttrSet::of(std::span<const std::size_t> indices) {
  AttrSet s;
  for (std::size_t i : indices) s.insert(i);
  return s;
}

AttrSet AttrSet::full(std::size_t n) {
  if (n > kMaxAttributes) {
    throw CapacityError(std::to_string(n) +
                        " condition attributes exceed the hard limit of " +
                        std::to_string(kMaxAttributes));
  }
  return from_mask(n == kMaxAttributes ? ~std::uint64_t{0}
                                       : (std::uint64_t{1} << n) - 1);
}

void AttrSet::insert(std::size_t index) {
  check_index(index);
  mask_ |= std::uint64_t{1} << index;
}

void AttrSet::erase(std::size_t index) {
  if (index < kMaxAttributes) mask_ &= ~(std::uint64_t{1} << index);
}

std::vector<std::size_t> AttrSet::indices() const {
  std::vector<std::size_t> out;
  out.reserve(size());
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
  }
  return out;
}

std::strong_ordering operator<=>(AttrSet a, AttrSet b) {
  // Walk both index sequences in lockstep; a proper prefix sorts first.
  std::uint64_t x = a.mask_;
  std::uint64_t y = b.mask_;
  while (x != 0 && y != 0) {
    const int i = std::countr_zero(x);
    const int j = std::countr_zero(y);
    if (i != j) return i <=> j;
    x &= x - 1;
    y &= y - 1;
  }
  if (x == 0 && y == 0) return std::strong_ordering::equal;
  return x == 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::string to_string(AttrSet set, std::span<const std::string> names) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i : set.indices()) {
    if (!first) out += ',';
    first = false;
    out += i < names.size() ? names[i] : std::to_string(i);
  }
  out += '}';
  return out;
}

}  // namespace dyncore
