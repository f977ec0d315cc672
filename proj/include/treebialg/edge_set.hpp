#pragma once

#include <bit>
#include <compare>
#include <cstdint>

namespace treebialg {

/// Subset of the edges of one concrete tree instance.
///
/// Edge `v` is the edge (parent(v), v); bit 0 is never used because vertex 0
/// is always the root.
class EdgeSet {
 public:
  constexpr EdgeSet() = default;
  constexpr explicit EdgeSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr EdgeSet single(int v) { return EdgeSet{std::uint64_t{1} << v}; }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr bool subset_of(EdgeSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool disjoint(EdgeSet other) const { return (bits_ & other.bits_) == 0; }

  constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }

  friend constexpr EdgeSet operator|(EdgeSet a, EdgeSet b) { return EdgeSet{a.bits_ | b.bits_}; }
  friend constexpr EdgeSet operator&(EdgeSet a, EdgeSet b) { return EdgeSet{a.bits_ & b.bits_}; }
  friend constexpr EdgeSet operator-(EdgeSet a, EdgeSet b) { return EdgeSet{a.bits_ & ~b.bits_}; }
  constexpr EdgeSet& operator|=(EdgeSet o) { bits_ |= o.bits_; return *this; }

  constexpr auto operator<=>(const EdgeSet&) const = default;

  /// Calls `f(v)` for every member, ascending.
  template <class F>
  constexpr void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(std::countr_zero(b));
  }

 private:
  std::uint64_t bits_ = 0;
};

/// Calls `f(sub)` for every subset of `set` (including the empty set and `set`).
template <class F>
void for_each_subset(EdgeSet set, F&& f) {
  const std::uint64_t full = set.bits();
  std::uint64_t sub = 0;
  do {
    f(EdgeSet{sub});
    sub = (sub - full) & full;
  } while (sub != 0);
}

}  // namespace treebialg
