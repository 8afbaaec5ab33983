#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

namespace guise {

/// Index of a mark in its model's universe (declaration order).
using MarkId = std::uint32_t;

inline constexpr std::size_t kMaxMarks = 64;

/// A finite set of marks, stored as a bitmask over declaration indices.
///
/// Propositions, guise bundles, worlds and closures are all MarkSets; which
/// names the bits carry is the business of the owning model's Universe.
class MarkSet {
 public:
  constexpr MarkSet() = default;
  constexpr explicit MarkSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr MarkSet singleton(MarkId m) { return MarkSet(std::uint64_t{1} << m); }
  /// The set {0, ..., n-1}.
  static constexpr MarkSet first_n(std::size_t n) {
    return MarkSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(MarkId m) const { return (bits_ >> m) & 1U; }
  constexpr bool subset_of(MarkSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(MarkSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr void insert(MarkId m) { bits_ |= std::uint64_t{1} << m; }
  constexpr void erase(MarkId m) { bits_ &= ~(std::uint64_t{1} << m); }

  constexpr MarkSet operator|(MarkSet o) const { return MarkSet(bits_ | o.bits_); }
  constexpr MarkSet operator&(MarkSet o) const { return MarkSet(bits_ & o.bits_); }
  constexpr MarkSet operator-(MarkSet o) const { return MarkSet(bits_ & ~o.bits_); }
  constexpr MarkSet& operator|=(MarkSet o) { bits_ |= o.bits_; return *this; }
  constexpr MarkSet& operator&=(MarkSet o) { bits_ &= o.bits_; return *this; }

  constexpr bool operator==(const MarkSet&) const = default;

  /// Member indices in ascending (declaration) order.
  std::vector<MarkId> members() const;

 private:
  std::uint64_t bits_ = 0;
};

/// Canonical proposition order: smaller sets first, equal sizes compared
/// lexicographically on their ascending index sequences. Singletons thus come
/// first, in mark declaration order.
bool canonical_less(MarkSet lhs, MarkSet rhs);

struct CanonicalLess {
  bool operator()(MarkSet lhs, MarkSet rhs) const { return canonical_less(lhs, rhs); }
};

/// Visits every subset of `base` in canonical order. The visitor returns
/// false to stop early; the function returns false iff it was stopped.
bool for_each_subset(MarkSet base, const std::function<bool(MarkSet)>& visit);

/// All subsets of `base` in canonical order (2^|base| entries).
std::vector<MarkSet> subsets_of(MarkSet base);

/// All non-empty subsets of `base` in canonical order.
std::vector<MarkSet> nonempty_subsets_of(MarkSet base);

}  // namespace guise

template <>
struct std::hash<guise::MarkSet> {
  std::size_t operator()(guise::MarkSet s) const noexcept { return std::hash<std::uint64_t>{}(s.bits()); }
};
