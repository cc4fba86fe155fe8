#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "irn/parallel.hpp"
#include "irn/rational.hpp"

namespace irn {

/// G_k classes found in a closed range: each integer of the range sits in
/// exactly one class, keyed by k(n), with members ascending.
class GkTable {
 public:
  using Classes = std::map<Rational, std::vector<std::uint64_t>>;

  /// Empty-range table; the identity for merge_tables.
  GkTable() = default;
  GkTable(std::uint64_t lo, std::uint64_t hi);

  /// Appends n to class k. n must lie in the range and exceed the class's
  /// current last member.
  void add(const Rational& k, std::uint64_t n);

  const std::optional<ClosedRange>& range() const noexcept { return range_; }
  const Classes& classes() const noexcept { return classes_; }
  std::span<const std::uint64_t> members(const Rational& k) const;
  std::size_t member_count() const noexcept;

  /// Classes ordered by smallest member ascending.
  std::vector<std::pair<Rational, std::span<const std::uint64_t>>> by_smallest_member() const;

  friend bool operator==(const GkTable&, const GkTable&) = default;

 private:
  friend GkTable merge_tables(GkTable a, GkTable b);

  std::optional<ClosedRange> range_;
  Classes classes_;
};

/// Exact per-key union of tables over adjacent, disjoint ranges (either
/// order). Throws RangeError on overlap or gap.
GkTable merge_tables(GkTable a, GkTable b);

}  // namespace irn
