#include "irn/gk_table.hpp"

#include <algorithm>
#include <string>

#include "irn/errors.hpp"

namespace irn {

GkTable::GkTable(std::uint64_t lo, std::uint64_t hi) {
  if (lo == 0 || lo > hi) throw DomainError("table range must satisfy 1 <= lo <= hi");
  range_ = ClosedRange{lo, hi};
}

void GkTable::add(const Rational& k, std::uint64_t n) {
  if (!range_ || n < range_->lo || n > range_->hi)
    throw DomainError(std::to_string(n) + " is outside the table range");
  auto& members = classes_[k];
  if (!members.empty() && members.back() >= n) throw DomainError("members must be added in ascending order");
  members.push_back(n);
}

std::span<const std::uint64_t> GkTable::members(const Rational& k) const {
  auto it = classes_.find(k);
  if (it == classes_.end()) return {};
  return it->second;
}

std::size_t GkTable::member_count() const noexcept {
  std::size_t total = 0;
  for (const auto& [k, members] : classes_) total += members.size();
  return total;
}

std::vector<std::pair<Rational, std::span<const std::uint64_t>>> GkTable::by_smallest_member() const {
  std::vector<std::pair<Rational, std::span<const std::uint64_t>>> rows;
  rows.reserve(classes_.size());
  for (const auto& [k, members] : classes_) rows.emplace_back(k, members);
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.second.front() < b.second.front(); });
  return rows;
}

GkTable merge_tables(GkTable a, GkTable b) {
  if (!a.range_) return b;
  if (!b.range_) return a;
  if (a.range_->lo > b.range_->lo) std::swap(a, b);
  if (a.range_->hi >= b.range_->lo) throw RangeError("cannot merge overlapping table ranges");
  if (a.range_->hi + 1 != b.range_->lo) throw RangeError("cannot merge table ranges with a gap");
  a.range_->hi = b.range_->hi;
  for (auto& [k, members] : b.classes_) {
    auto& target = a.classes_[k];
    target.insert(target.end(), members.begin(), members.end());
  }
  return a;
}

}  // namespace irn
