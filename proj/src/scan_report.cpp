#include "irn/scan_report.hpp"

#include <algorithm>

#include "irn/errors.hpp"

namespace irn {

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::verified:
      return "verified";
    case CheckStatus::violated:
      return "violated";
    case CheckStatus::inapplicable:
      return "inapplicable";
  }
  return "inapplicable";
}

void ScanReport::finalize() {
  std::sort(violations.begin(), violations.end());
  std::sort(discrepancies.begin(), discrepancies.end());
  if (!violations.empty())
    status = CheckStatus::violated;
  else if (applicable > 0)
    status = CheckStatus::verified;
  else
    status = CheckStatus::inapplicable;
}

std::string ScanReport::evidence() const {
  const std::string range = std::to_string(lo) + " <= n <= " + std::to_string(hi);
  switch (status) {
    case CheckStatus::verified:
      return "bounded evidence: no counterexample for " + range + "; this is not a proof";
    case CheckStatus::violated:
      return "counterexample found: " + std::to_string(violations.size()) + " violation(s) for " + range;
    case CheckStatus::inapplicable:
      break;
  }
  return "no applicable n for " + range;
}

ScanReport merge_reports(ScanReport a, ScanReport b) {
  if (a.check != b.check) throw RangeError("cannot merge reports of different checks");
  if (a.lo > b.lo) std::swap(a, b);
  if (a.hi >= b.lo) throw RangeError("cannot merge overlapping report ranges");
  if (a.hi + 1 != b.lo) throw RangeError("cannot merge report ranges with a gap");
  a.hi = b.hi;
  a.applicable += b.applicable;
  a.violations.insert(a.violations.end(), b.violations.begin(), b.violations.end());
  a.discrepancies.insert(a.discrepancies.end(), b.discrepancies.begin(), b.discrepancies.end());
  for (const auto& [name, count] : b.tallies) a.tallies[name] += count;
  for (auto& note : b.notes)
    if (std::find(a.notes.begin(), a.notes.end(), note) == a.notes.end()) a.notes.push_back(std::move(note));
  a.elapsed_ms += b.elapsed_ms;
  a.finalize();
  return a;
}

}  // namespace irn
