#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace irn {

enum class CheckStatus { verified, violated, inapplicable };

std::string_view to_string(CheckStatus status);

/// One failing n. Re-checkable from n alone (see recheck()).
struct Violation {
  std::uint64_t n = 0;
  std::string expected;
  std::string actual;
  friend auto operator<=>(const Violation&, const Violation&) = default;
};

struct ScanReport {
  std::string check;
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  CheckStatus status = CheckStatus::inapplicable;
  /// Number of n (or n-instances) the statement applied to.
  std::uint64_t applicable = 0;
  std::vector<Violation> violations;
  /// Clauses evaluated and reported but not asserted; never affect status.
  std::vector<Violation> discrepancies;
  /// Named counters, e.g. equality cases of a bound.
  std::map<std::string, std::uint64_t> tallies;
  std::vector<std::string> notes;
  std::int64_t elapsed_ms = 0;
  /// Effective configuration, echoed by the CLI.
  std::vector<std::pair<std::string, std::string>> config;

  /// Recomputes status from applicable/violations.
  void finalize();
  /// Fixed wording; a clean scan is bounded evidence, not a proof.
  std::string evidence() const;
};

/// Combines reports of the same check over adjacent ranges (either order).
/// Throws RangeError on overlap, gap, or differing check ids.
ScanReport merge_reports(ScanReport a, ScanReport b);

}  // namespace irn
