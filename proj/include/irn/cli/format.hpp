#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "irn/checked.hpp"
#include "irn/gk_table.hpp"
#include "irn/index_sigma.hpp"
#include "irn/rational.hpp"
#include "irn/scan_report.hpp"

namespace irn::cli {

enum class Format { text, csv, json };

std::optional<Format> parse_format(std::string_view name);

/// Per-n output row. CSV carries the fixed columns
/// n, tau, sigma_e, sigma_o, k, is_index_ratio; JSON adds the divisor list.
struct ProfileRecord {
  std::uint64_t n = 1;
  std::uint64_t tau = 1;
  wide_int sigma_e = 0;
  wide_int sigma_o = 1;
  Rational k;
  bool is_index_ratio = true;
  std::vector<std::uint64_t> divisors;

  friend bool operator==(const ProfileRecord&, const ProfileRecord&) = default;
};

ProfileRecord to_record(const DivisorProfile& profile);

/// Per-class output row: a G_k with its size and leading/trailing members.
/// `members` holds the complete class when known (JSON carries it).
struct ClassRecord {
  Rational k;
  std::uint64_t count = 0;
  std::vector<std::uint64_t> first;
  std::vector<std::uint64_t> last;
  std::optional<std::vector<std::uint64_t>> members;

  friend bool operator==(const ClassRecord&, const ClassRecord&) = default;
};

/// first = up to `head` leading members; last = up to `tail` trailing
/// members not already in first.
ClassRecord to_record(const Rational& k, std::span<const std::uint64_t> members, std::size_t head, std::size_t tail,
                      bool keep_members);

inline constexpr std::string_view kProfileCsvHeader = "n,tau,sigma_e,sigma_o,k,is_index_ratio";
inline constexpr std::string_view kClassCsvHeader = "k,count,first,last";

std::string profile_csv_row(const ProfileRecord& r);
ProfileRecord parse_profile_csv_row(std::string_view line);
std::string profile_json(const ProfileRecord& r);
ProfileRecord parse_profile_json(std::string_view text);

std::string class_csv_row(const ClassRecord& r);
ClassRecord parse_class_csv_row(std::string_view line);
std::string class_json(const ClassRecord& r);
ClassRecord parse_class_json(std::string_view text);

/// Extra exponent sums shown by `profile --alpha`; text and JSON only.
struct AlphaSums {
  std::string alpha;
  std::string sigma_e;
  std::string sigma_o;
};

/// `alpha`, when non-empty, holds one entry per row.
void write_profiles(std::ostream& out, Format format, const std::vector<ProfileRecord>& rows,
                    const std::vector<AlphaSums>& alpha = {});

void write_classes(std::ostream& out, Format format, std::uint64_t lo, std::uint64_t hi,
                   const std::vector<ClassRecord>& rows);

void write_report(std::ostream& out, Format format, const ScanReport& report);

void write_index_ratio(std::ostream& out, Format format, std::uint64_t limit, const std::vector<std::uint64_t>& members);

}  // namespace irn::cli
