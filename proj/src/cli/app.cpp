#include "irn/cli/app.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "irn/classifier.hpp"
#include "irn/cli/format.hpp"
#include "irn/errors.hpp"
#include "irn/index_sigma.hpp"
#include "irn/theorem_lab.hpp"

namespace irn::cli {

namespace {

struct Settings {
  std::uint64_t max = 100000;
  std::vector<std::string> k_filters;
  std::string format = "text";
  std::string out_path;
  unsigned workers = 0;
  std::string checkpoint;
  std::uint64_t sieve_limit = 10000000;
  std::uint64_t chunk_size = ScanOptions::kDefaultChunkSize;
  std::size_t head = 8;
  std::size_t tail = 4;
  std::optional<std::size_t> stop_after_chunks;

  std::vector<std::uint64_t> profile_n;
  std::string alpha;
  std::string check;
  std::string conjecture;
};

/// Owns the optional sieve and the scan options derived from the settings.
class ScanContext {
 public:
  explicit ScanContext(const Settings& s) {
    options_.workers = s.workers == 0 ? std::max(1u, std::thread::hardware_concurrency()) : s.workers;
    options_.chunk_size = s.chunk_size;
    if (s.max >= 2 && s.max <= s.sieve_limit) {
      sieve_ = std::make_unique<SieveTable>(s.max);
      options_.sieve = sieve_.get();
    }
  }
  const ScanOptions& options() const { return options_; }

 private:
  std::unique_ptr<SieveTable> sieve_;
  ScanOptions options_;
};

Format format_of(const Settings& s) {
  auto f = parse_format(s.format);
  if (!f) throw DomainError("unknown format '" + s.format + "' (expected text, csv or json)");
  return *f;
}

std::vector<std::pair<std::string, std::string>> echo_config(const Settings& s, const std::string& command) {
  // Workers, output path and checkpoint path are execution details and stay
  // out of the report so they cannot change its bytes.
  return {{"command", command},
          {"max", std::to_string(s.max)},
          {"sieve_limit", std::to_string(s.sieve_limit)},
          {"chunk_size", std::to_string(s.chunk_size)},
          {"format", s.format}};
}

AlphaSums alpha_sums(std::uint64_t n, const std::string& text) {
  if (text.find_first_of("iIjJ") != std::string::npos)
    throw DomainError("complex alpha is not supported; use a real or integer exponent");
  std::size_t used = 0;
  double value;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw DomainError("alpha '" + text + "' is not a number");
  }
  if (used != text.size() || !std::isfinite(value)) throw DomainError("alpha '" + text + "' is not a finite number");
  if (value == std::trunc(value) && std::abs(value) <= 64) {
    const auto s = parity_sums_int(n, static_cast<int>(value));
    return {text, s.sigma_e.to_string(), s.sigma_o.to_string()};
  }
  const auto s = parity_sums_real(n, value);
  auto fmt = [](double v) {
    std::ostringstream o;
    o << std::setprecision(17) << v;
    return o.str();
  };
  return {text, fmt(s.sigma_e), fmt(s.sigma_o)};
}

int cmd_profile(const Settings& s, std::ostream& out) {
  std::vector<ProfileRecord> rows;
  std::vector<AlphaSums> alpha;
  for (std::uint64_t n : s.profile_n) {
    if (n == 0) throw DomainError("profile needs n >= 1");
    rows.push_back(to_record(profile(n)));
    if (!s.alpha.empty()) alpha.push_back(alpha_sums(n, s.alpha));
  }
  write_profiles(out, format_of(s), rows, alpha);
  return kExitOk;
}

int cmd_table(const Settings& s, std::ostream& out, std::ostream& err, const std::atomic<bool>* cancel) {
  if (s.max == 0) throw DomainError("--max must be at least 1");
  const Format format = format_of(s);
  const bool keep_members = format == Format::json;
  std::vector<Rational> keys;
  for (const auto& text : s.k_filters) {
    try {
      keys.push_back(Rational::parse(text));
    } catch (const Error&) {
      throw DomainError("cannot parse k '" + text + "' as a non-negative rational");
    }
  }
  const ScanContext ctx(s);
  std::vector<ClassRecord> rows;
  if (!keys.empty()) {
    auto found = members_of_keys(keys, s.max, ctx.options());
    for (std::size_t i = 0; i < keys.size(); ++i) rows.push_back(to_record(keys[i], found[i], s.head, s.tail, keep_members));
  } else {
    GkTable table;
    if (!s.checkpoint.empty()) {
      CheckpointControl control{s.checkpoint, s.stop_after_chunks, cancel};
      auto result = scan_range_resumable(1, s.max, ctx.options(), control);
      if (!result.complete) {
        err << "scan stopped at n = " << (result.table.range() ? result.table.range()->hi : 0)
            << "; checkpoint saved to " << s.checkpoint << ", rerun the same command to resume\n";
        return kExitUsage;
      }
      table = std::move(result.table);
    } else {
      table = scan_range(1, s.max, ctx.options());
    }
    for (const auto& [k, members] : table.by_smallest_member())
      rows.push_back(to_record(k, members, s.head, s.tail, keep_members));
  }
  write_classes(out, format, 1, s.max, rows);
  return kExitOk;
}

int report_exit(const ScanReport& r) { return r.status == CheckStatus::violated ? kExitViolation : kExitOk; }

int cmd_verify(const Settings& s, std::ostream& out) {
  const auto id = parse_check(s.check);
  if (!id || *id == CheckId::conjecture1 || *id == CheckId::conjecture2 || *id == CheckId::conjecture3)
    throw DomainError("unknown check '" + s.check +
                      "' (expected upper-bound, lower-bound, sigma-bounds, multiplier, pairing, "
                      "prime-power-distinct or unit-fraction)");
  const Format format = format_of(s);
  const ScanContext ctx(s);
  ScanReport report = run_check(*id, default_lower(*id), s.max, ctx.options());
  report.config = echo_config(s, "verify " + s.check);
  write_report(out, format, report);
  return report_exit(report);
}

int cmd_scan(const Settings& s, std::ostream& out) {
  CheckId id;
  if (s.conjecture == "1")
    id = CheckId::conjecture1;
  else if (s.conjecture == "2")
    id = CheckId::conjecture2;
  else if (s.conjecture == "3")
    id = CheckId::conjecture3;
  else
    throw DomainError("unknown conjecture id '" + s.conjecture + "' (expected 1, 2 or 3)");
  const Format format = format_of(s);
  const ScanContext ctx(s);
  ScanReport report = run_check(id, default_lower(id), s.max, ctx.options());
  report.config = echo_config(s, "scan " + s.conjecture);
  write_report(out, format, report);
  return report_exit(report);
}

int cmd_irn(const Settings& s, std::ostream& out) {
  if (s.max == 0) throw DomainError("--max must be at least 1");
  const Format format = format_of(s);
  const ScanContext ctx(s);
  write_index_ratio(out, format, s.max, enumerate_index_ratio(s.max, ctx.options()));
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const std::atomic<bool>* cancel) {
  Settings s;
  CLI::App app{"Index-parity divisor sums, k-index ratio classes and their checks", "irn"};
  app.set_config("--config", "", "Read key=value settings from a file (command line wins)");
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();

  app.add_option("--max", s.max, "Upper end of the scanned range")->envname("IRN_MAX");
  app.add_option("--k", s.k_filters, "Restrict `table` to this k (repeatable), e.g. 47/25")->envname("IRN_K");
  app.add_option("--format", s.format, "Output format: text, csv or json")->envname("IRN_FORMAT");
  app.add_option("--out", s.out_path, "Write output to FILE instead of stdout")->envname("IRN_OUT");
  app.add_option("--workers", s.workers, "Worker threads (0 = hardware concurrency)")->envname("IRN_WORKERS");
  app.add_option("--checkpoint", s.checkpoint, "Resumable `table` scan state file")->envname("IRN_CHECKPOINT");
  app.add_option("--sieve-limit", s.sieve_limit, "Largest range served by a full smallest-prime-factor table")
      ->envname("IRN_SIEVE_LIMIT");
  app.add_option("--chunk-size", s.chunk_size, "Integers per work chunk")
      ->envname("IRN_CHUNK_SIZE")
      ->check(CLI::PositiveNumber);
  app.add_option("--head", s.head, "Leading members shown per class in text/csv")->envname("IRN_HEAD");
  app.add_option("--tail", s.tail, "Trailing members shown per class in text/csv")->envname("IRN_TAIL");
  app.add_option("--stop-after-chunks", s.stop_after_chunks)->group("");  // simulates an interrupted run

  auto* profile_cmd = app.add_subcommand("profile", "Divisors, tau, sigma_e, sigma_o and k of each n");
  profile_cmd->add_option("n", s.profile_n, "Positive integers")->required();
  profile_cmd->add_option("--alpha", s.alpha, "Also print the alpha-th power sums (integer: exact, real: float)");
  auto* table_cmd = app.add_subcommand("table", "G_k classes of [1, max]");
  auto* verify_cmd = app.add_subcommand("verify", "Check a theorem over a range");
  verify_cmd->add_option("check", s.check, "upper-bound | lower-bound | sigma-bounds | multiplier | pairing | "
                                           "prime-power-distinct | unit-fraction")
      ->required();
  auto* scan_cmd = app.add_subcommand("scan", "Search a conjecture for counterexamples");
  scan_cmd->add_option("id", s.conjecture, "1 | 2 | 3")->required();
  auto* irn_cmd = app.add_subcommand("irn", "List the index ratio numbers <= max");
  for (auto* sub : {profile_cmd, table_cmd, verify_cmd, scan_cmd, irn_cmd}) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!s.out_path.empty()) {
    file.open(s.out_path, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "error: cannot open " << s.out_path << " for writing\n";
      return kExitUsage;
    }
    sink = &file;
  }

  try {
    if (*profile_cmd) return cmd_profile(s, *sink);
    if (*table_cmd) return cmd_table(s, *sink, err, cancel);
    if (*verify_cmd) return cmd_verify(s, *sink);
    if (*scan_cmd) return cmd_scan(s, *sink);
    if (*irn_cmd) return cmd_irn(s, *sink);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace irn::cli
