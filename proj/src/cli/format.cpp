#include "irn/cli/format.hpp"

#include <algorithm>
#include <iomanip>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "irn/errors.hpp"

namespace irn::cli {

namespace {

using Json = nlohmann::ordered_json;

std::uint64_t to_u64(wide_int v) {
  if (v < 0 || v > static_cast<wide_int>(std::numeric_limits<std::uint64_t>::max()))
    throw OverflowError("value " + to_string(v) + " does not fit a JSON integer");
  return static_cast<std::uint64_t>(v);
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(sep, start);
    out.emplace_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::uint64_t parse_u64(std::string_view token) {
  wide_int v = parse_wide(token);
  if (v < 0 || v > static_cast<wide_int>(std::numeric_limits<std::uint64_t>::max()))
    throw ParseError("not an unsigned 64-bit integer: " + std::string(token));
  return static_cast<std::uint64_t>(v);
}

bool parse_bool(std::string_view token) {
  if (token == "true") return true;
  if (token == "false") return false;
  throw ParseError("not a boolean: " + std::string(token));
}

std::string join(std::span<const std::uint64_t> values, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

std::vector<std::uint64_t> parse_list(std::string_view text) {
  std::vector<std::uint64_t> out;
  if (text.empty()) return out;
  for (const auto& token : split(text, ' ')) out.push_back(parse_u64(token));
  return out;
}

Json profile_to_json(const ProfileRecord& r) {
  Json j;
  j["n"] = r.n;
  j["divisors"] = r.divisors;
  j["tau"] = r.tau;
  j["sigma_e"] = to_u64(r.sigma_e);
  j["sigma_o"] = to_u64(r.sigma_o);
  j["k"] = r.k.to_string();
  j["is_index_ratio"] = r.is_index_ratio;
  return j;
}

Json class_to_json(const ClassRecord& r) {
  Json j;
  j["k"] = r.k.to_string();
  j["count"] = r.count;
  j["first"] = r.first;
  j["last"] = r.last;
  if (r.members) j["members"] = *r.members;
  return j;
}

template <class Fn>
auto guarded_json(std::string_view text, Fn fn) {
  try {
    return fn(Json::parse(text));
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed JSON record: ") + e.what());
  }
}

std::string text_member_list(const ClassRecord& r) {
  std::string out = join(r.first, ", ");
  if (r.last.empty()) return out;
  const bool gap = r.count > r.first.size() + r.last.size();
  out += gap ? ", ..., " : ", ";
  return out + join(r.last, ", ");
}

}  // namespace

std::optional<Format> parse_format(std::string_view name) {
  if (name == "text") return Format::text;
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  return std::nullopt;
}

ProfileRecord to_record(const DivisorProfile& p) {
  auto ds = p.divisors.divisors();
  return {p.n, p.tau, p.sigma_e, p.sigma_o, p.k, p.is_index_ratio(), {ds.begin(), ds.end()}};
}

ClassRecord to_record(const Rational& k, std::span<const std::uint64_t> members, std::size_t head, std::size_t tail,
                      bool keep_members) {
  ClassRecord r;
  r.k = k;
  r.count = members.size();
  const std::size_t nfirst = std::min(head, members.size());
  const std::size_t nlast = std::min(tail, members.size() - nfirst);
  r.first.assign(members.begin(), members.begin() + static_cast<std::ptrdiff_t>(nfirst));
  r.last.assign(members.end() - static_cast<std::ptrdiff_t>(nlast), members.end());
  if (keep_members) r.members.emplace(members.begin(), members.end());
  return r;
}

std::string profile_csv_row(const ProfileRecord& r) {
  return std::to_string(r.n) + "," + std::to_string(r.tau) + "," + to_string(r.sigma_e) + "," +
         to_string(r.sigma_o) + "," + r.k.to_string() + "," + (r.is_index_ratio ? "true" : "false");
}

ProfileRecord parse_profile_csv_row(std::string_view line) {
  auto cells = split(line, ',');
  if (cells.size() != 6) throw ParseError("profile CSV row needs 6 columns");
  ProfileRecord r;
  r.n = parse_u64(cells[0]);
  r.tau = parse_u64(cells[1]);
  r.sigma_e = parse_wide(cells[2]);
  r.sigma_o = parse_wide(cells[3]);
  r.k = Rational::parse(cells[4]);
  r.is_index_ratio = parse_bool(cells[5]);
  return r;
}

std::string profile_json(const ProfileRecord& r) { return profile_to_json(r).dump(); }

ProfileRecord parse_profile_json(std::string_view text) {
  return guarded_json(text, [](const Json& j) {
    ProfileRecord r;
    r.n = j.at("n").get<std::uint64_t>();
    r.divisors = j.at("divisors").get<std::vector<std::uint64_t>>();
    r.tau = j.at("tau").get<std::uint64_t>();
    r.sigma_e = j.at("sigma_e").get<std::uint64_t>();
    r.sigma_o = j.at("sigma_o").get<std::uint64_t>();
    r.k = Rational::parse(j.at("k").get<std::string>());
    r.is_index_ratio = j.at("is_index_ratio").get<bool>();
    return r;
  });
}

std::string class_csv_row(const ClassRecord& r) {
  return r.k.to_string() + "," + std::to_string(r.count) + "," + join(r.first, " ") + "," + join(r.last, " ");
}

ClassRecord parse_class_csv_row(std::string_view line) {
  auto cells = split(line, ',');
  if (cells.size() != 4) throw ParseError("class CSV row needs 4 columns");
  ClassRecord r;
  r.k = Rational::parse(cells[0]);
  r.count = parse_u64(cells[1]);
  r.first = parse_list(cells[2]);
  r.last = parse_list(cells[3]);
  return r;
}

std::string class_json(const ClassRecord& r) { return class_to_json(r).dump(); }

ClassRecord parse_class_json(std::string_view text) {
  return guarded_json(text, [](const Json& j) {
    ClassRecord r;
    r.k = Rational::parse(j.at("k").get<std::string>());
    r.count = j.at("count").get<std::uint64_t>();
    r.first = j.at("first").get<std::vector<std::uint64_t>>();
    r.last = j.at("last").get<std::vector<std::uint64_t>>();
    if (j.contains("members")) r.members = j.at("members").get<std::vector<std::uint64_t>>();
    return r;
  });
}

void write_profiles(std::ostream& out, Format format, const std::vector<ProfileRecord>& rows,
                    const std::vector<AlphaSums>& alpha) {
  switch (format) {
    case Format::csv:
      out << kProfileCsvHeader << '\n';
      for (const auto& r : rows) out << profile_csv_row(r) << '\n';
      return;
    case Format::json: {
      Json arr = Json::array();
      for (std::size_t i = 0; i < rows.size(); ++i) {
        Json j = profile_to_json(rows[i]);
        if (!alpha.empty())
          j["alpha_sums"] = {{"alpha", alpha[i].alpha}, {"sigma_e", alpha[i].sigma_e}, {"sigma_o", alpha[i].sigma_o}};
        arr.push_back(std::move(j));
      }
      out << Json{{"profiles", std::move(arr)}}.dump(2) << '\n';
      return;
    }
    case Format::text:
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        if (i > 0) out << '\n';
        out << std::left;
        out << std::setw(14) << "n" << r.n << '\n';
        out << std::setw(14) << "divisors" << join(r.divisors, " ") << '\n';
        out << std::setw(14) << "tau" << r.tau << '\n';
        out << std::setw(14) << "sigma_e" << to_string(r.sigma_e) << '\n';
        out << std::setw(14) << "sigma_o" << to_string(r.sigma_o) << '\n';
        out << std::setw(14) << "k" << r.k.to_string() << '\n';
        out << std::setw(14) << "index_ratio" << (r.is_index_ratio ? "true" : "false") << '\n';
        if (!alpha.empty()) {
          out << std::setw(14) << "alpha" << alpha[i].alpha << '\n';
          out << std::setw(14) << "sigma_e,alpha" << alpha[i].sigma_e << '\n';
          out << std::setw(14) << "sigma_o,alpha" << alpha[i].sigma_o << '\n';
        }
      }
      return;
  }
}

void write_classes(std::ostream& out, Format format, std::uint64_t lo, std::uint64_t hi,
                   const std::vector<ClassRecord>& rows) {
  switch (format) {
    case Format::csv:
      out << kClassCsvHeader << '\n';
      for (const auto& r : rows) out << class_csv_row(r) << '\n';
      return;
    case Format::json: {
      Json classes = Json::array();
      for (const auto& r : rows) classes.push_back(class_to_json(r));
      Json doc;
      doc["range"] = {{"lo", lo}, {"hi", hi}};
      doc["classes"] = std::move(classes);
      out << doc.dump(2) << '\n';
      return;
    }
    case Format::text: {
      std::size_t width = 1;
      for (const auto& r : rows) width = std::max(width, r.k.to_string().size());
      out << std::left << std::setw(static_cast<int>(width)) << "k"
          << " | G_k members in [" << lo << ", " << hi << "] (count)\n";
      for (const auto& r : rows) {
        out << std::setw(static_cast<int>(width)) << r.k.to_string() << " | " << text_member_list(r) << " ("
            << r.count << ")\n";
      }
      return;
    }
  }
}

void write_report(std::ostream& out, Format format, const ScanReport& report) {
  switch (format) {
    case Format::json: {
      Json j;
      j["check"] = report.check;
      j["range"] = {{"lo", report.lo}, {"hi", report.hi}};
      j["status"] = std::string(to_string(report.status));
      j["evidence"] = report.evidence();
      j["applicable"] = report.applicable;
      Json violations = Json::array();
      for (const auto& v : report.violations)
        violations.push_back({{"n", v.n}, {"expected", v.expected}, {"actual", v.actual}});
      j["violations"] = std::move(violations);
      Json discrepancies = Json::array();
      for (const auto& v : report.discrepancies)
        discrepancies.push_back({{"n", v.n}, {"expected", v.expected}, {"actual", v.actual}});
      j["discrepancies"] = std::move(discrepancies);
      Json tallies = Json::object();
      for (const auto& [name, count] : report.tallies) tallies[name] = count;
      j["tallies"] = std::move(tallies);
      j["notes"] = report.notes;
      j["elapsed_ms"] = report.elapsed_ms;
      Json config = Json::object();
      for (const auto& [key, value] : report.config) config[key] = value;
      j["config"] = std::move(config);
      out << j.dump(2) << '\n';
      return;
    }
    case Format::csv:
      out << "check,lo,hi,status,applicable,violations,discrepancies,elapsed_ms\n";
      out << report.check << ',' << report.lo << ',' << report.hi << ',' << to_string(report.status) << ','
          << report.applicable << ',' << report.violations.size() << ',' << report.discrepancies.size() << ','
          << report.elapsed_ms << '\n';
      if (!report.violations.empty() || !report.discrepancies.empty()) {
        out << "\nkind,n,expected,actual\n";
        auto quoted = [](const std::string& s) { return '"' + s + '"'; };
        for (const auto& v : report.violations)
          out << "violation," << v.n << ',' << quoted(v.expected) << ',' << quoted(v.actual) << '\n';
        for (const auto& v : report.discrepancies)
          out << "discrepancy," << v.n << ',' << quoted(v.expected) << ',' << quoted(v.actual) << '\n';
      }
      return;
    case Format::text: {
      out << std::left;
      out << std::setw(14) << "check" << report.check << '\n';
      out << std::setw(14) << "range" << '[' << report.lo << ", " << report.hi << "]\n";
      out << std::setw(14) << "status" << to_string(report.status) << '\n';
      out << std::setw(14) << "applicable" << report.applicable << '\n';
      out << std::setw(14) << "violations" << report.violations.size() << '\n';
      for (const auto& [name, count] : report.tallies) out << std::setw(14) << "tally" << name << " = " << count << '\n';
      out << std::setw(14) << "elapsed_ms" << report.elapsed_ms << '\n';
      out << std::setw(14) << "evidence" << report.evidence() << '\n';
      for (const auto& note : report.notes) out << std::setw(14) << "note" << note << '\n';
      for (const auto& v : report.violations)
        out << "  violation n=" << v.n << ": expected " << v.expected << "; got " << v.actual << '\n';
      for (const auto& v : report.discrepancies)
        out << "  discrepancy n=" << v.n << ": clause " << v.expected << "; got " << v.actual << '\n';
      if (!report.config.empty()) {
        out << std::setw(14) << "config";
        for (std::size_t i = 0; i < report.config.size(); ++i)
          out << (i ? " " : "") << report.config[i].first << '=' << report.config[i].second;
        out << '\n';
      }
      return;
    }
  }
}

void write_index_ratio(std::ostream& out, Format format, std::uint64_t limit, const std::vector<std::uint64_t>& members) {
  switch (format) {
    case Format::csv:
      out << "n\n";
      for (auto n : members) out << n << '\n';
      return;
    case Format::json:
      out << Json{{"limit", limit}, {"count", members.size()}, {"members", members}}.dump(2) << '\n';
      return;
    case Format::text:
      out << join(members, ", ") << '\n';
      return;
  }
}

}  // namespace irn::cli
