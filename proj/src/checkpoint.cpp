#include "irn/checkpoint.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <vector>

#include "irn/errors.hpp"

namespace irn {

namespace {

constexpr std::string_view kMagic = "irn-gk-checkpoint";

std::string hex64(std::uint64_t v) {
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << v;
  return out.str();
}

std::string class_lines(const GkTable& table) {
  std::string out;
  for (const auto& [k, members] : table.classes()) {
    out += "class ";
    out += k.to_string();
    for (std::uint64_t n : members) {
      out += ' ';
      out += std::to_string(n);
    }
    out += '\n';
  }
  return out;
}

std::uint64_t parse_u64(const std::string& token, std::string_view field) {
  try {
    std::size_t used = 0;
    auto v = std::stoull(token, &used, 10);
    if (used != token.size()) throw std::invalid_argument(token);
    return v;
  } catch (const std::exception&) {
    throw CheckpointError("checkpoint: bad " + std::string(field) + " value '" + token + "'");
  }
}

std::uint64_t parse_hex(const std::string& token, std::string_view field) {
  try {
    std::size_t used = 0;
    auto v = std::stoull(token, &used, 16);
    if (used != token.size() || token.size() != 16) throw std::invalid_argument(token);
    return v;
  } catch (const std::exception&) {
    throw CheckpointError("checkpoint: bad " + std::string(field) + " value '" + token + "'");
  }
}

}  // namespace

std::uint64_t fnv1a(std::string_view bytes, std::uint64_t seed) {
  std::uint64_t h = seed;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::uint64_t table_digest(const GkTable& table) {
  std::string text;
  if (table.range()) text = std::to_string(table.range()->lo) + " " + std::to_string(table.range()->hi) + "\n";
  return fnv1a(text + class_lines(table));
}

std::uint64_t scan_config_hash(std::uint64_t lo, std::uint64_t hi, std::uint64_t chunk_size) {
  std::ostringstream cfg;
  cfg << "gk-scan;version=" << ScanCheckpoint::kVersion << ";lo=" << lo << ";hi=" << hi << ";chunk=" << chunk_size;
  return fnv1a(cfg.str());
}

std::string serialize_checkpoint(const ScanCheckpoint& cp) {
  if (!cp.partial.range()) throw CheckpointError("checkpoint needs a non-empty partial table");
  std::ostringstream out;
  out << kMagic << ' ' << cp.version << '\n';
  out << "config " << hex64(cp.config_hash) << '\n';
  out << "last " << cp.last_completed << '\n';
  out << "range " << cp.partial.range()->lo << ' ' << cp.partial.range()->hi << '\n';
  out << class_lines(cp.partial);
  out << "digest " << hex64(table_digest(cp.partial)) << '\n';
  return out.str();
}

ScanCheckpoint parse_checkpoint(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  auto next_fields = [&](std::string_view expected) {
    if (!std::getline(in, line)) throw CheckpointError("checkpoint truncated before '" + std::string(expected) + "'");
    std::istringstream ls(line);
    std::vector<std::string> fields;
    for (std::string f; ls >> f;) fields.push_back(f);
    if (fields.empty() || fields[0] != expected)
      throw CheckpointError("checkpoint: expected '" + std::string(expected) + "', got '" + line + "'");
    return fields;
  };

  ScanCheckpoint cp;
  auto header = next_fields(kMagic);
  if (header.size() != 2) throw CheckpointError("checkpoint: malformed header");
  cp.version = static_cast<std::uint32_t>(parse_u64(header[1], "version"));
  if (cp.version != ScanCheckpoint::kVersion)
    throw CheckpointError("checkpoint version " + header[1] + " is not supported");
  auto config = next_fields("config");
  if (config.size() != 2) throw CheckpointError("checkpoint: malformed config line");
  cp.config_hash = parse_hex(config[1], "config");
  auto last = next_fields("last");
  if (last.size() != 2) throw CheckpointError("checkpoint: malformed last line");
  cp.last_completed = parse_u64(last[1], "last");
  auto range = next_fields("range");
  if (range.size() != 3) throw CheckpointError("checkpoint: malformed range line");
  const std::uint64_t lo = parse_u64(range[1], "range"), hi = parse_u64(range[2], "range");
  if (lo == 0 || lo > hi || hi != cp.last_completed) throw CheckpointError("checkpoint: inconsistent range");
  cp.partial = GkTable(lo, hi);

  std::optional<std::uint64_t> digest;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "digest") {
      std::string value;
      ls >> value;
      digest = parse_hex(value, "digest");
      break;
    }
    if (tag != "class") throw CheckpointError("checkpoint: unexpected line '" + line + "'");
    std::string key;
    ls >> key;
    Rational k;
    try {
      k = Rational::parse(key);
    } catch (const Error&) {
      throw CheckpointError("checkpoint: bad class key '" + key + "'");
    }
    for (std::string m; ls >> m;) {
      try {
        cp.partial.add(k, parse_u64(m, "member"));
      } catch (const DomainError& e) {
        throw CheckpointError(std::string("checkpoint: ") + e.what());
      }
    }
  }
  if (!digest) throw CheckpointError("checkpoint truncated: missing digest");
  while (std::getline(in, line))
    if (!line.empty()) throw CheckpointError("checkpoint: unexpected content after digest");
  if (*digest != table_digest(cp.partial)) throw CheckpointError("checkpoint digest mismatch");
  if (cp.partial.member_count() != hi - lo + 1) throw CheckpointError("checkpoint table does not cover its range");
  return cp;
}

void save_checkpoint(const std::filesystem::path& path, const ScanCheckpoint& checkpoint) {
  const std::string text = serialize_checkpoint(checkpoint);
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw CheckpointError("cannot write checkpoint " + tmp.string());
    out << text;
    if (!out.flush()) throw CheckpointError("cannot write checkpoint " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw CheckpointError("cannot move checkpoint into place: " + ec.message());
}

std::optional<ScanCheckpoint> load_checkpoint(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) return std::nullopt;
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CheckpointError("cannot read checkpoint " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_checkpoint(buffer.str());
}

}  // namespace irn
