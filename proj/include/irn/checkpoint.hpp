#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "irn/gk_table.hpp"

namespace irn {

/// State of an interrupted G_k scan. Line-oriented text:
///
///   irn-gk-checkpoint <version>
///   config <hash, 16 hex digits>
///   last <n>
///   range <lo> <hi>
///   class <k> <member> <member> ...     (one line per class, keys ascending)
///   digest <hash, 16 hex digits>
struct ScanCheckpoint {
  static constexpr std::uint32_t kVersion = 1;

  std::uint32_t version = kVersion;
  std::uint64_t config_hash = 0;
  std::uint64_t last_completed = 0;
  GkTable partial;

  friend bool operator==(const ScanCheckpoint&, const ScanCheckpoint&) = default;
};

std::uint64_t fnv1a(std::string_view bytes, std::uint64_t seed = 0xcbf29ce484222325ull);

/// Digest over the canonical serialization of the table's classes.
std::uint64_t table_digest(const GkTable& table);

std::uint64_t scan_config_hash(std::uint64_t lo, std::uint64_t hi, std::uint64_t chunk_size);

std::string serialize_checkpoint(const ScanCheckpoint& checkpoint);
/// Throws CheckpointError on malformed input or digest mismatch.
ScanCheckpoint parse_checkpoint(std::string_view text);

/// Writes to a sibling temp file and renames it over path.
void save_checkpoint(const std::filesystem::path& path, const ScanCheckpoint& checkpoint);
/// nullopt when the file does not exist.
std::optional<ScanCheckpoint> load_checkpoint(const std::filesystem::path& path);

}  // namespace irn
