#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <vector>

#include "irn/factorization.hpp"
#include "irn/gk_table.hpp"
#include "irn/rational.hpp"

namespace irn {

struct ScanOptions {
  static constexpr std::uint64_t kDefaultChunkSize = std::uint64_t{1} << 16;

  unsigned workers = 1;
  std::uint64_t chunk_size = kDefaultChunkSize;
  /// Used when it covers the scanned range; otherwise blocks are sieved.
  const SieveTable* sieve = nullptr;
};

/// sigma_o(n) divides sigma_e(n). True for n = 1 (k = 0).
bool is_index_ratio(std::uint64_t n);

/// Classifies every n in [lo, hi]. The result does not depend on workers.
GkTable scan_range(std::uint64_t lo, std::uint64_t hi, const ScanOptions& options = {});

struct CheckpointControl {
  std::filesystem::path path;
  /// Stop (after saving) once this many chunks completed in this call.
  std::optional<std::size_t> stop_after_chunks;
  /// Checked between waves; set from a signal handler to stop early.
  const std::atomic<bool>* cancel = nullptr;
};

struct ResumableScan {
  GkTable table;
  bool complete = false;
  /// First n computed by this call (lo when starting fresh).
  std::uint64_t resumed_at = 0;
};

/// scan_range that saves a checkpoint after every wave of chunks and picks up
/// from an existing checkpoint at control.path. Throws CheckpointError when
/// the file belongs to a different configuration or fails its digest.
ResumableScan scan_range_resumable(std::uint64_t lo, std::uint64_t hi, const ScanOptions& options,
                                   const CheckpointControl& control);

/// Members n <= limit of G_k, ascending.
std::vector<std::uint64_t> members_of_k(const Rational& k, std::uint64_t limit, const ScanOptions& options = {});

/// members_of_k for several keys with a single pass; result i belongs to keys[i].
std::vector<std::vector<std::uint64_t>> members_of_keys(std::span<const Rational> keys, std::uint64_t limit,
                                                        const ScanOptions& options = {});

/// All index ratio numbers <= limit, ascending.
std::vector<std::uint64_t> enumerate_index_ratio(std::uint64_t limit, const ScanOptions& options = {});

}  // namespace irn
