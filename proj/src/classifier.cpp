#include "irn/classifier.hpp"

#include <algorithm>
#include <string>

#include "irn/checkpoint.hpp"
#include "irn/errors.hpp"
#include "irn/index_sigma.hpp"
#include "irn/parallel.hpp"

namespace irn {

namespace {

void require_range(std::uint64_t lo, std::uint64_t hi) {
  if (lo == 0 || lo > hi) throw DomainError("scan range must satisfy 1 <= lo <= hi");
}

GkTable classify_chunk(const RangeFactorizer& factorizer, const ClosedRange& chunk) {
  GkTable table(chunk.lo, chunk.hi);
  for (const auto& f : factorizer.block(chunk.lo, chunk.hi)) table.add(k_ratio(f), f.value());
  return table;
}

GkTable merge_in_order(std::vector<GkTable> parts, GkTable acc = {}) {
  for (auto& part : parts) acc = merge_tables(std::move(acc), std::move(part));
  return acc;
}

}  // namespace

bool is_index_ratio(std::uint64_t n) { return k_ratio(n).is_integer(); }

GkTable scan_range(std::uint64_t lo, std::uint64_t hi, const ScanOptions& options) {
  require_range(lo, hi);
  const RangeFactorizer factorizer(hi, options.sieve);
  auto parts = run_chunks(split_range(lo, hi, options.chunk_size), options.workers,
                          [&](const ClosedRange& c) { return classify_chunk(factorizer, c); });
  return merge_in_order(std::move(parts));
}

ResumableScan scan_range_resumable(std::uint64_t lo, std::uint64_t hi, const ScanOptions& options,
                                   const CheckpointControl& control) {
  require_range(lo, hi);
  const std::uint64_t config = scan_config_hash(lo, hi, options.chunk_size);
  ResumableScan result;
  result.resumed_at = lo;
  if (auto cp = load_checkpoint(control.path)) {
    if (cp->config_hash != config)
      throw CheckpointError("checkpoint " + control.path.string() + " was written for a different scan configuration");
    if (cp->partial.range()->lo != lo || cp->last_completed > hi)
      throw CheckpointError("checkpoint range does not match the requested scan");
    result.table = std::move(cp->partial);
    result.resumed_at = cp->last_completed + 1;
  }
  if (result.resumed_at > hi) {
    result.complete = true;
    return result;
  }

  const RangeFactorizer factorizer(hi, options.sieve);
  const auto chunks = split_range(result.resumed_at, hi, options.chunk_size);
  const std::size_t wave = std::max(options.workers, 1u);
  std::size_t done = 0;
  for (std::size_t start = 0; start < chunks.size();) {
    if (control.cancel != nullptr && control.cancel->load()) return result;
    std::size_t count = std::min(wave, chunks.size() - start);
    if (control.stop_after_chunks) {
      if (done >= *control.stop_after_chunks) return result;
      count = std::min(count, *control.stop_after_chunks - done);
    }
    std::vector<ClosedRange> batch(chunks.begin() + static_cast<std::ptrdiff_t>(start),
                                   chunks.begin() + static_cast<std::ptrdiff_t>(start + count));
    auto parts = run_chunks(batch, options.workers, [&](const ClosedRange& c) { return classify_chunk(factorizer, c); });
    result.table = merge_in_order(std::move(parts), std::move(result.table));
    start += count;
    done += count;
    save_checkpoint(control.path, {ScanCheckpoint::kVersion, config, result.table.range()->hi, result.table});
  }
  result.complete = true;
  return result;
}

std::vector<std::vector<std::uint64_t>> members_of_keys(std::span<const Rational> keys, std::uint64_t limit,
                                                        const ScanOptions& options) {
  if (limit == 0) throw DomainError("limit must be positive");
  const RangeFactorizer factorizer(limit, options.sieve);
  auto parts = run_chunks(split_range(1, limit, options.chunk_size), options.workers, [&](const ClosedRange& c) {
    std::vector<std::vector<std::uint64_t>> found(keys.size());
    for (const auto& f : factorizer.block(c.lo, c.hi)) {
      const Rational k = k_ratio(f);
      for (std::size_t i = 0; i < keys.size(); ++i)
        if (keys[i] == k) found[i].push_back(f.value());
    }
    return found;
  });
  std::vector<std::vector<std::uint64_t>> out(keys.size());
  for (auto& part : parts)
    for (std::size_t i = 0; i < keys.size(); ++i) out[i].insert(out[i].end(), part[i].begin(), part[i].end());
  return out;
}

std::vector<std::uint64_t> members_of_k(const Rational& k, std::uint64_t limit, const ScanOptions& options) {
  return std::move(members_of_keys(std::span(&k, 1), limit, options).front());
}

std::vector<std::uint64_t> enumerate_index_ratio(std::uint64_t limit, const ScanOptions& options) {
  if (limit == 0) throw DomainError("limit must be positive");
  const RangeFactorizer factorizer(limit, options.sieve);
  auto parts = run_chunks(split_range(1, limit, options.chunk_size), options.workers, [&](const ClosedRange& c) {
    std::vector<std::uint64_t> found;
    for (const auto& f : factorizer.block(c.lo, c.hi))
      if (k_ratio(f).is_integer()) found.push_back(f.value());
    return found;
  });
  std::vector<std::uint64_t> out;
  for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

}  // namespace irn
