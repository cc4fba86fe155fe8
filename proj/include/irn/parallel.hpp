#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

namespace irn {

struct ClosedRange {
  std::uint64_t lo = 1;
  std::uint64_t hi = 0;
  friend bool operator==(const ClosedRange&, const ClosedRange&) = default;
};

/// Contiguous chunks of at most chunk_size integers covering [lo, hi].
inline std::vector<ClosedRange> split_range(std::uint64_t lo, std::uint64_t hi, std::uint64_t chunk_size) {
  std::vector<ClosedRange> chunks;
  if (lo > hi) return chunks;
  chunk_size = std::max<std::uint64_t>(chunk_size, 1);
  for (std::uint64_t start = lo;;) {
    std::uint64_t end = hi - start < chunk_size - 1 ? hi : start + chunk_size - 1;
    chunks.push_back({start, end});
    if (end == hi) break;
    start = end + 1;
  }
  return chunks;
}

/// Runs fn(chunk) for every chunk on up to `workers` threads and returns the
/// results in chunk order, so the output never depends on scheduling. The
/// first exception (in chunk order) is rethrown after all threads join.
template <class Fn>
auto run_chunks(const std::vector<ClosedRange>& chunks, unsigned workers, Fn fn)
    -> std::vector<decltype(fn(chunks.front()))> {
  using Result = decltype(fn(chunks.front()));
  std::vector<std::optional<Result>> slots(chunks.size());
  std::vector<std::exception_ptr> errors(chunks.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < chunks.size(); i = next++) {
      try {
        slots[i].emplace(fn(chunks[i]));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned threads = std::min<std::size_t>(std::max(workers, 1u), chunks.size());
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<Result> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace irn
