#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "goldbach/error.hpp"
#include "goldbach/estimator.hpp"
#include "goldbach/goldbach.hpp"
#include "int_math.hpp"

namespace goldbach {

namespace {

struct ScanContext {
  std::uint64_t lo;
  std::uint64_t hi;
  std::vector<std::uint64_t> all_primes;  // every prime <= hi
  std::vector<std::uint64_t> pen_primes;  // primes <= sqrt(hi)
  const ScanOptions* options;
};

bool passes(const ScanOptions& opt, const BandSignature& band) {
  if (!opt.band_filter) return true;
  return std::find(opt.band_filter->begin(), opt.band_filter->end(), band) != opt.band_filter->end();
}

// Goldbach counts for every even in [a, b] by enumerating prime pairs
// p <= q with p + q inside the block.
std::vector<std::uint64_t> block_counts(const std::vector<std::uint64_t>& primes, std::uint64_t a,
                                        std::uint64_t b) {
  std::vector<std::uint64_t> counts((b - a) / 2 + 1, 0);
  if (a <= 4 && 4 <= b) counts[(4 - a) / 2] = 1;  // 2 + 2; 2 + odd is never even
  for (std::size_t i = 1; i < primes.size(); ++i) {
    const std::uint64_t p = primes[i];
    if (2 * p > b) break;
    const std::uint64_t q_lo = std::max(p, a > p ? a - p : 0);
    const std::uint64_t q_hi = b - p;
    auto it = std::lower_bound(primes.begin() + static_cast<std::ptrdiff_t>(i), primes.end(), q_lo);
    for (; it != primes.end() && *it <= q_hi; ++it) ++counts[(p + *it - a) / 2];
  }
  return counts;
}

std::vector<GpRecord> scan_chunk(const ScanContext& ctx, std::uint64_t a, std::uint64_t b) {
  const auto counts = block_counts(ctx.all_primes, a, b);
  std::vector<GpRecord> out;
  for (std::uint64_t two_n = a; two_n <= b; two_n += 2) {
    auto band = band_signature(two_n, ctx.pen_primes);
    if (!passes(*ctx.options, band)) continue;
    GpRecord rec;
    rec.two_n = two_n;
    rec.gp_count = counts[(two_n - a) / 2];
    rec.band = std::move(band);
    rec.egp = egp(two_n, ctx.pen_primes);
    rec.igp = igp(two_n, ctx.pen_primes);
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace

std::vector<GpRecord> scan(std::uint64_t lo, std::uint64_t hi, const PrimalityTable& table,
                           const ScanOptions& options) {
  if (lo % 2 != 0 || hi % 2 != 0) throw InvalidArgument("scan bounds must be even");
  if (lo < 4 || lo > hi || hi > table.limit()) {
    throw OutOfRange("scan needs 4 <= lo <= hi <= sieve limit (lo=" + std::to_string(lo) +
                     ", hi=" + std::to_string(hi) + ", limit=" + std::to_string(table.limit()) + ")");
  }
  if (options.workers == 0) throw InvalidArgument("scan needs at least one worker");

  ScanContext ctx{lo, hi, primes_in(table, 2, hi), {}, &options};
  const auto root = detail::isqrt(hi);
  for (auto p : ctx.all_primes) {
    if (p > root) break;
    ctx.pen_primes.push_back(p);
  }

  const std::uint64_t evens = (hi - lo) / 2 + 1;
  const std::size_t chunks = static_cast<std::size_t>((evens + kScanChunkEvens - 1) / kScanChunkEvens);
  std::vector<std::vector<GpRecord>> parts(chunks);

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t c = next.fetch_add(1); c < chunks; c = next.fetch_add(1)) {
      try {
        const std::uint64_t a = lo + 2 * kScanChunkEvens * c;
        const std::uint64_t b = std::min(hi, a + 2 * (kScanChunkEvens - 1));
        parts[c] = scan_chunk(ctx, a, b);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  const unsigned threads = static_cast<unsigned>(std::min<std::size_t>(options.workers, chunks));
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<GpRecord> out;
  std::size_t total = 0;
  for (const auto& part : parts) total += part.size();
  out.reserve(total);
  for (auto& part : parts) {
    std::move(part.begin(), part.end(), std::back_inserter(out));
  }
  return out;
}

}  // namespace goldbach
