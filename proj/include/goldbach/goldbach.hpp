#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "goldbach/primes.hpp"

namespace goldbach {

// Pen primes of 2n that divide 2n, ascending. [2] is the B2 band.
struct BandSignature {
  std::vector<std::uint64_t> primes;

  // Hyphen-joined, e.g. "2-3".
  std::string to_string() const;
  static BandSignature parse(std::string_view text);

  friend auto operator<=>(const BandSignature&, const BandSignature&) = default;
  friend bool operator==(const BandSignature&, const BandSignature&) = default;
};

struct GpRecord {
  std::uint64_t two_n = 0;
  std::uint64_t gp_count = 0;
  BandSignature band;
  double egp = 0.0;
  double igp = 0.0;
};

// Primes p with p*p <= two_n.
std::vector<std::uint64_t> pen(std::uint64_t two_n);
std::vector<std::uint64_t> pen(std::uint64_t two_n, const PrimalityTable& table);

BandSignature band_signature(std::uint64_t two_n);
BandSignature band_signature(std::uint64_t two_n, std::span<const std::uint64_t> primes);

using PrimePair = std::pair<std::uint64_t, std::uint64_t>;

struct GpCount {
  std::uint64_t count = 0;
  std::vector<PrimePair> pairs;  // filled only on request
};

// Unordered pairs (k, 2n-k), 1 <= k <= n, both prime; (n, n) counts once.
GpCount count_gp(std::uint64_t two_n, const PrimalityTable& table, bool with_pairs = false);

// Contiguous block of evens handed to one scan worker.
inline constexpr std::uint64_t kScanChunkEvens = std::uint64_t{1} << 14;

struct ScanOptions {
  std::optional<std::vector<BandSignature>> band_filter;
  unsigned workers = 1;
};

/// One record per even 2n in [lo, hi] whose band passes the filter, in
/// ascending order. The range is cut into fixed chunks of kScanChunkEvens
/// evens that workers claim in any order; chunk outputs are concatenated by
/// index, so the result does not depend on the worker count.
std::vector<GpRecord> scan(std::uint64_t lo, std::uint64_t hi, const PrimalityTable& table,
                           const ScanOptions& options = {});

}  // namespace goldbach
