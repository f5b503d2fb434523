#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

namespace goldbach {

inline constexpr std::uint64_t kDefaultSegment = std::uint64_t{1} << 18;
inline constexpr std::uint64_t kPracticalSieveCeiling = 1'000'000'000;

/// Bit-packed primality of every integer in [0, limit]. Immutable once built,
/// so a single instance can be shared by any number of reader threads.
class PrimalityTable {
 public:
  PrimalityTable() = default;

  std::uint64_t limit() const noexcept { return limit_; }

  // Unchecked; x must not exceed limit().
  bool test(std::uint64_t x) const noexcept {
    return (words_[x >> 6] >> (x & 63)) & 1u;
  }

  bool is_prime(std::uint64_t x) const;

  std::uint64_t count() const noexcept { return count_; }

  // LSB-first words: bit i of word j is the integer 64j + i.
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  static PrimalityTable from_words(std::uint64_t limit, std::vector<std::uint64_t> words);

  friend bool operator==(const PrimalityTable& a, const PrimalityTable& b) noexcept {
    return a.limit_ == b.limit_ && a.words_ == b.words_;
  }

 private:
  std::uint64_t limit_ = 0;
  std::uint64_t count_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Segmented sieve of Eratosthenes. Peak working memory beyond the output
/// bits is one segment plus the base primes up to sqrt(limit).
PrimalityTable build_sieve(std::uint64_t limit, std::uint64_t segment = kDefaultSegment);

// Ascending primes in [lo, hi].
std::vector<std::uint64_t> primes_in(const PrimalityTable& table, std::uint64_t lo, std::uint64_t hi);

// Plain sieve for small bounds (pen primes, TRPF chains). Primes <= bound.
std::vector<std::uint64_t> small_primes(std::uint64_t bound);

// Product of all primes <= p. Exact up to p = 47.
std::uint64_t primorial(std::uint64_t p);

// True iff x == 1 or the smallest prime factor of x is >= p.
bool in_h(std::uint64_t x, std::uint64_t p, const PrimalityTable& table);

struct SimulatedPrimeSeq {
  double start = 0.0;
  std::vector<double> values;
};

// values[i+1] = values[i] + ln(values[i]), evaluated in ascending order.
SimulatedPrimeSeq simulated_primes(double start, std::size_t count);

// Same recurrence, continued until the last value exceeds bound.
SimulatedPrimeSeq simulated_primes_through(double start, double bound);

// Sieve cache: "GBSV", u32 version, u64 limit, then ceil((limit+1)/8) bytes
// LSB-first. All integers little-endian.
inline constexpr std::uint32_t kSieveCacheVersion = 1;

void write_sieve(std::ostream& out, const PrimalityTable& table);
PrimalityTable read_sieve(std::istream& in);
void save_sieve(const PrimalityTable& table, const std::filesystem::path& path);
PrimalityTable load_sieve(const std::filesystem::path& path);

}  // namespace goldbach
