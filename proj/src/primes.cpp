#include "goldbach/primes.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <new>
#include <string>

#include "goldbach/error.hpp"

namespace goldbach {

bool PrimalityTable::is_prime(std::uint64_t x) const {
  if (x > limit_) {
    throw OutOfRange("primality query " + std::to_string(x) + " exceeds sieve limit " +
                     std::to_string(limit_));
  }
  return test(x);
}

PrimalityTable PrimalityTable::from_words(std::uint64_t limit, std::vector<std::uint64_t> words) {
  if (words.size() != limit / 64 + 1) {
    throw InvalidArgument("word count does not match limit");
  }
  // Bits past limit are not part of the table.
  const unsigned tail = static_cast<unsigned>(limit & 63);
  if (tail != 63) words.back() &= (std::uint64_t{2} << tail) - 1;
  PrimalityTable t;
  t.limit_ = limit;
  t.words_ = std::move(words);
  for (auto w : t.words_) t.count_ += static_cast<std::uint64_t>(std::popcount(w));
  return t;
}

std::vector<std::uint64_t> small_primes(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  if (bound < 2) return out;
  std::vector<bool> composite(bound + 1, false);
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return out;
}

PrimalityTable build_sieve(std::uint64_t limit, std::uint64_t segment) {
  if (limit < 2) throw InvalidArgument("sieve limit must be >= 2");
  if (limit > kPracticalSieveCeiling) {
    throw InvalidArgument("sieve limit exceeds the supported ceiling of 1e9");
  }
  if (segment == 0) throw InvalidArgument("segment size must be positive");

  std::vector<std::uint64_t> words;
  try {
    words.assign(limit / 64 + 1, 0);
  } catch (const std::bad_alloc&) {
    throw ResourceError("cannot allocate sieve bits for limit " + std::to_string(limit));
  }

  auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit)));
  while (root * root > limit) --root;
  while ((root + 1) * (root + 1) <= limit) ++root;
  const auto base = small_primes(root);

  std::vector<unsigned char> seg(static_cast<std::size_t>(std::min(segment, limit + 1)));
  for (std::uint64_t lo = 0; lo <= limit; lo += segment) {
    const std::uint64_t hi = std::min(limit, lo + segment - 1);
    const std::size_t len = static_cast<std::size_t>(hi - lo + 1);
    std::fill(seg.begin(), seg.begin() + static_cast<std::ptrdiff_t>(len), 1);
    for (auto p : base) {
      if (p * p > hi) break;
      std::uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
      for (std::uint64_t m = start; m <= hi; m += p) seg[m - lo] = 0;
    }
    for (std::size_t i = 0; i < len; ++i) {
      const std::uint64_t x = lo + i;
      if (seg[i] && x >= 2) words[x >> 6] |= std::uint64_t{1} << (x & 63);
    }
  }
  return PrimalityTable::from_words(limit, std::move(words));
}

std::vector<std::uint64_t> primes_in(const PrimalityTable& table, std::uint64_t lo, std::uint64_t hi) {
  if (hi > table.limit()) {
    throw OutOfRange("upper bound " + std::to_string(hi) + " exceeds sieve limit " +
                     std::to_string(table.limit()));
  }
  if (lo > hi) throw OutOfRange("lower bound exceeds upper bound");
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = lo; x <= hi; ++x) {
    if (table.test(x)) out.push_back(x);
  }
  return out;
}

namespace {

bool is_prime_small(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

std::uint64_t primorial(std::uint64_t p) {
  if (!is_prime_small(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
  if (p > 47) {
    throw OverflowError("primorial(" + std::to_string(p) +
                        ") does not fit in 64 bits; use a log-primorial instead");
  }
  std::uint64_t acc = 1;
  for (std::uint64_t q = 2; q <= p; ++q) {
    if (is_prime_small(q)) acc *= q;
  }
  return acc;
}

bool in_h(std::uint64_t x, std::uint64_t p, const PrimalityTable& table) {
  if (x < 1) throw InvalidArgument("in_h requires x >= 1");
  if (p > table.limit() || !table.test(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
  if (x > table.limit()) throw OutOfRange("x exceeds sieve limit");
  if (x == 1) return true;
  for (std::uint64_t q = 2; q < p; ++q) {
    if (table.test(q) && x % q == 0) return false;
  }
  return true;
}

SimulatedPrimeSeq simulated_primes(double start, std::size_t count) {
  if (!(start > 2.0)) throw InvalidArgument("simulated prime series needs start > 2");
  if (count == 0) throw InvalidArgument("simulated prime series needs count >= 1");
  SimulatedPrimeSeq seq{start, {}};
  seq.values.reserve(count);
  double v = start;
  for (std::size_t i = 0; i < count; ++i) {
    seq.values.push_back(v);
    v += std::log(v);
  }
  return seq;
}

SimulatedPrimeSeq simulated_primes_through(double start, double bound) {
  if (!(start > 2.0)) throw InvalidArgument("simulated prime series needs start > 2");
  SimulatedPrimeSeq seq{start, {}};
  double v = start;
  seq.values.push_back(v);
  while (v <= bound) {
    v += std::log(v);
    seq.values.push_back(v);
  }
  return seq;
}

}  // namespace goldbach
