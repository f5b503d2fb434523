#include "goldbach/goldbach.hpp"

#include <charconv>
#include <string>

#include "goldbach/error.hpp"
#include "int_math.hpp"

namespace goldbach {

std::string BandSignature::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (i) out += '-';
    out += std::to_string(primes[i]);
  }
  return out;
}

BandSignature BandSignature::parse(std::string_view text) {
  BandSignature sig;
  if (text.empty()) throw InvalidArgument("empty band signature");
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto dash = text.find('-', pos);
    const auto part = text.substr(pos, dash == std::string_view::npos ? std::string_view::npos : dash - pos);
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size() || !detail::is_prime_trial(v)) {
      throw InvalidArgument("bad band signature '" + std::string(text) + "'");
    }
    if (!sig.primes.empty() && v <= sig.primes.back()) {
      throw InvalidArgument("band signature primes must be strictly ascending: '" + std::string(text) + "'");
    }
    sig.primes.push_back(v);
    if (dash == std::string_view::npos) break;
    pos = dash + 1;
  }
  return sig;
}

namespace {

void require_even(std::uint64_t two_n) {
  if (two_n < 4 || two_n % 2 != 0) {
    throw InvalidArgument("expected an even number >= 4, got " + std::to_string(two_n));
  }
}

}  // namespace

std::vector<std::uint64_t> pen(std::uint64_t two_n) {
  require_even(two_n);
  return small_primes(detail::isqrt(two_n));
}

std::vector<std::uint64_t> pen(std::uint64_t two_n, const PrimalityTable& table) {
  require_even(two_n);
  const auto root = detail::isqrt(two_n);
  if (root > table.limit()) throw OutOfRange("sieve too small for the pen of " + std::to_string(two_n));
  return primes_in(table, 2, root);
}

BandSignature band_signature(std::uint64_t two_n) {
  return band_signature(two_n, pen(two_n));
}

BandSignature band_signature(std::uint64_t two_n, std::span<const std::uint64_t> primes) {
  require_even(two_n);
  BandSignature sig;
  for (auto p : primes) {
    if (p * p > two_n) break;
    if (two_n % p == 0) sig.primes.push_back(p);
  }
  return sig;
}

GpCount count_gp(std::uint64_t two_n, const PrimalityTable& table, bool with_pairs) {
  require_even(two_n);
  if (two_n > table.limit()) {
    throw OutOfRange(std::to_string(two_n) + " exceeds sieve limit " + std::to_string(table.limit()));
  }
  GpCount out;
  const std::uint64_t n = two_n / 2;
  for (std::uint64_t k = 2; k <= n; ++k) {
    if (table.test(k) && table.test(two_n - k)) {
      ++out.count;
      if (with_pairs) out.pairs.emplace_back(k, two_n - k);
    }
  }
  return out;
}

}  // namespace goldbach
