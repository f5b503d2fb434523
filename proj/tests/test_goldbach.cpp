#include <doctest.h>

#include <sstream>

#include "goldbach/csv.hpp"
#include "goldbach/error.hpp"
#include "goldbach/estimator.hpp"
#include "goldbach/goldbach.hpp"
#include "oracles.hpp"

using namespace goldbach;

namespace {

const PrimalityTable& table_200k() {
  static const PrimalityTable t = build_sieve(200'000);
  return t;
}

// Elimination on the pair track: every Pen prime strikes its proper
// multiples, then the pair holding 1 goes.
std::uint64_t racetrack_count(std::uint64_t two_n) {
  std::vector<char> struck(two_n + 1, 0);
  for (std::uint64_t p = 2; p * p <= two_n; ++p) {
    if (!oracle::trial_is_prime(p)) continue;
    for (std::uint64_t m = 2 * p; m < two_n; m += p) struck[m] = 1;
  }
  std::uint64_t standing = 0;
  for (std::uint64_t k = 1; k <= two_n / 2; ++k) {
    if (k == 1) continue;
    if (!struck[k] && !struck[two_n - k]) ++standing;
  }
  return standing;
}

}  // namespace

TEST_CASE("pen") {
  CHECK(pen(80) == std::vector<std::uint64_t>{2, 3, 5, 7});
  CHECK(pen(4) == std::vector<std::uint64_t>{2});
  CHECK(pen(8) == std::vector<std::uint64_t>{2});
  CHECK(pen(9 * 2 * 2) == std::vector<std::uint64_t>{2, 3, 5});
  CHECK_THROWS_AS(pen(81), InvalidArgument);
  CHECK_THROWS_AS(pen(2), InvalidArgument);
  CHECK(pen(80, table_200k()) == pen(80));
}

TEST_CASE("band signature") {
  CHECK(band_signature(80).primes == std::vector<std::uint64_t>{2, 5});
  CHECK(band_signature(30).primes == std::vector<std::uint64_t>{2, 3, 5});
  CHECK(band_signature(128).primes == std::vector<std::uint64_t>{2});
  CHECK(band_signature(6).primes == std::vector<std::uint64_t>{2});
  CHECK(band_signature(36).primes == std::vector<std::uint64_t>{2, 3});
  CHECK_THROWS_AS(band_signature(7), InvalidArgument);

  CHECK(BandSignature::parse("2-3").primes == std::vector<std::uint64_t>{2, 3});
  CHECK(BandSignature::parse("2").to_string() == "2");
  CHECK_THROWS_AS(BandSignature::parse("2-4"), InvalidArgument);
  CHECK_THROWS_AS(BandSignature::parse("3-2"), InvalidArgument);
  CHECK_THROWS_AS(BandSignature::parse(""), InvalidArgument);
  CHECK_THROWS_AS(BandSignature::parse("2-"), InvalidArgument);
}

TEST_CASE("count_gp") {
  const auto& t = table_200k();
  const auto four = count_gp(4, t, true);
  CHECK(four.count == 1);
  CHECK(four.pairs == std::vector<PrimePair>{{2, 2}});

  const auto eighty = count_gp(80, t, true);
  CHECK(eighty.count == 4);
  CHECK(eighty.pairs == std::vector<PrimePair>{{7, 73}, {13, 67}, {19, 61}, {37, 43}});
  CHECK(count_gp(80, t).pairs.empty());

  CHECK(count_gp(100, t).count == 6);
  CHECK_THROWS_AS(count_gp(200'002, t), OutOfRange);
  CHECK_THROWS_AS(count_gp(81, t), InvalidArgument);
}

TEST_CASE("unordered count is half the ordered count with (n, n) once") {
  const auto& t = table_200k();
  for (std::uint64_t two_n = 4; two_n <= 10'000; two_n += 2) {
    std::uint64_t ordered = 0;
    for (std::uint64_t a = 2; a <= two_n - 2; ++a) {
      if (t.test(a) && t.test(two_n - a)) ++ordered;
    }
    const std::uint64_t n = two_n / 2;
    const std::uint64_t expect = (ordered + (t.test(n) ? 1 : 0)) / 2;
    REQUIRE_MESSAGE(count_gp(two_n, t).count == expect, "2n = " << two_n);
  }
}

TEST_CASE("racetrack elimination reproduces the direct count") {
  const auto& t = table_200k();
  for (std::uint64_t two_n = 4; two_n <= 10'000; two_n += 2) {
    REQUIRE_MESSAGE(count_gp(two_n, t).count == racetrack_count(two_n), "2n = " << two_n);
  }
}

TEST_CASE("scan small ranges") {
  const auto& t = table_200k();
  const auto recs = scan(4, 10, t);
  REQUIRE(recs.size() == 4);
  CHECK(recs[0].two_n == 4);
  CHECK(recs[0].gp_count == 1);
  CHECK(recs[1].gp_count == 1);
  CHECK(recs[2].gp_count == 1);
  CHECK(recs[3].gp_count == 2);
  CHECK(recs[3].band.primes == std::vector<std::uint64_t>{2});

  ScanOptions b2;
  b2.band_filter = std::vector<BandSignature>{BandSignature{{2}}};
  b2.workers = 4;
  const auto only_b2 = scan(4, 100, t, b2);
  std::vector<std::uint64_t> evens;
  for (const auto& r : only_b2) {
    CHECK(r.band.primes == std::vector<std::uint64_t>{2});
    evens.push_back(r.two_n);
  }
  for (std::uint64_t want : {8ull, 16ull, 22ull, 32ull}) {
    CHECK(std::find(evens.begin(), evens.end(), want) != evens.end());
  }
  CHECK(std::find(evens.begin(), evens.end(), 12ull) == evens.end());

  CHECK_THROWS_AS(scan(10, 4, t), OutOfRange);
  CHECK_THROWS_AS(scan(2, 10, t), OutOfRange);
  CHECK_THROWS_AS(scan(4, 200'002, t), OutOfRange);
  CHECK_THROWS_AS(scan(4, 11, t), InvalidArgument);
}

TEST_CASE("scan records agree with per-number operations") {
  const auto& t = table_200k();
  const auto flags = oracle::trial_flags(200'000);
  const auto recs = scan(4, 200'000, t, ScanOptions{std::nullopt, 3});
  REQUIRE(recs.size() == 99'999);
  for (std::size_t i = 0; i < recs.size(); i += 97) {
    const auto& r = recs[i];
    REQUIRE(r.two_n == 4 + 2 * i);
    CHECK(r.gp_count == oracle::brute_gp(r.two_n, flags));
    CHECK(r.band == band_signature(r.two_n));
    CHECK(r.egp == egp(r.two_n));
    CHECK(r.igp == igp(r.two_n));
  }
  for (const auto& r : recs) {
    REQUIRE(r.gp_count >= 1);
    // B2 holds exactly the evens with no odd pen-prime divisor.
    bool odd_divisor = false;
    for (std::uint64_t p = 3; p * p <= r.two_n; p += 2) {
      if (oracle::trial_is_prime(p) && r.two_n % p == 0) {
        odd_divisor = true;
        break;
      }
    }
    REQUIRE((r.band.primes == std::vector<std::uint64_t>{2}) == !odd_divisor);
  }
}

TEST_CASE("scan output does not depend on the worker count") {
  const auto& t = table_200k();
  std::string reference;
  for (unsigned w : {1u, 2u, 3u, 8u}) {
    std::ostringstream csv;
    write_scan_csv(csv, scan(1000, 80'000, t, ScanOptions{std::nullopt, w}));
    if (reference.empty()) {
      reference = csv.str();
    } else {
      CHECK(csv.str() == reference);
    }
  }
}
