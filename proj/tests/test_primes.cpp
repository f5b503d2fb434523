#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "goldbach/error.hpp"
#include "goldbach/primes.hpp"
#include "oracles.hpp"

using namespace goldbach;

namespace {

const PrimalityTable& million() {
  static const PrimalityTable t = build_sieve(1'000'000);
  return t;
}

}  // namespace

TEST_CASE("sieve basics") {
  const auto t = build_sieve(10);
  CHECK(primes_in(t, 0, 10) == std::vector<std::uint64_t>{2, 3, 5, 7});
  CHECK_FALSE(t.test(0));
  CHECK_FALSE(t.test(1));
  CHECK(t.test(2));
  CHECK(t.test(3));
  CHECK_FALSE(t.test(4));
  CHECK_THROWS_AS(build_sieve(1), InvalidArgument);
  CHECK_THROWS_AS(build_sieve(0), InvalidArgument);
  CHECK_THROWS_AS(build_sieve(kPracticalSieveCeiling + 1), InvalidArgument);
  CHECK_THROWS_AS(t.is_prime(11), OutOfRange);
}

TEST_CASE("sieve up to a million matches trial division") {
  const auto& t = million();
  const auto flags = oracle::trial_flags(1'000'000);
  std::uint64_t count = 0;
  for (char f : flags) count += f ? 1 : 0;
  CHECK(count == 78'498);
  CHECK(t.count() == 78'498);

  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<std::uint64_t> pick(0, 1'000'000);
  for (int i = 0; i < 1000; ++i) {
    const auto x = pick(rng);
    REQUIRE_MESSAGE(t.test(x) == oracle::trial_is_prime(x), "x = " << x);
  }
}

TEST_CASE("no prime has a proper multiple marked prime") {
  const auto t = build_sieve(50'000);
  for (std::uint64_t p = 2; p <= 50'000; ++p) {
    if (!t.test(p)) continue;
    for (std::uint64_t m = 2 * p; m <= 50'000; m += p) REQUIRE_FALSE(t.test(m));
  }
}

TEST_CASE("segment size does not change the table") {
  const auto ref = build_sieve(200'003);
  for (std::uint64_t seg : {1ull, 7ull, 64ull, 1000ull, 1ull << 18, 1ull << 20}) {
    CHECK(build_sieve(200'003, seg) == ref);
  }
}

TEST_CASE("primes_in ranges") {
  const auto& t = million();
  CHECK(primes_in(t, 2, 10) == std::vector<std::uint64_t>{2, 3, 5, 7});
  CHECK(primes_in(t, 8, 10).empty());
  CHECK(primes_in(t, 90, 100) == std::vector<std::uint64_t>{97});
  CHECK_THROWS_AS(primes_in(t, 0, 1'000'001), OutOfRange);
}

TEST_CASE("primorial") {
  CHECK(primorial(2) == 2);
  CHECK(primorial(5) == 30);
  CHECK(primorial(7) == 210);
  CHECK(primorial(47) == 614889782588491410ull);
  CHECK_THROWS_AS(primorial(9), InvalidArgument);
  CHECK_THROWS_AS(primorial(53), OverflowError);
}

TEST_CASE("H_p membership") {
  const auto t = build_sieve(5000);
  CHECK(in_h(1, 7, t));
  CHECK(in_h(49, 7, t));
  CHECK_FALSE(in_h(35, 7, t));
  CHECK(in_h(11, 7, t));
  CHECK_FALSE(in_h(5, 7, t));
  CHECK_THROWS_AS(in_h(10, 8, t), InvalidArgument);

  // One row of the p = 7 table: eight members among 1..30.
  int members = 0;
  for (std::uint64_t x = 1; x <= 30; ++x) members += in_h(x, 7, t) ? 1 : 0;
  CHECK(members == 8);
}

TEST_CASE("average divisibility within H_p over one primorial is 1/p") {
  const auto t = build_sieve(2310);
  for (std::uint64_t p : {3ull, 5ull, 7ull, 11ull}) {
    const auto period = primorial(p);
    std::uint64_t members = 0, divisible = 0;
    for (std::uint64_t x = 1; x <= period; ++x) {
      if (!in_h(x, p, t)) continue;
      ++members;
      if (x % p == 0) ++divisible;
    }
    CHECK(divisible * p == members);
    if (p == 7) {
      CHECK(members == 56);
      CHECK(divisible == 8);
    }
  }
}

TEST_CASE("H_7 pattern repeats with period 7#") {
  const auto t = build_sieve(1000);
  for (std::uint64_t x = 1; x <= 210; ++x) {
    CHECK((x % 7 == 0) == ((x + 210) % 7 == 0));
    // Column colour: no factor below 7.
    const bool col = x % 2 && x % 3 && x % 5;
    const bool col_next = (x + 210) % 2 && (x + 210) % 3 && (x + 210) % 5;
    CHECK(col == col_next);
    if (x > 1) CHECK(in_h(x + 210, 7, t) == col_next);
  }
}

TEST_CASE("simulated prime series") {
  CHECK(simulated_primes(100, 1).values == std::vector<double>{100.0});
  const auto s = simulated_primes(100, 3).values;
  REQUIRE(s.size() == 3);
  CHECK(s[1] == doctest::Approx(104.60517).epsilon(1e-7));
  CHECK(s[2] == doctest::Approx(109.25536).epsilon(1e-7));
  const auto e = simulated_primes(std::exp(1.0), 2).values;
  CHECK(e[1] == doctest::Approx(std::exp(1.0) + 1.0).epsilon(1e-15));
  CHECK_THROWS_AS(simulated_primes(2.0, 3), InvalidArgument);
  CHECK_THROWS_AS(simulated_primes(5.0, 0), InvalidArgument);

  const auto long_run = simulated_primes(3.5, 500).values;
  for (std::size_t i = 1; i < long_run.size(); ++i) {
    REQUIRE(long_run[i] > long_run[i - 1]);
    REQUIRE(long_run[i] == long_run[i - 1] + std::log(long_run[i - 1]));
  }
}

TEST_CASE("sieve cache layout and round trip") {
  const auto t = build_sieve(100);
  std::stringstream buf;
  write_sieve(buf, t);
  const std::string bytes = buf.str();
  REQUIRE(bytes.size() == 4 + 4 + 8 + 13);
  CHECK(bytes.substr(0, 4) == "GBSV");
  CHECK(static_cast<unsigned char>(bytes[4]) == 1);
  CHECK(static_cast<unsigned char>(bytes[8]) == 100);
  // Byte 0 of the body: integers 0..7, primes 2,3,5,7 -> 0b10101100.
  CHECK(static_cast<unsigned char>(bytes[16]) == 0xAC);

  std::stringstream in(bytes);
  CHECK(read_sieve(in) == t);

  for (std::uint64_t limit : {2ull, 63ull, 64ull, 65ull, 12345ull}) {
    const auto ref = build_sieve(limit);
    std::stringstream io;
    write_sieve(io, ref);
    CHECK(read_sieve(io) == ref);
  }

  std::stringstream bad("GBSX\x01\x00\x00\x00");
  CHECK_THROWS(read_sieve(bad));
  std::stringstream truncated(bytes.substr(0, 20));
  CHECK_THROWS(read_sieve(truncated));
}
