#include <array>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include "goldbach/error.hpp"
#include "goldbach/primes.hpp"

namespace goldbach {

namespace {

constexpr std::array<char, 4> kMagic{'G', 'B', 'S', 'V'};

template <typename T>
void put_le(std::ostream& out, T v) {
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    out.put(static_cast<char>((v >> (8 * i)) & 0xff));
  }
}

template <typename T>
T get_le(std::istream& in) {
  T v = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    const int c = in.get();
    if (c == std::char_traits<char>::eof()) throw FormatError("truncated sieve cache header");
    v |= static_cast<T>(static_cast<unsigned char>(c)) << (8 * i);
  }
  return v;
}

}  // namespace

void write_sieve(std::ostream& out, const PrimalityTable& table) {
  out.write(kMagic.data(), kMagic.size());
  put_le<std::uint32_t>(out, kSieveCacheVersion);
  put_le<std::uint64_t>(out, table.limit());
  const std::uint64_t nbytes = (table.limit() + 1 + 7) / 8;
  const auto words = table.words();
  for (std::uint64_t j = 0; j < nbytes; ++j) {
    out.put(static_cast<char>((words[j >> 3] >> (8 * (j & 7))) & 0xff));
  }
  if (!out) throw ResourceError("failed writing sieve cache");
}

PrimalityTable read_sieve(std::istream& in) {
  std::array<char, 4> magic{};
  in.read(magic.data(), magic.size());
  if (!in || magic != kMagic) throw FormatError("not a sieve cache (bad magic)");
  const auto version = get_le<std::uint32_t>(in);
  if (version != kSieveCacheVersion) {
    throw FormatError("unsupported sieve cache version " + std::to_string(version));
  }
  const auto limit = get_le<std::uint64_t>(in);
  if (limit < 2 || limit > kPracticalSieveCeiling) throw FormatError("sieve cache limit out of range");
  const std::uint64_t nbytes = (limit + 1 + 7) / 8;
  std::vector<std::uint64_t> words(limit / 64 + 1, 0);
  for (std::uint64_t j = 0; j < nbytes; ++j) {
    const int c = in.get();
    if (c == std::char_traits<char>::eof()) throw FormatError("truncated sieve cache body");
    words[j >> 3] |= static_cast<std::uint64_t>(static_cast<unsigned char>(c)) << (8 * (j & 7));
  }
  return PrimalityTable::from_words(limit, std::move(words));
}

void save_sieve(const PrimalityTable& table, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ResourceError("cannot open " + path.string() + " for writing");
  write_sieve(out, table);
}

PrimalityTable load_sieve(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ResourceError("cannot open " + path.string());
  return read_sieve(in);
}

}  // namespace goldbach
