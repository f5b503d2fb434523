#include "goldbach/csv.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>

#include "goldbach/error.hpp"

namespace goldbach {

std::string format_sig6(double v) {
  char buf[64];
  const int n = std::snprintf(buf, sizeof buf, "%.6g", v);
  return std::string(buf, static_cast<std::size_t>(n));
}

std::size_t CsvTable::column(std::string_view name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  throw FormatError("missing column '" + std::string(name) + "'");
}

namespace {

std::vector<std::string> split_line(std::string_view line) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    const auto comma = line.find(',', pos);
    out.emplace_back(line.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::uint64_t parse_uint(const std::string& s, std::string_view what) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw FormatError("bad integer '" + s + "' in column " + std::string(what));
  }
  return v;
}

double parse_real(const std::string& s, std::string_view what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw FormatError("");
    return v;
  } catch (const std::exception&) {
    throw FormatError("bad number '" + s + "' in column " + std::string(what));
  }
}

}  // namespace

CsvTable read_csv(std::istream& in) {
  CsvTable t;
  std::string line;
  bool have_header = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto cells = split_line(line);
    if (!have_header) {
      t.header = std::move(cells);
      have_header = true;
      continue;
    }
    if (cells.size() != t.header.size()) {
      throw FormatError("row has " + std::to_string(cells.size()) + " cells, header has " +
                        std::to_string(t.header.size()));
    }
    t.rows.push_back(std::move(cells));
  }
  if (!have_header) throw FormatError("empty CSV (header row missing)");
  return t;
}

void write_scan_csv(std::ostream& out, std::span<const GpRecord> records) {
  out << kScanHeader << '\n';
  for (const auto& r : records) {
    out << r.two_n << ',' << r.gp_count << ',' << r.band.to_string() << ',' << format_sig6(r.egp) << ','
        << format_sig6(r.igp) << '\n';
  }
}

std::vector<GpRecord> read_scan_csv(std::istream& in) {
  const auto t = read_csv(in);
  const auto c_two_n = t.column("two_n");
  const auto c_gp = t.column("gp_count");
  const auto c_band = t.column("band");
  const auto c_egp = t.column("egp");
  const auto c_igp = t.column("igp");
  std::vector<GpRecord> out;
  out.reserve(t.rows.size());
  for (const auto& row : t.rows) {
    GpRecord r;
    r.two_n = parse_uint(row[c_two_n], "two_n");
    r.gp_count = parse_uint(row[c_gp], "gp_count");
    try {
      r.band = BandSignature::parse(row[c_band]);
    } catch (const InvalidArgument& e) {
      throw FormatError(e.what());
    }
    r.egp = parse_real(row[c_egp], "egp");
    r.igp = parse_real(row[c_igp], "igp");
    out.push_back(std::move(r));
  }
  return out;
}

void write_trpf_csv(std::ostream& out, const TrpfCurve& curve) {
  out << kTrpfHeader << '\n';
  for (std::size_t i = 0; i < curve.grid.size(); ++i) {
    out << format_sig6(curve.grid[i]);
    for (const auto& f : curve.per_factor) out << ',' << format_sig6(f[i]);
    out << ',' << format_sig6(curve.total[i]) << '\n';
  }
}

void write_alpha_csv(std::ostream& out, const AlphaProfile& profile) {
  out << kAlphaHeader << '\n';
  for (const auto& e : profile.entries) {
    out << e.p << ',' << format_sig6(e.alpha) << ',' << to_string(e.kind) << '\n';
  }
}

void write_report_csv(std::ostream& out, std::span<const ErrorReport> reports) {
  out << kReportHeader << '\n';
  for (const auto& r : reports) {
    out << r.band.to_string() << ',' << r.window.lo << ',' << r.window.hi << ',' << r.member_count << ','
        << format_sig6(r.mean_gp) << ',' << format_sig6(r.min_gp) << ',' << format_sig6(r.max_gp) << ','
        << format_sig6(r.bias_egp) << ',' << format_sig6(r.bias_igp) << ',' << format_sig6(r.bandwidth_igp)
        << ',' << format_sig6(r.frac_within_bound) << '\n';
  }
}

}  // namespace goldbach
