#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "goldbach/analysis.hpp"
#include "goldbach/estimator.hpp"
#include "goldbach/goldbach.hpp"

namespace goldbach {

// Reals in every CSV are written with 6 significant digits (%.6g); rows end
// with LF and a header row is always present.
std::string format_sig6(double v);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  // Index of a header column; FormatError naming the column when absent.
  std::size_t column(std::string_view name) const;
};

CsvTable read_csv(std::istream& in);

inline constexpr std::string_view kScanHeader = "two_n,gp_count,band,egp,igp";
inline constexpr std::string_view kTrpfHeader = "logpx,f2,f3,f4,f5,total";
inline constexpr std::string_view kAlphaHeader = "p,alpha,case";
inline constexpr std::string_view kReportHeader =
    "band,lo,hi,members,mean_gp,min_gp,max_gp,bias_egp,bias_igp,bandwidth_igp,frac_within_bound";

void write_scan_csv(std::ostream& out, std::span<const GpRecord> records);
std::vector<GpRecord> read_scan_csv(std::istream& in);

void write_trpf_csv(std::ostream& out, const TrpfCurve& curve);
void write_alpha_csv(std::ostream& out, const AlphaProfile& profile);
void write_report_csv(std::ostream& out, std::span<const ErrorReport> reports);

}  // namespace goldbach
