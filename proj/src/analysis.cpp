#include "goldbach/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "goldbach/error.hpp"
#include "goldbach/numerics.hpp"

namespace goldbach {

namespace {

void require_sorted(std::span<const GpRecord> records) {
  for (std::size_t i = 1; i < records.size(); ++i) {
    if (records[i].two_n <= records[i - 1].two_n) {
      throw InvalidArgument("records must be sorted by ascending 2n");
    }
  }
}

std::span<const GpRecord> in_window(std::span<const GpRecord> records, Window w) {
  auto first = std::lower_bound(records.begin(), records.end(), w.lo,
                                [](const GpRecord& r, std::uint64_t v) { return r.two_n < v; });
  auto last = std::upper_bound(first, records.end(), w.hi,
                               [](std::uint64_t v, const GpRecord& r) { return v < r.two_n; });
  return {first, last};
}

std::vector<const GpRecord*> select(std::span<const GpRecord> records, const BandSignature& band, Window w) {
  std::vector<const GpRecord*> out;
  for (const auto& r : in_window(records, w)) {
    if (r.band == band) out.push_back(&r);
  }
  return out;
}

BandStats summarize(const std::vector<const GpRecord*>& rows, const BandSignature& band, Window w) {
  BandStats s;
  s.band = band;
  s.window = w;
  s.member_count = rows.size();
  std::vector<double> gps;
  gps.reserve(rows.size());
  double sum_gp = 0.0, sum_egp = 0.0, sum_igp = 0.0;
  s.min_gp = static_cast<double>(rows.front()->gp_count);
  s.max_gp = s.min_gp;
  for (const auto* r : rows) {
    const double g = static_cast<double>(r->gp_count);
    gps.push_back(g);
    sum_gp += g;
    sum_egp += r->egp;
    sum_igp += r->igp;
    s.min_gp = std::min(s.min_gp, g);
    s.max_gp = std::max(s.max_gp, g);
  }
  const double m = static_cast<double>(rows.size());
  s.mean_gp = sum_gp / m;
  s.mean_egp = sum_egp / m;
  s.mean_igp = sum_igp / m;
  std::sort(gps.begin(), gps.end());
  const std::size_t mid = gps.size() / 2;
  s.median_gp = gps.size() % 2 ? gps[mid] : 0.5 * (gps[mid - 1] + gps[mid]);
  return s;
}

}  // namespace

double error_band_bound(std::uint64_t two_n) {
  return 2.0 * numerics::offset_li(std::sqrt(static_cast<double>(two_n)));
}

std::optional<BandStats> band_stats(std::span<const GpRecord> records, const BandSignature& band, Window window) {
  require_sorted(records);
  const auto rows = select(records, band, window);
  if (rows.empty()) return std::nullopt;
  return summarize(rows, band, window);
}

std::optional<double> band_ratio(std::span<const GpRecord> records, const BandSignature& band_a,
                                 const BandSignature& band_b, Window window) {
  const auto a = band_stats(records, band_a, window);
  const auto b = band_stats(records, band_b, window);
  if (!a || !b) return std::nullopt;
  return b->mean_gp / a->mean_gp;
}

std::optional<ErrorReport> error_report(std::span<const GpRecord> records, const BandSignature& band,
                                        Window window) {
  require_sorted(records);
  const auto rows = select(records, band, window);
  if (rows.empty()) return std::nullopt;
  const auto stats = summarize(rows, band, window);

  ErrorReport rep;
  rep.band = band;
  rep.window = window;
  rep.member_count = stats.member_count;
  rep.mean_gp = stats.mean_gp;
  rep.min_gp = stats.min_gp;
  rep.max_gp = stats.max_gp;

  double sum_e = 0.0, sum_i = 0.0, abs_e = 0.0, abs_i = 0.0;
  double lo_resid = 0.0, hi_resid = 0.0;
  std::uint64_t within = 0;
  bool first = true;
  for (const auto* r : rows) {
    const double g = static_cast<double>(r->gp_count);
    sum_e += r->egp - g;
    sum_i += r->igp - g;
    abs_e += std::abs(r->egp - g);
    abs_i += std::abs(r->igp - g);
    const double resid = g - r->igp;
    if (first) {
      lo_resid = hi_resid = resid;
      first = false;
    } else {
      lo_resid = std::min(lo_resid, resid);
      hi_resid = std::max(hi_resid, resid);
    }
    if (std::abs(resid) <= error_band_bound(r->two_n)) ++within;
  }
  const double m = static_cast<double>(rows.size());
  rep.bias_egp = sum_e / m;
  rep.bias_igp = sum_i / m;
  rep.mean_abs_egp = abs_e / m;
  rep.mean_abs_igp = abs_i / m;
  rep.bandwidth_igp = hi_resid - lo_resid;
  rep.frac_within_bound = static_cast<double>(within) / m;
  return rep;
}

std::vector<BandStats> all_band_stats(std::span<const GpRecord> records, Window window) {
  require_sorted(records);
  std::map<BandSignature, std::vector<const GpRecord*>> groups;
  for (const auto& r : in_window(records, window)) groups[r.band].push_back(&r);
  std::vector<BandStats> out;
  out.reserve(groups.size());
  for (const auto& [band, rows] : groups) out.push_back(summarize(rows, band, window));
  return out;
}

}  // namespace goldbach
