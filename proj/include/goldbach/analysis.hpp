#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "goldbach/goldbach.hpp"

namespace goldbach {

// Closed interval on 2n.
struct Window {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
};

struct BandStats {
  BandSignature band;
  Window window;
  std::uint64_t member_count = 0;
  double mean_gp = 0.0;
  double median_gp = 0.0;
  double min_gp = 0.0;
  double max_gp = 0.0;
  double mean_egp = 0.0;
  double mean_igp = 0.0;
};

struct ErrorReport {
  BandSignature band;
  Window window;
  std::uint64_t member_count = 0;
  double mean_gp = 0.0;
  double min_gp = 0.0;
  double max_gp = 0.0;
  double bias_egp = 0.0;       // mean(egp - gp)
  double bias_igp = 0.0;       // mean(igp - gp)
  double mean_abs_egp = 0.0;   // mean |egp - gp|
  double mean_abs_igp = 0.0;   // mean |igp - gp|
  double bandwidth_igp = 0.0;  // max - min of (gp - igp)
  double frac_within_bound = 0.0;  // share with |gp - igp| <= 2 Li(sqrt(2n))
};

// All of these require records sorted by strictly ascending two_n and return
// nullopt when no record of the band falls inside the window.
std::optional<BandStats> band_stats(std::span<const GpRecord> records, const BandSignature& band, Window window);

// mean_gp(band_b) / mean_gp(band_a).
std::optional<double> band_ratio(std::span<const GpRecord> records, const BandSignature& band_a,
                                 const BandSignature& band_b, Window window);

std::optional<ErrorReport> error_report(std::span<const GpRecord> records, const BandSignature& band,
                                        Window window);

// Stats for every band present in the window, ordered by signature.
std::vector<BandStats> all_band_stats(std::span<const GpRecord> records, Window window);

// The error-band half-width 2 Li(sqrt(2n)).
double error_band_bound(std::uint64_t two_n);

}  // namespace goldbach
