#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "goldbach/csv.hpp"

namespace goldbach {

enum class PlotKind { bands_scatter, b2_compare, trpf_curves, alpha_profile };

PlotKind parse_plot_kind(std::string_view name);
std::string_view to_string(PlotKind kind) noexcept;

struct AxisRange {
  double lo = 0.0;
  double hi = 1.0;
};

struct PlotSpec {
  PlotKind kind = PlotKind::bands_scatter;
  std::filesystem::path input;
  std::filesystem::path output;
  std::optional<AxisRange> x_range;
  std::optional<AxisRange> y_range;
};

// SVG text for an already-parsed CSV. Geometry depends only on the table
// values and the optional ranges, so equal inputs give equal bytes.
std::string render_svg(PlotKind kind, const CsvTable& table, const std::optional<AxisRange>& x_range = {},
                       const std::optional<AxisRange>& y_range = {});

// Reads spec.input and returns the SVG document (the caller writes it).
std::string render_plot(const PlotSpec& spec);

}  // namespace goldbach
