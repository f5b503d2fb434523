#include "goldbach/plot.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <utility>
#include <vector>

#include "goldbach/error.hpp"

namespace goldbach {

PlotKind parse_plot_kind(std::string_view name) {
  if (name == "bands-scatter") return PlotKind::bands_scatter;
  if (name == "b2-compare") return PlotKind::b2_compare;
  if (name == "trpf-curves") return PlotKind::trpf_curves;
  if (name == "alpha-profile") return PlotKind::alpha_profile;
  throw InvalidArgument("unknown plot kind '" + std::string(name) + "'");
}

std::string_view to_string(PlotKind kind) noexcept {
  switch (kind) {
    case PlotKind::bands_scatter: return "bands-scatter";
    case PlotKind::b2_compare: return "b2-compare";
    case PlotKind::trpf_curves: return "trpf-curves";
    case PlotKind::alpha_profile: return "alpha-profile";
  }
  return "bands-scatter";
}

namespace {

constexpr double kWidth = 800, kHeight = 500;
constexpr double kLeft = 70, kRight = 20, kTop = 30, kBottom = 50;

constexpr std::array<const char*, 9> kPalette{"#8b0000", "#00008b", "#ff8c00", "#2e8b57", "#9400d3",
                                              "#00ced1", "#b8860b", "#ff1493", "#556b2f"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::vector<double> column_values(const CsvTable& t, std::string_view name) {
  const auto c = t.column(name);
  std::vector<double> out;
  out.reserve(t.rows.size());
  for (const auto& row : t.rows) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(row[c], &used));
      if (used != row[c].size()) throw FormatError("");
    } catch (const std::exception&) {
      throw FormatError("non-numeric value '" + row[c] + "' in column '" + std::string(name) + "'");
    }
  }
  return out;
}

AxisRange span_of(std::initializer_list<const std::vector<double>*> series, const std::optional<AxisRange>& fixed) {
  if (fixed) return *fixed;
  bool any = false;
  AxisRange r{0.0, 1.0};
  for (const auto* s : series) {
    for (double v : *s) {
      if (!any) {
        r = {v, v};
        any = true;
      }
      r.lo = std::min(r.lo, v);
      r.hi = std::max(r.hi, v);
    }
  }
  if (r.hi <= r.lo) r = {r.lo - 1.0, r.hi + 1.0};
  return r;
}

class Canvas {
 public:
  Canvas(AxisRange x, AxisRange y, std::string_view title, std::string_view x_label, std::string_view y_label)
      : x_(x), y_(y) {
    out_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
         << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n"
         << "<rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n"
         << "<text x=\"" << num(kWidth / 2) << "\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">" << title
         << "</text>\n";
    axes(x_label, y_label);
  }

  double px(double v) const { return kLeft + (v - x_.lo) / (x_.hi - x_.lo) * (kWidth - kLeft - kRight); }
  double py(double v) const { return kHeight - kBottom - (v - y_.lo) / (y_.hi - y_.lo) * (kHeight - kTop - kBottom); }

  void marker(double x, double y, std::string_view color) {
    out_ << "<circle cx=\"" << num(px(x)) << "\" cy=\"" << num(py(y)) << "\" r=\"1.5\" fill=\"" << color << "\"/>\n";
  }

  void polyline(const std::vector<double>& xs, const std::vector<double>& ys, std::string_view color) {
    out_ << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.2\" points=\"";
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i) out_ << ' ';
      out_ << num(px(xs[i])) << ',' << num(py(ys[i]));
    }
    out_ << "\"/>\n";
  }

  void legend(const std::vector<std::pair<std::string, std::string>>& entries) {
    double y = kTop + 10;
    for (const auto& [label, color] : entries) {
      out_ << "<rect x=\"" << num(kWidth - 150) << "\" y=\"" << num(y - 8) << "\" width=\"10\" height=\"10\" fill=\""
           << color << "\"/>\n"
           << "<text x=\"" << num(kWidth - 135) << "\" y=\"" << num(y) << "\" font-size=\"11\">" << label
           << "</text>\n";
      y += 15;
    }
  }

  std::string finish() {
    out_ << "</svg>\n";
    return out_.str();
  }

 private:
  void axes(std::string_view x_label, std::string_view y_label) {
    const double x0 = kLeft, x1 = kWidth - kRight, y0 = kHeight - kBottom, y1 = kTop;
    out_ << "<line x1=\"" << num(x0) << "\" y1=\"" << num(y0) << "\" x2=\"" << num(x1) << "\" y2=\"" << num(y0)
         << "\" stroke=\"black\"/>\n"
         << "<line x1=\"" << num(x0) << "\" y1=\"" << num(y0) << "\" x2=\"" << num(x0) << "\" y2=\"" << num(y1)
         << "\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 4; ++i) {
      const double xv = x_.lo + (x_.hi - x_.lo) * i / 4.0;
      const double yv = y_.lo + (y_.hi - y_.lo) * i / 4.0;
      out_ << "<text x=\"" << num(px(xv)) << "\" y=\"" << num(y0 + 16) << "\" text-anchor=\"middle\" font-size=\"10\">"
           << format_sig6(xv) << "</text>\n"
           << "<text x=\"" << num(x0 - 6) << "\" y=\"" << num(py(yv) + 3) << "\" text-anchor=\"end\" font-size=\"10\">"
           << format_sig6(yv) << "</text>\n";
    }
    out_ << "<text x=\"" << num((x0 + x1) / 2) << "\" y=\"" << num(kHeight - 10)
         << "\" text-anchor=\"middle\" font-size=\"12\">" << x_label << "</text>\n"
         << "<text x=\"15\" y=\"" << num((y0 + y1) / 2) << "\" text-anchor=\"middle\" font-size=\"12\" transform=\"rotate(-90 15 "
         << num((y0 + y1) / 2) << ")\">" << y_label << "</text>\n";
  }

  AxisRange x_, y_;
  std::ostringstream out_;
};

std::string bands_scatter(const CsvTable& t, const std::optional<AxisRange>& xr, const std::optional<AxisRange>& yr) {
  const auto xs = column_values(t, "two_n");
  const auto ys = column_values(t, "gp_count");
  const auto c_band = t.column("band");

  // The nine most populated bands get colours, the rest stay grey.
  std::map<std::string, std::size_t> population;
  for (const auto& row : t.rows) ++population[row[c_band]];
  std::vector<std::pair<std::string, std::size_t>> ranked(population.begin(), population.end());
  std::stable_sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
  std::map<std::string, std::string> colour;
  std::vector<std::pair<std::string, std::string>> legend;
  for (std::size_t i = 0; i < ranked.size() && i < kPalette.size(); ++i) {
    colour[ranked[i].first] = kPalette[i];
    legend.emplace_back("B " + ranked[i].first, kPalette[i]);
  }

  Canvas c(span_of({&xs}, xr), span_of({&ys}, yr), "Goldbach pairs by band", "2n", "GP count");
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const auto it = colour.find(t.rows[i][c_band]);
    c.marker(xs[i], ys[i], it == colour.end() ? "#bbbbbb" : it->second);
  }
  c.legend(legend);
  return c.finish();
}

std::string b2_compare(const CsvTable& t, const std::optional<AxisRange>& xr, const std::optional<AxisRange>& yr) {
  const auto xs = column_values(t, "two_n");
  const auto gp = column_values(t, "gp_count");
  const auto e = column_values(t, "egp");
  const auto g = column_values(t, "igp");
  Canvas c(span_of({&xs}, xr), span_of({&gp, &e, &g}, yr), "EGP, IGP and actual GP", "2n", "pairs");
  for (std::size_t i = 0; i < xs.size(); ++i) c.marker(xs[i], gp[i], "#999999");
  c.polyline(xs, e, "#1f4fd1");
  c.polyline(xs, g, "#d11f1f");
  c.legend({{"GP", "#999999"}, {"EGP", "#1f4fd1"}, {"IGP", "#d11f1f"}});
  return c.finish();
}

std::string trpf_curves(const CsvTable& t, const std::optional<AxisRange>& xr, const std::optional<AxisRange>& yr) {
  const auto xs = column_values(t, "logpx");
  const std::array<std::pair<const char*, const char*>, 5> cols{{{"f2", "#e6c200"},
                                                                  {"f3", "#2e8b57"},
                                                                  {"f4", "#ff8c00"},
                                                                  {"f5", "#1f4fd1"},
                                                                  {"total", "#000000"}}};
  std::vector<std::vector<double>> series;
  for (const auto& [name, colour] : cols) series.push_back(column_values(t, name));
  Canvas c(span_of({&xs}, xr), span_of({&series[0], &series[1], &series[2], &series[3], &series[4]}, yr),
           "TRPF by factor count", "log_p(x)", "TRPF");
  std::vector<std::pair<std::string, std::string>> legend;
  for (std::size_t i = 0; i < cols.size(); ++i) {
    c.polyline(xs, series[i], cols[i].second);
    legend.emplace_back(cols[i].first, cols[i].second);
  }
  c.legend(legend);
  return c.finish();
}

std::string alpha_profile_plot(const CsvTable& t, const std::optional<AxisRange>& xr,
                               const std::optional<AxisRange>& yr) {
  const auto ps = column_values(t, "p");
  const auto as = column_values(t, "alpha");
  Canvas c(span_of({&ps}, xr), span_of({&as}, yr), "alpha over the pen", "p", "alpha");
  c.polyline(ps, as, "#1f4fd1");
  for (std::size_t i = 0; i < ps.size(); ++i) c.marker(ps[i], as[i], "#1f4fd1");
  return c.finish();
}

}  // namespace

std::string render_svg(PlotKind kind, const CsvTable& table, const std::optional<AxisRange>& x_range,
                       const std::optional<AxisRange>& y_range) {
  switch (kind) {
    case PlotKind::bands_scatter: return bands_scatter(table, x_range, y_range);
    case PlotKind::b2_compare: return b2_compare(table, x_range, y_range);
    case PlotKind::trpf_curves: return trpf_curves(table, x_range, y_range);
    case PlotKind::alpha_profile: return alpha_profile_plot(table, x_range, y_range);
  }
  throw InvalidArgument("unknown plot kind");
}

std::string render_plot(const PlotSpec& spec) {
  std::ifstream in(spec.input);
  if (!in) throw ResourceError("cannot open " + spec.input.string());
  return render_svg(spec.kind, read_csv(in), spec.x_range, spec.y_range);
}

}  // namespace goldbach
