#include "goldbach/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "goldbach/analysis.hpp"
#include "goldbach/csv.hpp"
#include "goldbach/error.hpp"
#include "goldbach/estimator.hpp"
#include "goldbach/goldbach.hpp"
#include "goldbach/plot.hpp"
#include "goldbach/primes.hpp"

namespace goldbach::cli {

namespace {

namespace fs = std::filesystem;

constexpr std::uint64_t kDefaultLimit = 1'000'000;

void require_even(std::uint64_t v, std::string_view flag) {
  if (v < 4 || v % 2 != 0) {
    throw InvalidArgument(std::string(flag) + " must be an even number >= 4, got " + std::to_string(v));
  }
}

// "2", "2-3", or the aliases "B2", "B2_3".
BandSignature parse_band(std::string text) {
  if (text.size() > 1 && (text[0] == 'B' || text[0] == 'b')) {
    text.erase(0, 1);
    for (auto& ch : text) {
      if (ch == '_') ch = '-';
    }
  }
  return BandSignature::parse(text);
}

std::vector<BandSignature> parse_band_list(const std::string& text) {
  std::vector<BandSignature> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_band(item));
  if (out.empty()) throw InvalidArgument("empty --band list");
  return out;
}

std::optional<fs::path> cache_path(const std::string& flag, std::uint64_t limit) {
  const char* dir = std::getenv("GOLDBACH_CACHE_DIR");
  if (!flag.empty()) {
    fs::path p(flag);
    if (dir && *dir && p.is_relative()) return fs::path(dir) / p;
    return p;
  }
  if (dir && *dir) return fs::path(dir) / ("sieve-" + std::to_string(limit) + ".gbsv");
  return std::nullopt;
}

PrimalityTable obtain_sieve(std::uint64_t limit, const std::string& cache_flag) {
  const auto path = cache_path(cache_flag, limit);
  if (path && fs::exists(*path)) {
    auto table = load_sieve(*path);
    if (table.limit() >= limit) return table;
  }
  auto table = build_sieve(limit);
  if (path) save_sieve(table, *path);
  return table;
}

// Writes to --out when given, else to the command's stdout.
template <typename Fn>
void emit(const std::string& out_path, std::ostream& out, Fn&& write) {
  if (out_path.empty()) {
    write(out);
    return;
  }
  std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
  if (!file) throw ResourceError("cannot open " + out_path + " for writing");
  write(file);
}

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

GridSpec parse_grid(const std::string& text) {
  GridSpec g;
  std::stringstream ss(text);
  std::string lo, hi, steps;
  if (!std::getline(ss, lo, ':') || !std::getline(ss, hi, ':') || !std::getline(ss, steps) || lo.empty() ||
      hi.empty() || steps.empty()) {
    throw InvalidArgument("--grid expects lo:hi:steps, got '" + text + "'");
  }
  try {
    g.lo = std::stod(lo);
    g.hi = std::stod(hi);
    g.steps = static_cast<std::size_t>(std::stoull(steps));
  } catch (const std::exception&) {
    throw InvalidArgument("--grid expects lo:hi:steps, got '" + text + "'");
  }
  return g;
}

std::pair<int, int> parse_factors(const std::string& text) {
  int lo = 0, hi = 0;
  char tail = 0;
  if (std::sscanf(text.c_str(), "%d..%d%c", &lo, &hi, &tail) == 2) return {lo, hi};
  if (std::sscanf(text.c_str(), "%d%c", &lo, &tail) == 1) return {lo, lo};
  throw InvalidArgument("--factors expects k or lo..hi, got '" + text + "'");
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Goldbach pair counts, band analysis and pair-count estimators", "goldbach"};
  app.require_subcommand(1, 1);

  std::uint64_t even = 0;
  bool no_pairs = false;
  auto* count_cmd = app.add_subcommand("count", "exact Goldbach pair count for one even number");
  count_cmd->add_option("--even", even, "the even number 2n")->required();
  count_cmd->add_flag("--no-pairs", no_pairs, "print only the count");

  std::uint64_t lo = 4, hi = kDefaultLimit;
  std::string band_list, out_path, cache_flag, in_path;
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  auto* scan_cmd = app.add_subcommand("scan", "per-2n records over an even range");
  scan_cmd->add_option("--lo", lo, "first even (inclusive)");
  scan_cmd->add_option("--hi", hi, "last even (inclusive)");
  scan_cmd->add_option("--band", band_list, "comma-separated band signatures, e.g. 2,2-3");
  scan_cmd->add_option("--workers", workers, "parallel workers")->check(CLI::PositiveNumber);
  scan_cmd->add_option("--out", out_path, "output CSV");
  scan_cmd->add_option("--cache", cache_flag, "sieve cache file (.gbsv)");

  std::string method;
  auto* est_cmd = app.add_subcommand("estimate", "first-order or improved pair estimate");
  est_cmd->add_option("--even", even, "the even number 2n")->required();
  est_cmd->add_option("--method", method, "egp or igp")->required()->check(CLI::IsMember({"egp", "igp"}));

  double p_value = 0.0;
  std::string factors = "2..5", grid_text;
  bool simulated = false;
  auto* trpf_cmd = app.add_subcommand("trpf", "TRPF curves on a log_p(x) grid");
  trpf_cmd->add_option("--p", p_value, "prime (or simulated start)")->required();
  trpf_cmd->add_option("--factors", factors, "factor counts, k or lo..hi within 2..5");
  trpf_cmd->add_option("--grid", grid_text, "lo:hi:steps in log_p(x)")->required();
  trpf_cmd->add_flag("--simulated", simulated, "use the simulated prime series");
  trpf_cmd->add_option("--out", out_path, "output CSV");

  auto* alpha_cmd = app.add_subcommand("alpha", "alpha for every odd pen prime");
  alpha_cmd->add_option("--even", even, "the even number 2n")->required();
  alpha_cmd->add_option("--out", out_path, "output CSV");

  std::uint64_t cutoff = 0;
  auto* const_cmd = app.add_subcommand("constants", "partial Mertens-type products for band B2");
  const_cmd->add_option("--cutoff", cutoff, "largest prime considered")->required();

  std::string band_text;
  auto* report_cmd = app.add_subcommand("report", "band error report from a scan CSV");
  report_cmd->add_option("--band", band_text, "band signature")->required();
  report_cmd->add_option("--lo", lo, "window start (even)")->required();
  report_cmd->add_option("--hi", hi, "window end (even)")->required();
  report_cmd->add_option("--in", in_path, "scan CSV")->required();
  report_cmd->add_option("--out", out_path, "output CSV");

  std::string kind_text;
  auto* plot_cmd = app.add_subcommand("plot", "render a CSV as SVG");
  plot_cmd->add_option("--kind", kind_text, "bands-scatter|b2-compare|trpf-curves|alpha-profile")
      ->required()
      ->check(CLI::IsMember({"bands-scatter", "b2-compare", "trpf-curves", "alpha-profile"}));
  plot_cmd->add_option("--in", in_path, "input CSV")->required();
  plot_cmd->add_option("--out", out_path, "output SVG")->required();

  std::vector<std::string> argv{"goldbach"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::vector<const char*> raw;
  for (const auto& a : argv) raw.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(raw.size()), raw.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (count_cmd->parsed()) {
      require_even(even, "--even");
      const auto table = build_sieve(even);
      const auto result = count_gp(even, table, !no_pairs);
      out << "gp=" << result.count << '\n';
      for (const auto& [a, b] : result.pairs) out << a << '+' << b << '\n';
    } else if (scan_cmd->parsed()) {
      require_even(lo, "--lo");
      require_even(hi, "--hi");
      if (lo > hi) throw OutOfRange("--lo must not exceed --hi");
      ScanOptions opt;
      opt.workers = workers;
      if (!band_list.empty()) opt.band_filter = parse_band_list(band_list);
      const auto table = obtain_sieve(hi, cache_flag);
      const auto records = scan(lo, hi, table, opt);
      emit(out_path, out, [&](std::ostream& o) { write_scan_csv(o, records); });
    } else if (est_cmd->parsed()) {
      require_even(even, "--even");
      out << fixed6(method == "egp" ? egp(even) : igp(even)) << '\n';
    } else if (trpf_cmd->parsed()) {
      const auto [k_lo, k_hi] = parse_factors(factors);
      const auto curve = trpf_curve(p_value, parse_grid(grid_text),
                                    simulated ? PrimeSource::simulated : PrimeSource::real, k_lo, k_hi);
      emit(out_path, out, [&](std::ostream& o) { write_trpf_csv(o, curve); });
    } else if (alpha_cmd->parsed()) {
      require_even(even, "--even");
      const auto profile = alpha_profile(even);
      emit(out_path, out, [&](std::ostream& o) { write_alpha_csv(o, profile); });
    } else if (const_cmd->parsed()) {
      if (cutoff < 9) throw InvalidArgument("--cutoff must be >= 9");
      const auto table = build_sieve(cutoff);
      const auto k = mertens_partial(cutoff, table);
      out << "c_partial=" << format_sig6(k.c_partial) << '\n' << "C_partial=" << format_sig6(k.C_partial) << '\n';
    } else if (report_cmd->parsed()) {
      require_even(lo, "--lo");
      require_even(hi, "--hi");
      const auto band = parse_band(band_text);
      std::ifstream in(in_path);
      if (!in) throw ResourceError("cannot open " + in_path);
      const auto records = read_scan_csv(in);
      const auto rep = error_report(records, band, Window{lo, hi});
      std::vector<ErrorReport> rows;
      if (rep) {
        rows.push_back(*rep);
      } else {
        err << "note: no records of band " << band.to_string() << " in [" << lo << ", " << hi << "]\n";
      }
      emit(out_path, out, [&](std::ostream& o) { write_report_csv(o, rows); });
    } else if (plot_cmd->parsed()) {
      PlotSpec spec;
      spec.kind = parse_plot_kind(kind_text);
      spec.input = in_path;
      spec.output = out_path;
      const auto svg = render_plot(spec);
      emit(out_path, out, [&](std::ostream& o) { o << svg; });
    }
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const OutOfRange& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumeric;
  }
  return kExitOk;
}

}  // namespace goldbach::cli
