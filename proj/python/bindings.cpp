#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "goldbach/analysis.hpp"
#include "goldbach/cli.hpp"
#include "goldbach/error.hpp"
#include "goldbach/estimator.hpp"
#include "goldbach/goldbach.hpp"
#include "goldbach/numerics.hpp"
#include "goldbach/primes.hpp"

namespace py = pybind11;
using namespace goldbach;

PYBIND11_MODULE(_goldbach, m) {
  m.doc() = "Goldbach pair counts, band classification and pair-count estimators";

  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<OverflowError>(m, "OverflowError", PyExc_OverflowError);
  py::register_exception<OutOfRange>(m, "OutOfRange", PyExc_IndexError);

  py::class_<PrimalityTable>(m, "PrimalityTable")
      .def_property_readonly("limit", &PrimalityTable::limit)
      .def_property_readonly("count", &PrimalityTable::count)
      .def("is_prime", &PrimalityTable::is_prime)
      .def("__contains__", &PrimalityTable::is_prime);

  m.def("build_sieve", &build_sieve, py::arg("limit"), py::arg("segment") = kDefaultSegment);
  m.def("primes_in", &primes_in, py::arg("table"), py::arg("lo"), py::arg("hi"));
  m.def("primorial", &primorial, py::arg("p"));
  m.def("in_h", &in_h, py::arg("x"), py::arg("p"), py::arg("table"));
  m.def("simulated_primes", [](double start, std::size_t count) { return simulated_primes(start, count).values; },
        py::arg("start"), py::arg("count"));

  m.def("pen", py::overload_cast<std::uint64_t>(&pen), py::arg("two_n"));
  m.def("band_signature", [](std::uint64_t two_n) { return band_signature(two_n).primes; }, py::arg("two_n"));
  m.def(
      "count_gp",
      [](std::uint64_t two_n, const PrimalityTable& t, bool with_pairs) {
        auto r = count_gp(two_n, t, with_pairs);
        return py::make_tuple(r.count, r.pairs);
      },
      py::arg("two_n"), py::arg("table"), py::arg("pairs") = false);

  py::class_<GpRecord>(m, "GpRecord")
      .def_readonly("two_n", &GpRecord::two_n)
      .def_readonly("gp_count", &GpRecord::gp_count)
      .def_property_readonly("band", [](const GpRecord& r) { return r.band.primes; })
      .def_readonly("egp", &GpRecord::egp)
      .def_readonly("igp", &GpRecord::igp);

  m.def(
      "scan",
      [](std::uint64_t lo, std::uint64_t hi, const PrimalityTable& t,
         std::optional<std::vector<std::vector<std::uint64_t>>> bands, unsigned workers) {
        ScanOptions opt;
        opt.workers = workers;
        if (bands) {
          opt.band_filter.emplace();
          for (auto& b : *bands) opt.band_filter->push_back(BandSignature{b});
        }
        py::gil_scoped_release release;
        return scan(lo, hi, t, opt);
      },
      py::arg("lo"), py::arg("hi"), py::arg("table"), py::arg("bands") = py::none(), py::arg("workers") = 1);

  m.def("li", &numerics::li, py::arg("x"));
  m.def("Li", &numerics::offset_li, py::arg("x"));

  m.def("f_h", &f_h, py::arg("p"));
  m.def("egp", py::overload_cast<std::uint64_t>(&egp), py::arg("two_n"));
  m.def("igp", py::overload_cast<std::uint64_t>(&igp), py::arg("two_n"));
  m.def("alpha", &alpha, py::arg("upper"), py::arg("p"));
  m.def("integral_2f", &integral_2f, py::arg("two_n"), py::arg("p"));
  m.def("integral_3f", py::overload_cast<std::uint64_t, std::uint64_t>(&integral_3f), py::arg("two_n"),
        py::arg("p"));
  m.def("egp_b2_closed", &egp_b2_closed, py::arg("two_n"), py::arg("C"));
  m.def(
      "trpf",
      [](double x, double p, int k, bool simulated) {
        return trpf(x, p, k, simulated ? PrimeSource::simulated : PrimeSource::real);
      },
      py::arg("x"), py::arg("p"), py::arg("k"), py::arg("simulated") = false);
  m.def(
      "trpf_curve",
      [](double p, double lo, double hi, std::size_t steps, bool simulated) {
        auto c = trpf_curve(p, GridSpec{lo, hi, steps}, simulated ? PrimeSource::simulated : PrimeSource::real);
        py::dict d;
        d["grid"] = c.grid;
        for (int k = 2; k <= 5; ++k) d[py::str("f" + std::to_string(k))] = c.factor(k);
        d["total"] = c.total;
        return d;
      },
      py::arg("p"), py::arg("lo"), py::arg("hi"), py::arg("steps"), py::arg("simulated") = false);

  py::class_<AlphaEntry>(m, "AlphaEntry")
      .def_readonly("p", &AlphaEntry::p)
      .def_readonly("alpha", &AlphaEntry::alpha)
      .def_property_readonly("case", [](const AlphaEntry& e) { return std::string(to_string(e.kind)); })
      .def_readonly("divides", &AlphaEntry::divides)
      .def_readonly("alpha_at_n", &AlphaEntry::alpha_at_n);
  m.def("alpha_profile", [](std::uint64_t two_n) { return alpha_profile(two_n).entries; }, py::arg("two_n"));

  py::class_<B2Constants>(m, "B2Constants")
      .def_readonly("c_partial", &B2Constants::c_partial)
      .def_readonly("C_partial", &B2Constants::C_partial)
      .def_readonly("cutoff", &B2Constants::cutoff);
  m.def("mertens_partial", &mertens_partial, py::arg("cutoff"), py::arg("table"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
