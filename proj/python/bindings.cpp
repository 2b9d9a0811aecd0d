#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "redchern/cli.hpp"
#include "redchern/errors.hpp"
#include "redchern/json_io.hpp"
#include "redchern/suites.hpp"

namespace py = pybind11;
using namespace redchern;

namespace {

std::vector<std::string> verify(const std::string& suite, int max_rank, std::uint64_t seed,
                                const std::optional<std::string>& fault) {
  SuiteOptions options;
  options.max_rank = max_rank;
  options.seed = seed;
  if (fault) {
    if (*fault == "phi") {
      options.fault = Fault::phi;
    } else if (*fault == "cbar") {
      options.fault = Fault::cbar;
    } else {
      throw UsageError("fault must be 'phi' or 'cbar'");
    }
  }
  std::vector<CheckReport> reports;
  {
    py::gil_scoped_release release;
    reports = run_suite(suite, options);
  }
  std::vector<std::string> out;
  out.reserve(reports.size());
  for (const auto& r : reports) out.push_back(to_json(r).dump());
  return out;
}

py::tuple run_cli(const std::vector<std::string>& args) {
  std::vector<std::string> full{"redchern"};
  full.insert(full.end(), args.begin(), args.end());
  std::ostringstream out, err;
  const int code = cli::run(full, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_redchern, m) {
  m.doc() = "Reduced Chern classes and the universal polynomials psi and phi";

  m.def(
      "formula",
      [](int n, int r, const std::string& format) {
        return cli::render_formula(n, r, cli::parse_format(format));
      },
      py::arg("n"), py::arg("r"), py::arg("format") = "text");
  m.def(
      "universal",
      [](int n, const std::string& format) {
        py::gil_scoped_release release;
        return cli::render_universal(n, cli::parse_format(format));
      },
      py::arg("n"), py::arg("format") = "json");
  m.def("table", &cli::table_json, py::arg("max_rank") = 4);
  m.def("verify", &verify, py::arg("suite") = "all", py::arg("max_rank") = 4,
        py::arg("seed") = 0, py::arg("fault") = std::nullopt,
        "Runs a suite and returns one JSON object per check.");
  m.def("run_cli", &run_cli, py::arg("args"),
        "Runs the command line in-process; returns (exit_code, stdout, stderr).");
}
