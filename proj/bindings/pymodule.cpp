// Python face of the core: algebras travel as JSON text in both
// directions, so the module needs no numeric type conversions.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "nilgeo/algebra.hpp"
#include "nilgeo/algebra_io.hpp"
#include "nilgeo/paper_suite.hpp"
#include "nilgeo/report.hpp"

namespace py = pybind11;

namespace {

using nilgeo::MetricTwoStepAlgebra;

MetricTwoStepAlgebra catalog_entry(const std::string& name) {
  if (name == "paper-nj") return nilgeo::paper_nj();
  if (name == "paper-njprime") return nilgeo::paper_njprime();
  if (name == "h3") return nilgeo::heisenberg(1);
  if (name == "quaternionic") return nilgeo::quaternionic_heisenberg();
  throw py::value_error("unknown catalog name '" + name +
                        "' (known: paper-nj, paper-njprime, h3, quaternionic)");
}

nilgeo::NilmanifoldData data_from_file(const nilgeo::AlgebraFile& f) {
  auto data = nilgeo::NilmanifoldData::standard(f.algebra);
  auto diagonal = [](const nilgeo::QVec& scales) {
    std::vector<nilgeo::QVec> basis;
    for (std::size_t i = 0; i < scales.size(); ++i) {
      nilgeo::QVec b(scales.size(), nilgeo::Rational(0));
      b[i] = scales[i];
      basis.push_back(std::move(b));
    }
    return nilgeo::IntegerLattice::from_basis(scales.size(), basis);
  };
  if (f.lattice_M_scale) data.M = diagonal(*f.lattice_M_scale);
  if (f.lattice_L_scale) data.L = diagonal(*f.lattice_L_scale);
  return data;
}

}  // namespace

PYBIND11_MODULE(_nilgeo, m) {
  m.doc() =
      "Exact left-invariant geometry of metric 2-step nilpotent Lie algebras. "
      "Algebras and reports are exchanged as JSON strings; rationals are 'p/q'.";

  // Registers a translator: AlgebraError surfaces as this ValueError subclass.
  py::register_exception<nilgeo::AlgebraError>(m, "AlgebraError", PyExc_ValueError);

  m.def("catalog_names", [] {
    return std::vector<std::string>{"paper-nj", "paper-njprime", "h3", "quaternionic"};
  });

  m.def(
      "catalog_json",
      [](const std::string& name) { return nilgeo::algebra_to_json(catalog_entry(name)); },
      py::arg("name"), "Catalog algebra as an algebra JSON document");

  m.def(
      "normalize_algebra_json",
      [](const std::string& text) {
        return nilgeo::algebra_to_json(nilgeo::load_algebra_json(text).algebra);
      },
      py::arg("algebra_json"),
      "Parse (validating shapes and skewness) and re-serialize in j-map form");

  m.def(
      "inspect_json",
      [](const std::string& text, const std::string& source) {
        const auto f = nilgeo::load_algebra_json(text);
        return nilgeo::to_json_string(nilgeo::build_diagnostic_report(f.algebra, source));
      },
      py::arg("algebra_json"), py::arg("source") = "<python>",
      "Diagnostic report (properties, homogeneous structure, censuses) as JSON");

  m.def(
      "isospec_json",
      [](const std::string& first, const std::string& second, const std::string& mode,
         long bound) {
        const auto f1 = nilgeo::load_algebra_json(first);
        const auto f2 = nilgeo::load_algebra_json(second);
        nilgeo::KernelOptions opts;
        if (mode != "symbolic" && mode != "sampled")
          throw py::value_error("mode must be 'symbolic' or 'sampled'");
        opts.mode = mode == "sampled" ? nilgeo::KernelMode::Sampled : nilgeo::KernelMode::Symbolic;
        if (bound < 1) throw py::value_error("bound must be positive");
        opts.length_bound = bound;
        return nilgeo::to_json_string(nilgeo::build_isospectral_report(
            data_from_file(f1), data_from_file(f2), "<first>", "<second>", opts));
      },
      py::arg("first_json"), py::arg("second_json"), py::arg("mode") = "symbolic",
      py::arg("bound") = 64,
      "Isospectrality criteria report as JSON; lattices come from the files' "
      "lattice blocks, defaulting to the standard choice");

  m.def(
      "oracle_check_json",
      [](const std::string& text) {
        const auto f = nilgeo::load_algebra_json(text);
        const auto s = nilgeo::run_oracle_checks(f.algebra);
        nlohmann::json j{{"checks_run", s.checks_run},
                         {"failures", s.failures},
                         {"first_failure", s.first_failure}};
        return j.dump();
      },
      py::arg("algebra_json"), "Closed forms vs definition-based oracles, totals as JSON");

  m.def("paper_verify_json", [] {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : nilgeo::run_paper_claims(nilgeo::paper_nj(), nilgeo::paper_njprime()))
      arr.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return arr.dump();
  });
}
