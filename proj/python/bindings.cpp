#include <sstream>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "simplexharm/cli.hpp"
#include "simplexharm/errors.hpp"
#include "simplexharm/modes.hpp"
#include "simplexharm/reduction.hpp"
#include "simplexharm/report.hpp"
#include "simplexharm/su2wigner.hpp"
#include "simplexharm/verify.hpp"

namespace py = pybind11;
namespace sh = simplexharm;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Harmonic analysis on simplicial spherical manifolds";
  m.attr("__version__") = std::string(sh::report::kVersion);

  py::register_exception<sh::ArgumentError>(m, "ArgumentError", PyExc_ValueError);
  py::register_exception<sh::ConsistencyError>(m, "ConsistencyError", PyExc_RuntimeError);

  m.def("character_table_json", [](int n) { return sh::report::dump(sh::report::character_table_json(sh::perm::character_table(n))); });
  m.def("trivial_multiplicity", [](const std::string& f) { return sh::perm::trivial_multiplicity(sh::perm::Partition::parse(f)); });
  m.def("multiplicity_o4_s5", [](int two_j, const std::string& f) {
    return sh::reduction::multiplicity_o4_s5(two_j, sh::perm::Partition::parse(f));
  });
  m.def("periodic_count_o4", &sh::reduction::periodic_count_o4);
  m.def("periodic_count_o3", &sh::reduction::periodic_count_o3);
  m.def("reduce_json", [](const std::string& chain, int max) {
    if (chain == "o2s3c3") return sh::report::dump(sh::report::multiplicity_table_json(sh::reduction::o2_s3_table(max)));
    if (chain == "o3s4c4") return sh::report::dump(sh::report::multiplicity_table_json(sh::reduction::o3_s4_table(max)));
    if (chain == "o4s5c5") return sh::report::dump(sh::report::multiplicity_table_json(sh::reduction::o4_s5_table(max)));
    throw sh::ArgumentError("unknown chain " + chain);
  });
  m.def("wigner_d", [](int two_j, std::complex<double> z1, std::complex<double> z2) {
    return sh::su2::wigner_d(two_j, sh::su2::SU2Element(z1, z2));
  });
  m.def("periodic_basis", [](int two_j) { return sh::modes::periodic_basis(two_j).coefficients; });
  m.def("verify_invariance", [](int two_j, int points, std::uint64_t seed) {
    return sh::modes::verify_invariance(sh::modes::periodic_basis(two_j), points, seed);
  });
  m.def("verify_all", []() {
    py::list out;
    for (const auto& c : sh::verify::verify_all(sh::report::golden_tables()))
      out.append(py::make_tuple(c.name, c.passed, c.residual));
    return out;
  });
  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = sh::cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
