#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "trisect/cli.hpp"
#include "trisect/json_io.hpp"
#include "trisect/signword.hpp"

namespace py = pybind11;
using namespace trisect;

namespace {

// Python ints cross as decimal text so nothing is truncated.
Integer to_integer(const py::int_& x) { return parse_integer(py::str(x).cast<std::string>()); }

py::int_ to_py(const Integer& x) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(x.get_str().c_str(), nullptr, 10));
}

IntMatrix to_matrix(const std::vector<std::vector<py::int_>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw py::value_error("ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = to_integer(rows[r][c]);
  }
  return m;
}

py::list to_py(const std::vector<Integer>& xs) {
  py::list out;
  for (const Integer& x : xs) out.append(to_py(x));
  return out;
}

TrisectionDiagram diagram_from(const std::string& text) {
  return json::diagram_from_json(nlohmann::json::parse(text));
}

}  // namespace

PYBIND11_MODULE(_trisect, m) {
  m.doc() = "Trisection diagrams, Smith normal form and Kirby-Thompson bounds";

  py::register_exception<Error>(m, "TrisectError", PyExc_ValueError);

  m.def("snf", [](const std::vector<std::vector<py::int_>>& rows) {
    return to_py(snf(to_matrix(rows)).invariant_factors);
  }, "Invariant factors of an integer matrix.");

  m.def("cokernel", [](const std::vector<std::vector<py::int_>>& rows) {
    const Cokernel c = cokernel(to_matrix(rows));
    return py::make_tuple(c.free_rank, to_py(c.torsion));
  }, "(free_rank, torsion) of the cokernel of Z^cols -> Z^rows.");

  m.def("minors_gcd", [](const std::vector<std::vector<py::int_>>& rows, std::size_t k) {
    return to_py(minors_gcd(to_matrix(rows), k));
  });

  m.def("fib_gstep", [](std::size_t g, std::int64_t n) { return to_py(fib_gstep(g, n)); });

  m.def("standard_diagram", [](const std::string& name) {
    return json::to_json(standard_diagram(name)).dump();
  }, "Stock diagram as JSON text.");

  m.def("spun_lens", [](const py::int_& p, const py::int_& q) {
    return json::to_json(spun_lens(to_integer(p), to_integer(q))).dump();
  });

  m.def("validate", [](const std::string& diagram) {
    return json::to_json(validate(diagram_from(diagram))).dump();
  }, "Validation report for a diagram given as JSON text.");

  m.def("homology", [](const std::string& diagram) {
    const Cokernel c = surface_homology(diagram_from(diagram));
    return py::make_tuple(c.free_rank, to_py(c.torsion));
  });

  m.def("theorem3_bound", [](const py::int_& p) {
    return json::to_json(theorem3_bound(to_integer(p))).dump();
  });

  m.def("entry_bound_harness", [](std::size_t g, std::size_t steps, std::size_t trials, std::uint64_t seed) {
    return json::to_json(run_entry_bound_harness(g, steps, trials, seed)).dump();
  }, py::arg("max_genus"), py::arg("max_steps"), py::arg("trials"), py::arg("seed"));

  m.def("subarc_profile", [](const SignWord& w) {
    const SubarcProfile p = subarc_profile(w);
    return py::make_tuple(p.positive, p.negative);
  });
  m.def("wave_reduce", &wave_reduce);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, "Run the trisect command line; returns (exit code, stdout, stderr).");
}
