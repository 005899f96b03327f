#include "interflow/affine/polyhedron.hpp"
#include "interflow/cli/commands.hpp"
#include "interflow/core/errors.hpp"
#include "interflow/lattice/interval.hpp"
#include "interflow/lattice/lattice_spec.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace interflow;

namespace {

py::tuple run(const std::vector<std::string> &args) {
  std::vector<std::string> all{"interflow"};
  all.insert(all.end(), args.begin(), args.end());
  std::vector<const char *> argv;
  for (auto &a : all)
    argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return py::make_tuple(code, out.str(), err.str());
}

py::dict repro(const std::string &id) {
  auto r = cli::repro(id);
  py::list checks;
  for (auto &c : r.checks)
    checks.append(py::dict(py::arg("what") = c.what, py::arg("expected") = c.expected,
                           py::arg("got") = c.got, py::arg("ok") = c.ok));
  return py::dict(py::arg("id") = r.id, py::arg("pass") = r.pass(), py::arg("checks") = checks,
                  py::arg("notes") = r.notes);
}

rvec to_rvec(const std::vector<std::string> &xs) {
  rvec v;
  for (auto &x : xs)
    v.push_back(parse_rational(x));
  return v;
}

bool hull_contains(const std::vector<std::vector<std::string>> &pts,
                   const std::vector<std::string> &q) {
  if (pts.empty())
    return false;
  std::vector<rvec> gens;
  for (auto &p : pts)
    gens.push_back(to_rvec(p));
  return polyhedron::from_generators(q.size(), gens).contains(to_rvec(q));
}

std::string hull(const std::vector<std::vector<std::string>> &pts, std::size_t dim) {
  std::vector<rvec> gens;
  for (auto &p : pts)
    gens.push_back(to_rvec(p));
  return gens.empty() ? polyhedron::empty(dim).str() : polyhedron::from_generators(dim, gens).str();
}

py::dict lattice_info(const std::string &text) {
  auto spec = parse_lattice_spec(text);
  const auto &l = *spec.lattice;
  std::vector<std::string> names;
  for (element e : l.elements())
    names.push_back(l.name(e));
  std::vector<std::string> fns;
  for (auto &[n, f] : spec.fns)
    fns.push_back(n);
  return py::dict(py::arg("elements") = names, py::arg("bottom") = l.name(l.bottom()),
                  py::arg("top") = l.name(l.top()), py::arg("functions") = fns);
}

} // namespace

PYBIND11_MODULE(_interflow, m) {
  py::register_exception<error>(m, "Error", PyExc_ValueError);

  m.def("run", &run, py::arg("args"), "Run the command line tool; returns (code, stdout, stderr).");
  m.def("repro_ids", &cli::repro_ids);
  m.def("repro", &repro, py::arg("id"));
  m.def(
      "interval_widen",
      [](const std::string &a, const std::string &b) {
        return interval_widen(parse_interval(a), parse_interval(b)).str();
      },
      py::arg("a"), py::arg("b"));
  m.def(
      "interval_join",
      [](const std::string &a, const std::string &b) {
        return interval_join(parse_interval(a), parse_interval(b)).str();
      },
      py::arg("a"), py::arg("b"));
  m.def("hull_contains", &hull_contains, py::arg("points"), py::arg("query"));
  m.def("hull", &hull, py::arg("points"), py::arg("dim"));
  m.def("lattice_info", &lattice_info, py::arg("spec"));
}
