#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "cayley/burnside.hpp"
#include "cayley/cli.hpp"
#include "cayley/error.hpp"
#include "cayley/oracle.hpp"
#include "cayley/reference_tables.hpp"
#include "cayley/verify.hpp"

namespace py = pybind11;
using namespace cayley;

namespace {

// Coefficients can outgrow 64 bits, so go through Python's own int parser.
py::int_ to_py(const BigInt& v) { return py::reinterpret_steal<py::int_>(PyLong_FromString(v.get_str().c_str(), nullptr, 10)); }

py::list coeffs(const IntPoly& p) {
  py::list out;
  for (const auto& c : p.coeffs()) out.append(to_py(c));
  return out;
}

burnside::EngineOptions options(unsigned threads) {
  burnside::EngineOptions o;
  o.threads = threads;
  return o;
}

IntPoly compute(const std::string& group, const std::string& relation, const std::string& method, unsigned threads) {
  cli::ComputeOptions opts;
  opts.engine = options(threads);
  const auto spec = cli::parse_group_spec(group);
  if (spec.group.order() < 2) throw std::invalid_argument("group must have order >= 2");
  py::gil_scoped_release release;
  return cli::compute(spec, cli::parse_relation(relation), cli::parse_method(method), opts);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Degree distributions of Cayley graphs up to (weak) equivalence.";

  py::register_exception<ResourceError>(m, "ResourceError", PyExc_MemoryError);
  py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);

  m.def(
      "psi",
      [](const std::string& group, const std::string& relation, const std::string& method, unsigned threads) {
        return coeffs(compute(group, relation, method, threads));
      },
      py::arg("group"), py::arg("relation") = "weak", py::arg("method") = "burnside", py::arg("threads") = 1,
      "Coefficient list of Psi; entry k counts classes of degree k.");

  m.def(
      "psi_text",
      [](const std::string& group, const std::string& relation, const std::string& method) {
        return compute(group, relation, method, 1).to_string();
      },
      py::arg("group"), py::arg("relation") = "weak", py::arg("method") = "burnside");

  m.def(
      "count",
      [](const std::string& group, const std::string& relation, const std::string& method, unsigned threads) {
        return to_py(compute(group, relation, method, threads).eval(1));
      },
      py::arg("group"), py::arg("relation") = "weak", py::arg("method") = "burnside", py::arg("threads") = 1);

  m.def(
      "orbits",
      [](const std::string& group, const std::string& relation) {
        const GroupTable g = cli::parse_group_spec(group).group;
        const auto autos =
            cli::parse_relation(relation) == cli::Relation::kWeak ? automorphisms(g) : inner_automorphisms(g);
        const auto census = oracle::orbit_census(g, autos);
        py::list out;
        for (const auto& o : census.orbits) out.append(py::make_tuple(o.canonical_rep.bits().members(), o.orbit_size, o.degree));
        return out;
      },
      py::arg("group"), py::arg("relation") = "weak",
      "Orbits as (canonical set, orbit size, degree), sorted by degree.");

  m.def(
      "reference_table",
      [](const std::string& relation) {
        const auto& rows = cli::parse_relation(relation) == cli::Relation::kWeak ? reference::weak_table()
                                                                                  : reference::equivalence_table();
        py::list out;
        for (const auto& r : rows) out.append(py::make_tuple(r.n, r.polynomial, to_py(r.count), r.notes));
        return out;
      },
      py::arg("relation") = "weak");

  m.def(
      "verify",
      [](const std::string& suite, std::uint64_t max_n, unsigned threads) {
        verify::Report report;
        {
          py::gil_scoped_release release;
          if (suite == "tables")
            report = verify::tables(max_n, std::nullopt, options(threads));
          else if (suite == "crossmethod")
            report = verify::crossmethod(max_n, options(threads));
          else if (suite == "closedforms")
            report = verify::closedforms(max_n, options(threads));
          else
            throw std::invalid_argument("unknown suite '" + suite + "'");
        }
        py::list items;
        for (const auto& i : report.items) items.append(py::make_tuple(verify::label(i.status), i.name, i.detail));
        return py::make_tuple(report.ok(), items);
      },
      py::arg("suite"), py::arg("max_n") = 20, py::arg("threads") = 1);
}
