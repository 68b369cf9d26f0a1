#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "epg/error.hpp"
#include "epg/formulas.hpp"
#include "epg/group_graphs.hpp"
#include "epg/group_spec.hpp"
#include "epg/invariants.hpp"
#include "epg/report.hpp"
#include "epg/verify.hpp"

namespace py = pybind11;
using namespace epg;

namespace {

py::dict report_dict(const InvariantReport& r) {
  py::dict d;
  d["group"] = r.group;
  d["source"] = to_string(r.source);
  d["vertices"] = r.vertex_count;
  for (const auto& [name, field] : kInvariantFields) d[py::str(std::string(name))] = r.*field;
  d["perfect_verdict"] = r.perfect_verdict ? py::cast(to_string(*r.perfect_verdict)) : py::none();
  d["skipped"] = r.skipped;
  return d;
}

py::list rows_list(const std::vector<VerificationRow>& rows) {
  py::list out;
  for (const auto& r : rows) {
    py::dict d;
    d["group"] = r.group;
    d["invariant"] = r.invariant;
    d["formula"] = r.formula;
    d["oracle"] = r.oracle;
    d["verdict"] = to_string(r.verdict);
    out.append(d);
  }
  return out;
}

py::dict cycle_dict(const CycleSearchResult& r) {
  static const char* names[] = {"found", "none", "budget-exceeded"};
  py::dict d;
  d["status"] = names[static_cast<int>(r.status)];
  d["cycle"] = r.cycle;
  d["nodes"] = r.nodes;
  return d;
}

}  // namespace

PYBIND11_MODULE(_epg, m) {
  m.doc() = "Enhanced power graphs of finite groups";

  // Kept alive by the module for the life of the interpreter.
  static py::handle error_type = py::exception<Error>(m, "Error").release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error_type)(std::string(to_string(e.kind())) + ": " + e.what());
      exc.attr("kind") = std::string(to_string(e.kind()));
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });

  py::class_<FiniteGroup>(m, "Group")
      .def(py::init([](const std::string& spec) { return build_group(parse_group_spec(spec)); }),
           py::arg("spec"))
      .def_static("from_table",
                  [](std::size_t order, std::vector<Element> table, std::string label) {
                    return FiniteGroup::from_table(order, std::move(table), std::move(label));
                  },
                  py::arg("order"), py::arg("table"), py::arg("label") = "table")
      .def_property_readonly("order", &FiniteGroup::order)
      .def_property_readonly("label", &FiniteGroup::label)
      .def_property_readonly("family", [](const FiniteGroup& g) { return to_string(g.family()); })
      .def_property_readonly("element_names", &FiniteGroup::element_names)
      .def_property_readonly("element_orders",
                             [](const FiniteGroup& g) {
                               auto o = g.element_orders();
                               return std::vector<std::size_t>(o.begin(), o.end());
                             })
      .def_property_readonly("table",
                             [](const FiniteGroup& g) {
                               auto t = g.table();
                               return std::vector<Element>(t.begin(), t.end());
                             })
      .def("mul", &FiniteGroup::mul)
      .def("inverse", &FiniteGroup::inverse)
      .def("is_abelian", &FiniteGroup::is_abelian)
      .def("maximal_cyclic_subgroups",
           [](const FiniteGroup& g) {
             std::vector<std::vector<std::size_t>> out;
             const auto subs = cyclic_subgroups(g);
             for (const auto* c : subs.maximal()) out.push_back(c->members.to_vector());
             return out;
           })
      .def("involution_count", [](const FiniteGroup& g) { return involution_count(g); })
      .def("exponent", [](const FiniteGroup& g) { return exponent(g); })
      .def("__len__", &FiniteGroup::order)
      .def("__repr__", [](const FiniteGroup& g) { return "<Group " + g.label() + ">"; });

  py::class_<SimpleGraph>(m, "Graph")
      .def(py::init([](std::size_t n, const std::vector<Edge>& edges) {
             return SimpleGraph::from_edges(n, edges);
           }),
           py::arg("n"), py::arg("edges") = std::vector<Edge>{})
      .def_property_readonly("vertex_count", &SimpleGraph::vertex_count)
      .def_property_readonly("edge_count", &SimpleGraph::edge_count)
      .def("edges", &SimpleGraph::edges)
      .def("has_edge", &SimpleGraph::has_edge)
      .def("neighbors", [](const SimpleGraph& g, Vertex v) {
        if (v >= g.vertex_count()) fail(ErrorKind::kOutOfRange, "vertex out of range");
        return g.neighbors(v).to_vector();
      })
      .def("__eq__", [](const SimpleGraph& a, const SimpleGraph& b) { return a == b; })
      .def("__repr__", [](const SimpleGraph& g) {
        return "<Graph n=" + std::to_string(g.vertex_count()) + " m=" + std::to_string(g.edge_count()) + ">";
      });

  m.def("parse_spec", [](const std::string& s) { return to_string(parse_group_spec(s)); },
        "Canonical form of a group spec string.");

  // The returned graph does not reference the group.
  m.def("enhanced_power_graph", [](const FiniteGroup& g) { return enhanced_power_graph(g).graph; });
  m.def("power_graph", [](const FiniteGroup& g) { return power_graph(g).graph; });
  m.def("graphs_coincide", &graphs_coincide);

  m.def("min_degree", &min_degree);
  m.def("complement", &complement);
  m.def("diameter", [](const SimpleGraph& g) -> py::object {
    const auto d = diameter(g);
    if (d.is_infinite()) return py::float_(INFINITY);
    return py::int_(d.value);
  });
  m.def("edge_connectivity", &edge_connectivity);
  m.def("max_clique", &max_clique, py::arg("graph"), py::arg("node_budget") = kDefaultNodeBudget);
  m.def("independence_number", &independence_number, py::arg("graph"),
        py::arg("node_budget") = kDefaultNodeBudget);
  m.def("maximum_matching", &maximum_matching);
  m.def("chromatic_number", &chromatic_number, py::arg("graph"),
        py::arg("vertex_bound") = kDefaultChromaticBound);
  m.def("strong_metric_dimension", &strong_metric_dimension, py::arg("graph"),
        py::arg("node_budget") = kDefaultNodeBudget);
  m.def("strong_resolving_oracle", &strong_resolving_oracle);
  m.def("find_odd_hole",
        [](const SimpleGraph& g, std::size_t max_len, std::uint64_t budget) {
          return cycle_dict(find_odd_hole(g, max_len, budget));
        },
        py::arg("graph"), py::arg("max_len") = kDefaultHoleMaxLen,
        py::arg("node_budget") = kDefaultNodeBudget);
  m.def("find_odd_antihole",
        [](const SimpleGraph& g, std::size_t max_len, std::uint64_t budget) {
          return cycle_dict(find_odd_antihole(g, max_len, budget));
        },
        py::arg("graph"), py::arg("max_len") = kDefaultHoleMaxLen,
        py::arg("node_budget") = kDefaultNodeBudget);

  m.def("oracle_report",
        [](const FiniteGroup& g, std::uint64_t budget, std::size_t max_len, bool check_perfect) {
          OracleOptions o;
          o.node_budget = budget;
          o.hole_max_len = max_len;
          o.check_perfect = check_perfect;
          return report_dict(oracle_report(enhanced_power_graph(g).graph, g.label(), o));
        },
        py::arg("group"), py::arg("node_budget") = kDefaultNodeBudget,
        py::arg("max_len") = kDefaultHoleMaxLen, py::arg("check_perfect") = true);
  m.def("formula_report", [](const FiniteGroup& g) {
    auto r = formula_report(g);
    r.group = g.label();
    return report_dict(r);
  });

  m.def("verify_group",
        [](const FiniteGroup& g, std::vector<std::string> checks) {
          VerifyOptions o;
          o.checks = std::move(checks);
          return rows_list(verify_group(g, g.label(), o));
        },
        py::arg("group"), py::arg("checks") = std::vector<std::string>{});
  m.def("verify",
        [](const std::string& family, std::uint64_t first, std::uint64_t last,
           std::vector<std::string> checks, std::optional<std::uint64_t> prime) {
          SweepConfig c;
          c.family = parse_family(family);
          c.first = first;
          c.last = last;
          c.prime = prime;
          c.options.checks = std::move(checks);
          std::vector<VerificationRow> rows;
          {
            py::gil_scoped_release release;
            rows = run_sweep(c);
          }
          return rows_list(rows);
        },
        py::arg("family"), py::arg("first"), py::arg("last"),
        py::arg("checks") = std::vector<std::string>{}, py::arg("prime") = py::none());
}
