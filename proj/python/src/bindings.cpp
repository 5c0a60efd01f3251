#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "consec/catalog.hpp"
#include "consec/connectivity.hpp"
#include "consec/cycles.hpp"
#include "consec/error.hpp"
#include "consec/paths.hpp"
#include "consec/report.hpp"
#include "consec/theorems.hpp"

namespace py = pybind11;
using namespace consec;

namespace {

// Results cross the boundary as plain dicts and lists, through the same JSON
// shape the CLI writes.
py::object to_python(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

SearchLimits limits_from(std::uint64_t budget) {
  SearchLimits l;
  l.node_budget = budget;
  return l;
}

CheckOptions check_options(int size_limit, bool force_large, std::uint64_t budget) {
  CheckOptions o;
  o.spectrum.size_limit = size_limit;
  o.spectrum.force_large = force_large;
  o.spectrum.limits = limits_from(budget);
  o.limits = limits_from(budget);
  return o;
}

TheoremId theorem_from(const std::string& name) {
  const auto id = parse_theorem(name);
  if (!id) throw Error(ErrorCode::BadParams, "unknown theorem '" + name + "'");
  return *id;
}

Json family_json(const PathFamily& f) {
  const char* kinds[] = {"consecutive", "step1", "step2", "unclassified"};
  return Json{{"lengths", f.lengths}, {"paths", f.paths}, {"kind", kinds[static_cast<int>(f.kind)]}};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "cycle spectra, connectivity, path families and theorem checks on small graphs";
  py::exception<Error>(m, "ConsecError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object type = py::module_::import("consec_cycles._core").attr("ConsecError");
      py::object exc = type(e.what());
      exc.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(type.ptr(), exc.ptr());
    }
  });

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<Edge>& edges) { return Graph::from_edges(n, edges); }),
           py::arg("n"), py::arg("edges") = std::vector<Edge>{})
      .def_static("from_graph6", [](const std::string& s) { return decode_graph6(s); })
      .def("graph6", [](const Graph& g) { return encode_graph6(g); })
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def("edges", &Graph::edges)
      .def("neighbors", [](const Graph& g, Vertex v) {
        if (v < 0 || v >= g.order()) throw Error(ErrorCode::OutOfRange, "vertex out of range");
        return std::vector<Vertex>(g.neighbors(v).begin(), g.neighbors(v).end());
      })
      .def("degree", [](const Graph& g, Vertex v) {
        if (v < 0 || v >= g.order()) throw Error(ErrorCode::OutOfRange, "vertex out of range");
        return g.degree(v);
      })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) { return "Graph('" + encode_graph6(g) + "')"; });

  m.def("complete_graph", &complete_graph, py::arg("n"));
  m.def("complete_minus_matching", &complete_minus_matching, py::arg("n"), py::arg("m"));
  m.def("complete_bipartite", &complete_bipartite, py::arg("a"), py::arg("b"));
  m.def("cycle_graph", &cycle_graph, py::arg("n"));
  m.def("petersen_graph", &petersen_graph);
  m.def("unlabeled_graphs", [](int n, int min_degree, bool connected) {
    return unlabeled_graphs(n, {.min_degree = min_degree, .connected = connected});
  }, py::arg("n"), py::arg("min_degree") = 0, py::arg("connected") = false);

  m.def("cycle_spectrum", [](const Graph& g, int size_limit, bool force_large, std::uint64_t budget) {
    SpectrumOptions o;
    o.size_limit = size_limit;
    o.force_large = force_large;
    o.limits = limits_from(budget);
    return to_python(to_json(cycle_spectrum(g, o)));
  }, py::arg("g"), py::arg("size_limit") = kDefaultSpectrumLimit, py::arg("force_large") = false,
        py::arg("budget") = kDefaultNodeBudget);

  m.def("is_bipartite", &is_bipartite);
  m.def("vertex_connectivity", [](const Graph& g) { return vertex_connectivity(g).kappa; });
  m.def("cut_vertices", &cut_vertices);
  m.def("block_cut_tree", [](const Graph& g) { return to_python(to_json(block_cut_tree(g))); });
  m.def("is_nonseparating", [](const Graph& g, const std::vector<Vertex>& c) { return is_nonseparating(g, c); });
  m.def("two_cut_witness", &two_cut_witness);
  m.def("shortest_nonsep_induced_odd_cycle", [](const Graph& g) -> std::optional<Cycle> {
    const auto c = shortest_nonsep_induced_odd_cycle(g);
    if (!c) return std::nullopt;
    return c->cycle;
  });

  m.def("xy_path_lengths", [](const Graph& g, Vertex x, Vertex y, std::uint64_t budget) {
    return xy_path_lengths(g, x, y, limits_from(budget)).lengths;
  }, py::arg("g"), py::arg("x"), py::arg("y"), py::arg("budget") = kDefaultNodeBudget);
  m.def("max_admissible_family", [](const Graph& g, Vertex x, Vertex y, std::uint64_t budget) {
    return to_python(family_json(max_admissible_family(g, x, y, true, limits_from(budget))));
  }, py::arg("g"), py::arg("x"), py::arg("y"), py::arg("budget") = kDefaultNodeBudget);
  m.def("odd_even_paths", [](const Graph& g, Vertex x, Vertex y) {
    const ParityPair p = odd_even_paths(g, x, y);
    return std::make_pair(p.odd_path, p.even_path);
  });
  m.def("merge_guarantee", &merge_guarantee, py::arg("s"), py::arg("t"), py::arg("step"));

  m.def("theorems", [] {
    std::vector<std::string> names;
    for (TheoremId id : all_theorems()) names.emplace_back(theorem_name(id));
    return names;
  });
  m.def("check", [](const Graph& g, const std::string& theorem, int k, int size_limit, std::uint64_t budget) {
    return to_python(to_json(check(g, theorem_from(theorem), k, check_options(size_limit, false, budget))));
  }, py::arg("g"), py::arg("theorem"), py::arg("k"), py::arg("size_limit") = kDefaultSpectrumLimit,
        py::arg("budget") = kDefaultNodeBudget);
  m.def("extract", [](const Graph& g, int k, const std::string& method, std::uint64_t budget) {
    const CheckOptions o = check_options(kHardSpectrumLimit, true, budget);
    Extraction ex;
    if (method == "case1") ex = extract_case1(g, k, o);
    else if (method == "3conn") ex = extract_3conn(g, k, o);
    else throw Error(ErrorCode::BadParams, "method must be 'case1' or '3conn'");
    return to_python(Json{{"lengths", ex.lengths}, {"cycles", ex.cycles}, {"trace", to_json(ex.trace)}});
  }, py::arg("g"), py::arg("k"), py::arg("method"), py::arg("budget") = kDefaultNodeBudget);

  m.def("scan", [](const std::vector<std::string>& lines, const std::vector<std::string>& theorems, int k_min,
                   int k_max, int workers) {
    ScanOptions opt;
    opt.theorems.clear();
    for (const auto& t : theorems) opt.theorems.push_back(theorem_from(t));
    opt.k_min = k_min;
    opt.k_max = k_max;
    opt.workers = workers;
    std::size_t next = 0;
    Json entries = Json::array();
    ScanSummary summary;
    {
      py::gil_scoped_release release;
      summary = scan_catalog(
          [&]() -> std::optional<std::string> {
            if (next >= lines.size()) return std::nullopt;
            return lines[next++];
          },
          opt, [&](const ScanEntry& e) { entries.push_back(to_json(e)); });
    }
    return to_python(Json{{"entries", entries}, {"summary", to_json(summary)}});
  }, py::arg("lines"), py::arg("theorems") = std::vector<std::string>{"main"}, py::arg("k_min") = 1,
        py::arg("k_max") = 1, py::arg("workers") = 1);
}
