#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "proplab/io.hpp"
#include "proplab/lab.hpp"

namespace py = pybind11;
using namespace proplab;
using nlohmann::json;

namespace {

py::object to_py(const json& j) {
  switch (j.type()) {
    case json::value_t::null: return py::none();
    case json::value_t::boolean: return py::bool_(j.get<bool>());
    case json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
    case json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
    case json::value_t::number_float: return py::float_(j.get<double>());
    case json::value_t::string: return py::str(j.get<std::string>());
    case json::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(to_py(item));
      return out;
    }
    case json::value_t::object: {
      py::dict out;
      for (const auto& [key, value] : j.items()) out[py::str(key)] = to_py(value);
      return out;
    }
    default: return py::none();
  }
}

py::dict sensitivity_dict(const SensitivityResult& r) {
  py::dict out;
  out["value"] = r.value;
  out["witness"] = r.witness.bits;
  out["coordinates"] = r.sensitive_coordinates;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "sensitivity toolkit for boolean functions and graph properties";

  py::class_<PropertyFunction>(m, "PropertyFunction")
      .def_property_readonly("n", &PropertyFunction::vertex_count)
      .def_property_readonly("arity", &PropertyFunction::arity)
      .def_property_readonly("has_table", &PropertyFunction::has_table)
      .def("evaluate", [](const PropertyFunction& f, std::uint64_t mask) {
        return f.evaluate(Point(f.arity(), mask));
      })
      .def("__repr__", [](const PropertyFunction& f) {
        return "<PropertyFunction n=" + std::to_string(f.vertex_count()) +
               " arity=" + std::to_string(f.arity()) + ">";
      });

  m.def("builtin_names", [] {
    std::vector<std::string> names;
    for (const BuiltinProperty& b : builtin_registry()) names.push_back(b.name);
    return names;
  });
  m.def("builtin", &builtin_property, py::arg("name"), py::arg("n"));
  m.def("from_class_set", [](int n, const std::vector<std::uint64_t>& masks) {
    std::vector<CanonicalSignature> sigs;
    sigs.reserve(masks.size());
    for (const std::uint64_t mask : masks) sigs.push_back(CanonicalSignature{n, mask});
    return property_from_class_set(n, sigs);
  }, py::arg("n"), py::arg("class_masks"));
  m.def("read_property_file", &read_property_file, py::arg("path"));
  m.def("write_truth_table", &write_truth_table_file, py::arg("path"), py::arg("f"));

  m.def("complement", &complement);
  m.def("is_nontrivial", &is_nontrivial);
  m.def("is_graph_property", &is_graph_property);
  m.def("is_monotone", &is_monotone);

  m.def("sensitivity_at", [](const PropertyFunction& f, std::uint64_t mask) {
    return sensitivity_dict(sensitivity_at(f, Point(f.arity(), mask)));
  }, py::arg("f"), py::arg("point"));
  m.def("max_sensitivity", [](const PropertyFunction& f, int jobs) {
    return sensitivity_dict(max_sensitivity(f, jobs));
  }, py::arg("f"), py::arg("jobs") = 0);
  m.def("block_sensitivity_at", [](const PropertyFunction& f, std::uint64_t mask) {
    return block_sensitivity_at(f, Point(f.arity(), mask));
  }, py::arg("f"), py::arg("point"));
  m.def("max_block_sensitivity", &max_block_sensitivity, py::arg("f"), py::arg("jobs") = 0);

  m.def("edge_index", [](int n, int i, int j) { return edge_index(n, i, j); },
        py::arg("n"), py::arg("i"), py::arg("j"));
  m.def("edge_unindex", [](int n, std::uint32_t c) {
    const VertexPair p = edge_unindex(n, c);
    return py::make_tuple(p.a, p.b);
  }, py::arg("n"), py::arg("coordinate"));
  m.def("canonical_form", [](int n, std::uint64_t mask) {
    return canonical_form(LabeledGraph(n, mask)).bits;
  }, py::arg("n"), py::arg("edges"));
  m.def("are_isomorphic", [](int n, std::uint64_t a, std::uint64_t b) {
    return are_isomorphic(LabeledGraph(n, a), LabeledGraph(n, b));
  }, py::arg("n"), py::arg("edges_a"), py::arg("edges_b"));
  m.def("iso_classes", [](int n) {
    std::vector<std::uint64_t> out;
    for (const IsoClass& c : enumerate_iso_classes(n)) out.push_back(c.signature.bits);
    return out;
  }, py::arg("n"));

  m.def("isolated_vertices", [](int n, std::uint64_t mask) {
    return isolated_vertices(LabeledGraph(n, mask));
  }, py::arg("n"), py::arg("edges"));
  m.def("positive_min_degree", [](int n, std::uint64_t mask) -> py::object {
    const CountOrInf d = positive_min_degree(LabeledGraph(n, mask));
    if (d.is_infinite()) return py::none();
    return py::int_(d.value());
  }, py::arg("n"), py::arg("edges"));
  m.def("positive_min_tree_size", [](int n, std::uint64_t mask) -> py::object {
    const CountOrInf c = positive_min_tree_size(LabeledGraph(n, mask));
    if (c.is_infinite()) return py::none();
    return py::int_(c.value());
  }, py::arg("n"), py::arg("edges"));
  m.def("degree_truncation", [](int n, std::uint64_t mask, int k) {
    return degree_truncation(LabeledGraph(n, mask), k).edges;
  }, py::arg("n"), py::arg("edges"), py::arg("k"));
  m.def("tree_truncation", [](int n, std::uint64_t mask, int k) {
    return tree_truncation(LabeledGraph(n, mask), k).edges;
  }, py::arg("n"), py::arg("edges"), py::arg("k"));
  m.def("minimal_graphs", [](const PropertyFunction& f) {
    return to_py(minimal_graphs_to_json(minimal_graphs(f)));
  }, py::arg("f"));

  m.def("extract_witness", [](const PropertyFunction& f) {
    return to_py(extraction_to_json(extract_witness(f)));
  }, py::arg("f"));
  m.def("check_structural_inequalities", [](const PropertyFunction& f, std::uint64_t mask) {
    return to_py(inequalities_to_json(
        check_structural_inequalities(f, LabeledGraph(f.vertex_count(), mask))));
  }, py::arg("f"), py::arg("edges"));

  m.def("verify_exhaustive", [](int n, int jobs) {
    return to_py(verification_to_json(verify_exhaustive(n, jobs)));
  }, py::arg("n"), py::arg("jobs") = 0);
  m.def("verify_sampled", [](int n, std::uint64_t seed, std::uint64_t count, int jobs) {
    return to_py(verification_to_json(verify_sampled(n, seed, count, jobs)));
  }, py::arg("n"), py::arg("seed"), py::arg("count"), py::arg("jobs") = 0);
  m.def("monotone_check", [](int n, int jobs) {
    return to_py(monotone_check_to_json(run_monotone_check(n, jobs)));
  }, py::arg("n"), py::arg("jobs") = 0);
  m.def("analyze", [](const PropertyFunction& f, int jobs) {
    return to_py(analysis_to_json(analyze_property(f, jobs)));
  }, py::arg("f"), py::arg("jobs") = 0);
}
