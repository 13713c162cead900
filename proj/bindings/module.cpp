// Python module: thin wrappers over the group core plus the JSON reporting
// entry points. Reports cross the boundary as JSON strings; the package
// __init__ turns them into dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "ap2/catalog.hpp"
#include "ap2/complex.hpp"
#include "ap2/errors.hpp"
#include "ap2/families.hpp"
#include "ap2/group.hpp"
#include "ap2/homology.hpp"
#include "ap2/poset.hpp"
#include "ap2/verifier.hpp"

namespace py = pybind11;
using nlohmann::ordered_json;

namespace {

// shared_ptr<const GroupTable> is not a usable pybind11 holder, so the
// python-facing Group owns the pointer inside a plain struct.
struct PyGroup {
  ap2::GroupPtr g;
};

ap2::Limits limits_of(long long max_order) {
  ap2::Limits lim;
  lim.max_order = max_order;
  return lim;
}

PyGroup from_table(const std::string& label,
                   const std::vector<std::vector<long long>>& rows) {
  const long long n = static_cast<long long>(rows.size());
  std::vector<ap2::elem_t> flat;
  flat.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : rows) {
    if (static_cast<long long>(row.size()) != n)
      throw ap2::InputError("multiplication table must be square");
    for (long long v : row) flat.push_back(static_cast<ap2::elem_t>(v));
  }
  return PyGroup{ap2::GroupTable::from_table(label, std::move(flat), n)};
}

std::string theorem_json(const PyGroup& g, long long p, long long max_order) {
  ap2::TheoremVerdict v =
      ap2::check_theorem_same_dimension(g.g, p, limits_of(max_order));
  ordered_json doc;
  doc["label"] = v.label;
  doc["prime"] = v.p;
  doc["hypotheses"] = {{"p_odd", v.hypotheses.p_odd},
                       {"derived_rank2", v.hypotheses.derived_rank2},
                       {"center_cyclic", v.hypotheses.center_cyclic}};
  doc["outcome"] = ap2::format_theorem_outcome(v.outcome);
  doc["contractible_via"] = ap2::format_contract_kind(v.contract_kind);
  if (v.homology) doc["signature"] = ap2::format_signature(v.homology->signature);
  doc["poset_members"] = v.stats.poset_members;
  if (!v.violation.empty()) doc["violation"] = v.violation;
  return doc.dump(2);
}

std::string analyze_json(const std::string& name, const PyGroup& g, long long p,
                         int min_rank, bool with_timing, long long max_order) {
  ap2::ReportOptions opts;
  opts.min_rank = min_rank;
  opts.with_timing = with_timing;
  opts.limits = limits_of(max_order);
  return ap2::analysis_report(name, g.g, p, opts).dump(2);
}

std::string verify_json(const std::string& catalog_path, const std::string& mode,
                        std::optional<long long> prime, int jobs,
                        bool with_timing, long long max_order) {
  ap2::Catalog cat = ap2::load_catalog(catalog_path);
  ap2::ReportOptions opts;
  opts.jobs = jobs;
  opts.with_timing = with_timing;
  opts.prime_filter = prime;
  opts.limits = limits_of(max_order);
  return ap2::verify_report(cat, ap2::parse_mode(mode), opts).report.dump(2);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "elementary abelian subgroup posets and exact homology for finite "
            "p-groups";

  py::register_exception<ap2::InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<ap2::CapError>(m, "CapError", PyExc_RuntimeError);

  py::class_<PyGroup>(m, "Group")
      .def_property_readonly("order", [](const PyGroup& s) { return s.g->order(); })
      .def_property_readonly("label",
                             [](const PyGroup& s) { return s.g->label(); })
      .def_property_readonly("identity",
                             [](const PyGroup& s) { return s.g->identity(); })
      .def_property_readonly("exponent",
                             [](const PyGroup& s) { return s.g->exponent(); })
      .def_property_readonly("abelian",
                             [](const PyGroup& s) { return s.g->is_abelian(); })
      .def("mul", [](const PyGroup& s, ap2::elem_t a,
                     ap2::elem_t b) { return s.g->mul(a, b); })
      .def("inverse",
           [](const PyGroup& s, ap2::elem_t a) { return s.g->inverse(a); })
      .def("power", [](const PyGroup& s, ap2::elem_t a,
                       long long k) { return s.g->power(a, k); })
      .def("element_order",
           [](const PyGroup& s, ap2::elem_t a) { return s.g->element_order(a); })
      .def("commutator", [](const PyGroup& s, ap2::elem_t a,
                            ap2::elem_t b) { return s.g->commutator(a, b); })
      .def("is_p_group",
           [](const PyGroup& s, long long p) { return s.g->is_p_group(p); })
      .def("__len__", [](const PyGroup& s) { return s.g->order(); })
      .def("__repr__", [](const PyGroup& s) {
        return "<ap2.Group " + s.g->label() + " of order " +
               std::to_string(s.g->order()) + ">";
      });

  m.def("build_family", [](const std::string& text, long long max_order) {
          return PyGroup{ap2::build_family(text, limits_of(max_order))};
        },
        py::arg("text"), py::arg("max_order") = ap2::Limits{}.max_order,
        "Build a group from a family spec, e.g. 'extraspecial_plus p=3'.");
  m.def("from_table", &from_table, py::arg("label"), py::arg("table"),
        "Build a group from a row-major multiplication table.");
  m.def("direct_product",
        [](const PyGroup& a, const PyGroup& b) {
          return PyGroup{ap2::direct_product(a.g, b.g)};
        },
        py::arg("a"), py::arg("b"));
  m.def("center",
        [](const PyGroup& s) { return ap2::center(s.g).elements(); },
        py::arg("g"), "Element list of the center.");
  m.def("derived_subgroup",
        [](const PyGroup& s) { return ap2::derived_subgroup(s.g).elements(); },
        py::arg("g"), "Element list of the derived subgroup.");
  m.def("centralizer",
        [](const PyGroup& s, const std::vector<ap2::elem_t>& elems) {
          return ap2::centralizer(s.g, elems).elements();
        },
        py::arg("g"), py::arg("elements"));
  m.def("closure",
        [](const PyGroup& s, const std::vector<ap2::elem_t>& gens) {
          return ap2::closure(s.g, gens).elements();
        },
        py::arg("g"), py::arg("generators"));

  m.def("check_theorem_json", &theorem_json, py::arg("g"), py::arg("p"),
        py::arg("max_order") = ap2::Limits{}.max_order,
        "Same-dimension verdict for one group, as a JSON string.");
  m.def("analyze_json", &analyze_json, py::arg("name"), py::arg("g"),
        py::arg("p"), py::arg("min_rank") = 2, py::arg("with_timing") = false,
        py::arg("max_order") = ap2::Limits{}.max_order,
        "Full pipeline report for one group, as a JSON string.");
  m.def("verify_json", &verify_json, py::arg("catalog_path"),
        py::arg("mode") = "theorem", py::arg("prime") = py::none(),
        py::arg("jobs") = 1, py::arg("with_timing") = false,
        py::arg("max_order") = ap2::Limits{}.max_order,
        "Batch verification over a catalog file, as a JSON string.");
}
