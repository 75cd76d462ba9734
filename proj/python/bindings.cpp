#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "permsing/classifier.hpp"
#include "permsing/cli.hpp"
#include "permsing/oracle.hpp"
#include "permsing/permgroup.hpp"
#include "permsing/report_io.hpp"
#include "permsing/strata.hpp"

namespace py = pybind11;
using namespace permsing;

namespace {

Characteristic chr(int p) { return Characteristic::of(p); }

py::dict component_sup_dict(const ComponentSup& c) {
  py::dict out;
  out["value"] = c.value;
  out["attained_at"] = c.attained_at.to_string();
  out["eventually_decreasing"] = c.eventually_decreasing;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Quotient singularities of permutation actions: exact certificates and finite-field oracles";

  py::class_<ExtHalf>(m, "ExtHalf")
      .def_static("integer", &ExtHalf::integer)
      .def_static("from_halves", &ExtHalf::from_halves)
      .def_static("neg_infinity", &ExtHalf::neg_infinity)
      .def_static("parse", &parse_ext_half)
      .def_property_readonly("is_finite", &ExtHalf::is_finite)
      .def_property_readonly("halves", &ExtHalf::halves)
      .def_property_readonly("numerator", &ExtHalf::numerator)
      .def_property_readonly("denominator", &ExtHalf::denominator)
      .def("__str__", &ExtHalf::to_string)
      .def("__repr__", [](const ExtHalf& v) { return "ExtHalf('" + v.to_string() + "')"; })
      .def("__add__", [](ExtHalf a, ExtHalf b) { return a + b; })
      .def("__eq__", [](ExtHalf a, ExtHalf b) { return a == b; })
      .def("__lt__", [](ExtHalf a, ExtHalf b) { return a < b; })
      .def("__le__", [](ExtHalf a, ExtHalf b) { return a <= b; })
      .def("__hash__", [](ExtHalf v) { return v.is_finite() ? py::hash(py::int_(v.halves())) : -7; });

  py::class_<Permutation>(m, "Permutation")
      .def_property_readonly("degree", &Permutation::degree)
      .def_property_readonly("images", &Permutation::images)
      .def("is_transposition", &Permutation::is_transposition)
      .def("__mul__", [](const Permutation& a, const Permutation& b) { return a * b; })
      .def("__eq__", [](const Permutation& a, const Permutation& b) { return a == b; })
      .def("__str__", &Permutation::to_cycle_string)
      .def("__repr__", [](const Permutation& g) { return "Permutation('" + g.to_cycle_string() + "')"; });

  py::class_<PermutationGroup>(m, "PermutationGroup")
      .def_property_readonly("degree", &PermutationGroup::degree)
      .def_property_readonly("order", &PermutationGroup::order)
      .def_property_readonly("elements", &PermutationGroup::elements)
      .def_property_readonly("generators", &PermutationGroup::generators)
      .def("__contains__", &PermutationGroup::contains)
      .def("__len__", &PermutationGroup::order);

  m.def("parse_permutation", [](const std::string& text, int n) { return parse_permutation(text, n); }, py::arg("text"),
        py::arg("n"));
  m.def("group_closure", [](const std::vector<Permutation>& gens, int n) { return group_closure(gens, n); },
        py::arg("generators"), py::arg("n"));
  m.def("group_from_string", [](const std::string& text, int n) { return group_closure(parse_generators(text, n), n); },
        py::arg("text"), py::arg("n"));
  m.def("named_group", [](const std::string& name, int n) { return named_group(name, n); }, py::arg("name"), py::arg("n"));
  m.def("fixed_space_dimension", &fixed_space_dimension);
  m.def("is_pseudo_reflection", &is_pseudo_reflection);
  m.def("transpositions", &transpositions);
  m.def("branch_components", &branch_components);
  m.def("gorenstein_report", [](const PermutationGroup& g, int p) {
    return to_json(gorenstein_report(g, chr(p))).dump();
  });

  m.def("dim_connected", [](int n, int d, int p) { return dim_connected(n, d, chr(p)); }, py::arg("n"), py::arg("d"),
        py::arg("p"));
  m.def("dim_cyclic_cubic_galois", &dim_cyclic_cubic_galois, py::arg("d"));
  m.def("enumerate_strata", [](int n, int d) {
    std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
    for (auto& s : enumerate_strata(n, d)) out.emplace_back(s.nu, s.delta);
    return out;
  });
  m.def("stratum_dim_sum", [](const std::vector<int>& nu, const std::vector<int>& delta, int p) {
    return stratum_dim_sum(StratumShape{nu, delta}, chr(p));
  });
  m.def("sup_component", [](int part, int p) { return component_sup_dict(sup_component(part, chr(p))); });
  m.def("refined_stratum_sup", [](const std::vector<int>& nu, int p, bool transposition_free) {
    return refined_stratum_sup(nu, chr(p), transposition_free);
  });
  m.def("global_sup", [](int n, int p, bool transposition_free) {
    auto gs = global_sup(n, chr(p), transposition_free);
    py::dict out;
    out["sup"] = gs.sup;
    out["limit_minus_infinity"] = gs.limit_minus_infinity;
    out["worst"] = gs.worst;
    return out;
  });

  m.def("v_of_discriminant", &v_of_discriminant);
  m.def("pair_status", [](int n, int p, bool has_transposition) {
    auto s = pair_status(n, chr(p), has_transposition);
    py::dict out;
    out["klt"] = to_string(s.klt);
    out["lc"] = to_string(s.lc);
    return out;
  });
  m.def("_classify_json", [](const PermutationGroup& g, int p) { return to_json(classify(g, chr(p))).dump(); });

  m.def("as_class_count", &as_class_count, py::arg("p"), py::arg("q"), py::arg("jump"));
  m.def("discriminant_of_jump", &discriminant_of_jump);
  m.def("verify_dimension_growth", [](int p, int n, int d, const std::vector<std::int64_t>& qs) {
    auto check = verify_dimension_growth(p, n, d, qs);
    py::dict out;
    out["predicted"] = check.predicted;
    out["ok"] = check.ok;
    py::list rows;
    for (const auto& r : check.rows) rows.append(py::make_tuple(r.q, r.count, r.expected));
    out["rows"] = rows;
    return out;
  });
  m.def("tame_totally_ramified_count", &tame_totally_ramified_count, py::arg("q"), py::arg("n"));

  m.def("run_cli", [](std::vector<std::string> args) {
    args.insert(args.begin(), "permsing");
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
