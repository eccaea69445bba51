#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "charcorr/errors.hpp"
#include "charcorr/mckay.hpp"
#include "charcorr/report.hpp"
#include "charcorr/showcase.hpp"

namespace py = pybind11;
using namespace charcorr;

namespace {

// pybind11 holders cannot point to const
struct Group {
  GroupPtr ptr;
};

py::object parse_json(const std::string& s) { return py::module_::import("json").attr("loads")(s); }

Subgroup whole(const Group& g) { return Subgroup::whole(g.ptr); }

McKayInstance instance(const Group& g, unsigned p) { return check_hypotheses(whole(g), p); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact character tables and Sylow character correspondences";

  static py::exception<HypothesisError> hyp_exc(m, "HypothesisError", PyExc_ValueError);
  static py::exception<TheoremViolation> thm_exc(m, "TheoremViolation", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InputError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const HypothesisError& e) {
      py::set_error(hyp_exc, e.what());
    } catch (const TheoremViolation& e) {
      py::set_error(thm_exc, (std::string(e.what()) + "\n" + e.forensics()).c_str());
    }
  });

  py::class_<Group>(m, "Group")
      .def(py::init([](const std::string& name, std::size_t degree, std::vector<std::vector<std::uint32_t>> gens,
                       std::size_t cap) { return Group{load_group(GroupDescription{name, degree, std::move(gens)}, cap)}; }),
           py::arg("name"), py::arg("degree"), py::arg("generators"), py::arg("cap") = kDefaultEnumerationCap)
      .def_static(
          "from_file", [](const std::string& path, std::size_t cap) { return Group{load_group(read_group_file(path), cap)}; },
          py::arg("path"), py::arg("cap") = kDefaultEnumerationCap)
      .def_static(
          "builtin", [](const std::string& name, std::size_t cap) { return Group{load_group(builtin_group(name), cap)}; },
          py::arg("name"), py::arg("cap") = kDefaultEnumerationCap)
      .def_property_readonly("name", [](const Group& g) { return g.ptr->name(); })
      .def_property_readonly("degree", [](const Group& g) { return g.ptr->degree(); })
      .def_property_readonly("order", [](const Group& g) { return g.ptr->order(); })
      .def("__repr__", [](const Group& g) {
        return "<Group " + g.ptr->name() + " of order " + std::to_string(g.ptr->order()) + ">";
      });

  m.def(
      "character_table",
      [](const Group& g) { return parse_json(render_table(*character_table(whole(g)), Format::structured)); },
      py::arg("group"), "Classes and irreducible characters; values rendered as exact cyclotomic strings.");
  m.def(
      "table_text", [](const Group& g) { return render_table(*character_table(whole(g)), Format::text); },
      py::arg("group"));

  m.def(
      "hypotheses",
      [](const Group& g, unsigned p) {
        const auto inst = instance(g, p);
        py::dict d;
        d["solvable"] = inst.solvable;
        d["p_solvable"] = inst.p_solvable;
        d["self_normalizing"] = inst.self_normalizing;
        d["parity"] = inst.parity;
        d["sylow_order"] = inst.sylow.order();
        d["normalizer_order"] = inst.normalizer.order();
        d["refusal"] = inst.descent_refusal();
        return d;
      },
      py::arg("group"), py::arg("p"));

  m.def(
      "mckay_count",
      [](const Group& g, unsigned p) {
        const auto c = mckay_count(instance(g, p));
        return py::make_tuple(c.group_count, c.normalizer_count);
      },
      py::arg("group"), py::arg("p"), "(|Irr_p'(G)|, |Irr_p'(N_G(P))|)");

  m.def(
      "star",
      [](const Group& g, unsigned p, std::size_t chi) { return navarro_star(instance(g, p), chi); },
      py::arg("group"), py::arg("p"), py::arg("chi"), "Row of the Sylow table for the linear constituent of chi_P.");

  m.def(
      "descent",
      [](const Group& g, unsigned p, std::size_t chi) {
        const auto r = isaacs_descent(instance(g, p), chi);
        std::vector<std::size_t> orders;
        for (const auto& s : r.steps) orders.push_back(s.group.order());
        return py::make_tuple(r.xi, orders);
      },
      py::arg("group"), py::arg("p"), py::arg("chi"), "(row of the Sylow table, group orders along the descent)");

  m.def(
      "verify",
      [](const Group& g, unsigned p, unsigned threads) {
        const auto inst = instance(g, p);
        if (!inst.descent_applicable()) throw HypothesisError(inst.descent_refusal());
        std::vector<InstanceOutcome> outs{{g.ptr->name(), verify_main(inst, threads), {}}};
        const py::list instances = parse_json(render_outcomes(outs, Format::structured))["instances"];
        return py::object(instances[0]);
      },
      py::arg("group"), py::arg("p"), py::arg("threads") = 1);

  m.def(
      "remark648", [](std::size_t cap) { return parse_json(render_remark(run_remark(cap), Format::structured)); },
      py::arg("cap") = kDefaultEnumerationCap);

  m.def("builtin_names", &builtin_names);
  m.def("corpus", [] {
    py::list out;
    for (const auto& e : corpus()) out.append(py::make_tuple(e.file, e.p, e.positive));
    return out;
  });
}
