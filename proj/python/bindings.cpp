#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "iel/classical.hpp"
#include "iel/hilbert.hpp"
#include "iel/kripke.hpp"
#include "iel/prover.hpp"
#include "iel/search.hpp"
#include "iel/suite.hpp"
#include "iel/syntax.hpp"
#include "iel/translate.hpp"

namespace py = pybind11;
using namespace iel;

namespace {

// Operations take either a Formula or its text.
Formula as_formula(const py::object& obj) {
  if (py::isinstance<py::str>(obj)) return parse(obj.cast<std::string>());
  return obj.cast<Formula>();
}

std::vector<int> ids_of(const KripkeModel& m, WorldSet s) {
  std::vector<int> out;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (s & bit(i)) out.push_back(m.ids[i]);
  return out;
}

std::vector<std::pair<int, int>> pairs_of(const KripkeModel& m, const std::vector<WorldSet>& rel) {
  std::vector<std::pair<int, int>> out;
  for (std::size_t u = 0; u < m.size(); ++u)
    for (int v : ids_of(m, rel[u])) out.emplace_back(m.ids[u], v);
  return out;
}

py::list violations(const ValidationReport& rep) {
  py::list out;
  for (const Violation& v : rep.violations) out.append(py::make_tuple(v.condition, v.witnesses));
  return out;
}

SearchConfig limits(std::optional<std::size_t> max_labels, std::optional<long> time_budget_ms) {
  SearchConfig cfg;
  if (max_labels) cfg.max_labels = *max_labels;
  if (time_budget_ms) cfg.time_budget = std::chrono::milliseconds(*time_budget_ms);
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Intuitionistic epistemic logic: parsing, models, decision, proofs";

  static py::handle parse_error = py::exception<ParseError>(m, "ParseError", PyExc_ValueError).release();
  py::register_exception<LanguageError>(m, "LanguageError", PyExc_ValueError);
  py::register_exception<ModelError>(m, "ModelError", PyExc_ValueError);
  py::register_exception<ProofFormatError>(m, "ProofFormatError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      py::object err = py::reinterpret_borrow<py::object>(parse_error)(e.what());
      err.attr("offset") = e.offset();
      err.attr("expected") = e.expected();
      PyErr_SetObject(parse_error.ptr(), err.ptr());
    }
  });

  py::enum_<Logic>(m, "Logic")
      .value("IntK", Logic::IntK)
      .value("IELMinus", Logic::IELMinus)
      .value("IEL", Logic::IEL);
  m.def("parse_logic", [](const std::string& s) { return parse_logic(s); });

  py::class_<Formula>(m, "Formula")
      .def_property_readonly("kind",
                             [](const Formula& f) {
                               static const char* names[] = {"atom", "bottom", "and", "or",
                                                             "imp",  "know",   "box", "ver"};
                               return names[static_cast<int>(f.kind())];
                             })
      .def_property_readonly("size", &Formula::size)
      .def_property_readonly("depth", &Formula::depth)
      .def_property_readonly("children",
                             [](const Formula& f) {
                               std::vector<Formula> out;
                               if (f.is_binary()) out = {f.left(), f.right()};
                               if (f.is_unary()) out = {f.body()};
                               return out;
                             })
      .def_property_readonly("name", [](const Formula& f) -> py::object {
        return f.is(Kind::Atom) ? py::object(py::str(f.name())) : py::object(py::none());
      })
      .def("__str__", [](const Formula& f) { return render(f); })
      .def("__repr__", [](const Formula& f) { return "Formula('" + render(f) + "')"; })
      .def("__eq__", [](const Formula& a, const Formula& b) { return a == b; })
      .def("__hash__", &Formula::hash);

  m.def("parse", &parse, py::arg("text"));
  m.def("render", &render, py::arg("formula"));
  m.def("atoms", [](const py::object& f) { return atoms_of(as_formula(f)); });
  m.def("godel_translate", [](const py::object& f) { return godel_translate(as_formula(f)); });
  m.def("glivenko_translate", [](const py::object& f) { return glivenko_translate(as_formula(f)); });
  m.def("kolmogorov_translate", [](const py::object& f) { return kolmogorov_translate(as_formula(f)); });

  py::class_<KripkeModel>(m, "KripkeModel")
      .def_readonly("logic", &KripkeModel::logic)
      .def_property_readonly("worlds", [](const KripkeModel& k) { return k.ids; })
      .def_property_readonly("R", [](const KripkeModel& k) { return pairs_of(k, k.r); })
      .def_property_readonly("E", [](const KripkeModel& k) { return pairs_of(k, k.e); })
      .def_property_readonly("valuation",
                             [](const KripkeModel& k) {
                               std::map<std::string, std::vector<int>> out;
                               for (std::size_t a = 0; a < k.atoms.size(); ++a) out[k.atoms[a]] = ids_of(k, k.val[a]);
                               return out;
                             })
      .def("forces", [](const KripkeModel& k, int w, const py::object& f) { return forces(k, w, as_formula(f)); })
      .def("truth_set", [](const KripkeModel& k, const py::object& f) { return ids_of(k, truth_set(k, as_formula(f))); })
      .def("holds", [](const KripkeModel& k, const py::object& f) { return holds_in_model(k, as_formula(f)); })
      .def(
          "validate",
          [](const KripkeModel& k, std::optional<Logic> as) { return violations(validate(k, as.value_or(k.logic))); },
          py::arg("logic") = py::none())
      .def("to_text", &render_model)
      .def("to_dot", &model_to_dot)
      .def("__len__", &KripkeModel::size);

  m.def("builtin_model", [](const std::string& name) { return builtin_model(name); });
  m.def("parse_model", [](const std::string& text) { return parse_model(text).model; });

  py::class_<Certificate>(m, "Certificate")
      .def_readonly("labels", &Certificate::labels)
      .def_readonly("root_candidates", &Certificate::root_candidates)
      .def_readonly("elimination_rounds", &Certificate::elimination_rounds)
      .def_readonly("trace", &Certificate::trace);

  py::class_<Verdict>(m, "Verdict")
      .def_property_readonly("kind", [](const Verdict& v) { return std::string(to_string(v.kind)); })
      .def_property_readonly("valid", &Verdict::valid)
      .def_property_readonly("invalid", &Verdict::invalid)
      .def_property_readonly("unknown", &Verdict::unknown)
      .def_readonly("certificate", &Verdict::certificate)
      .def_readonly("reason", &Verdict::reason)
      .def_property_readonly("countermodel", [](const Verdict& v) -> py::object {
        if (!v.countermodel) return py::none();
        return py::make_tuple(v.countermodel->model, v.countermodel->world);
      });

  m.def(
      "decide",
      [](Logic logic, const py::object& f, std::optional<std::size_t> max_labels, std::optional<long> budget) {
        const Formula g = as_formula(f);
        py::gil_scoped_release release;
        return decide(logic, g, limits(max_labels, budget));
      },
      py::arg("logic"), py::arg("formula"), py::arg("max_labels") = py::none(),
      py::arg("time_budget_ms") = py::none());
  m.def(
      "decide_ipc", [](const py::object& f) { return decide_ipc(as_formula(f)); }, py::arg("formula"));
  m.def(
      "find_countermodel",
      [](Logic logic, const py::object& f, std::size_t max_worlds) -> py::object {
        SearchConfig cfg;
        cfg.max_worlds = max_worlds;
        auto cm = find_countermodel(logic, as_formula(f), cfg);
        if (!cm) return py::none();
        return py::make_tuple(cm->model, cm->world);
      },
      py::arg("logic"), py::arg("formula"), py::arg("max_worlds") = 4);
  m.def("count_models", [](Logic logic, std::size_t n, const std::vector<std::string>& atoms, bool rooted) {
    return count_models(logic, n, atoms, {.rooted_only = rooted});
  }, py::arg("logic"), py::arg("worlds"), py::arg("atoms"), py::arg("rooted_only") = false);

  m.def(
      "find_classical_countermodel",
      [](const std::string& variant, const py::object& f, std::size_t max_worlds) -> py::object {
        SearchConfig cfg;
        cfg.max_worlds = max_worlds;
        auto cm = find_classical_countermodel(parse_variant(variant), as_formula(f), cfg);
        if (!cm) return py::none();
        return py::make_tuple(render_classical_model(cm->model), cm->world);
      },
      py::arg("variant"), py::arg("formula"), py::arg("max_worlds") = 3);

  m.def(
      "check_proof",
      [](const std::string& text) -> py::object {
        const CheckResult r = check_proof(parse_proof(text));
        if (r.ok()) return py::none();
        return py::make_tuple(r.error->line, r.error->reason);
      },
      py::arg("text"), "None if the proof checks, else (line, reason).");
  m.def("library_proofs", [] {
    std::vector<std::string> names;
    for (const NamedProof& np : proof_library()) names.push_back(np.name);
    return names;
  });
  m.def("library_proof", [](const std::string& name) { return render_proof(library_proof(name)); });

  m.def("run_paper_suite", [] {
    py::list out;
    for (const SuiteEntry& e : run_paper_suite().entries) out.append(py::make_tuple(e.name, e.expected, e.observed, e.pass));
    return out;
  });
}
