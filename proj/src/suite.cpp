#include "iel/suite.hpp"

#include <algorithm>
#include <sstream>

#include "iel/classical.hpp"
#include "iel/corpus.hpp"
#include "iel/hilbert.hpp"
#include "iel/kripke.hpp"
#include "iel/prover.hpp"
#include "iel/syntax.hpp"
#include "iel/translate.hpp"

namespace iel {

std::size_t SuiteReport::passed() const {
  return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const SuiteEntry& e) { return e.pass; }));
}

namespace {

std::string yes_no(bool b) { return b ? "true" : "false"; }

class Suite {
 public:
  void add(std::string name, std::string expected, std::string observed) {
    const bool pass = expected == observed;
    report_.entries.push_back({std::move(name), std::move(expected), std::move(observed), pass});
  }

  void decides(const std::string& label, Logic logic, const Formula& f, VerdictKind expected) {
    const Verdict v = decide(logic, f);
    std::string observed(to_string(v.kind));
    if (v.invalid() && !(validate(v.countermodel->model, logic).ok() &&
                         !forces(v.countermodel->model, v.countermodel->world, f)))
      observed += " (bad countermodel)";
    add(label + ": decide(" + std::string(to_string(logic)) + ", " + render(f) + ")", std::string(to_string(expected)),
        observed);
  }

  void decides(const std::string& label, Logic logic, const char* text, VerdictKind expected) {
    decides(label, logic, parse(text), expected);
  }

  void forces_at(const std::string& model_name, const KripkeModel& m, int world, const char* text, bool expected) {
    add(model_name + ": forces(" + std::to_string(world) + ", " + render(parse(text)) + ")", yes_no(expected),
        yes_no(forces(m, world, parse(text))));
  }

  void validates(const std::string& model_name, const KripkeModel& m, Logic as, const std::string& expected) {
    const ValidationReport r = validate(m, as);
    std::string observed = "ok";
    if (!r.ok()) {
      observed.clear();
      for (const Violation& v : r.violations) {
        const std::string& c = v.condition;
        if (observed.find(c) == std::string::npos) observed += (observed.empty() ? "" : ",") + c;
      }
    }
    add(model_name + ": validate as " + std::string(to_string(as)), expected, observed);
  }

  SuiteReport take() { return std::move(report_); }

 private:
  SuiteReport report_;
};

}  // namespace

SuiteReport run_paper_suite() {
  Suite s;
  constexpr auto Valid = VerdictKind::Valid;
  constexpr auto Invalid = VerdictKind::Invalid;

  // Axioms as validities.
  for (const AxiomSchema& schema : axiom_schemas()) {
    const Formula instance = substitute(
        schema.pattern, std::map<std::string, Formula>{{"A", parse("p")}, {"B", parse("q")}, {"C", parse("p & q")}});
    for (Logic logic : kAllLogics)
      s.decides("axiom " + std::string(to_string(schema.id)), logic, instance,
                axiom_available(schema.id, logic) ? Valid : Invalid);
  }

  // Theorem and non-theorem corpora.
  for (Logic logic : kAllLogics)
    for (const CorpusEntry& e : theorems(logic)) s.decides("theorem " + e.name, logic, e.formula, Valid);
  for (const NonTheorem& e : non_theorems()) s.decides("non-theorem " + e.name, e.logic, e.formula, Invalid);
  s.decides("dosen", Logic::IEL, "K p -> ~~p", Valid);
  s.decides("dosen", Logic::IEL, "~~p -> K p", Invalid);

  // The four models.
  const KripkeModel m1 = builtin_model("M1");
  s.validates("M1", m1, Logic::IELMinus, "ok");
  s.forces_at("M1", m1, 1, "K false", true);
  s.add("M1: holds_in_model(~K false)", "false", yes_no(holds_in_model(m1, parse("~K false"))));

  const KripkeModel m2 = builtin_model("M2");
  s.validates("M2", m2, Logic::IEL, "ok");
  s.forces_at("M2", m2, 1, "K p", true);
  s.forces_at("M2", m2, 1, "p", false);
  s.forces_at("M2", m2, 1, "K p -> p", false);
  s.forces_at("M2", m2, 1, "K p -> ~~p", true);

  const KripkeModel m3 = builtin_model("M3");
  s.validates("M3", m3, Logic::IEL, "ok");
  s.forces_at("M3", m3, 1, "K(p | ~p)", true);
  s.forces_at("M3", m3, 1, "K p", false);
  s.forces_at("M3", m3, 1, "K ~p", false);

  const KripkeModel m4 = builtin_model("M4");
  s.validates("M4", m4, Logic::IELMinus, "ok");
  s.validates("M4", m4, Logic::IEL, "E-serial");
  s.forces_at("M4", m4, 1, "K p", true);
  s.forces_at("M4", m4, 1, "~~p", false);

  // Hilbert library.
  for (const NamedProof& entry : proof_library()) {
    const CheckResult r = check_proof(entry.proof);
    s.add("proof " + entry.name + " (" + std::string(to_string(entry.proof.logic)) + ")", "ok",
          r.ok() ? "ok" : "line " + std::to_string(r.error->line) + ": " + r.error->reason);
  }

  // Truth-condition hierarchy over Int_K.
  s.decides("hierarchy", Logic::IntK, "K p -> ~~p", Invalid);
  for (const SeparatingModel& sep : hierarchy_separations()) {
    s.validates(sep.name, sep.model, Logic::IntK, "ok");
    s.add(sep.name + ": holds_in_model(" + render(sep.holds) + ")", "true", yes_no(holds_in_model(sep.model, sep.holds)));
    s.forces_at(sep.name, sep.model, 1, render(sep.fails).c_str(), false);
  }

  // Translations.
  SearchConfig bounds;
  bounds.max_worlds = 3;
  for (const CorpusEntry& e : theorems(Logic::IEL)) {
    const bool refuted = find_classical_countermodel(Variant::S4V, godel_translate(e.formula), bounds).has_value();
    s.add("godel " + e.name + ": S4V countermodel within 3 worlds", "false", yes_no(refuted));
  }
  for (const CorpusEntry& e : s5_theorems())
    s.decides("glivenko " + e.name, Logic::IEL, glivenko_translate(e.formula), Valid);

  return s.take();
}

std::string render_suite_table(const SuiteReport& report) {
  std::size_t width = 4;
  for (const SuiteEntry& e : report.entries) width = std::max(width, e.name.size());
  std::ostringstream out;
  for (const SuiteEntry& e : report.entries) {
    out << (e.pass ? "PASS  " : "FAIL  ") << e.name << std::string(width - e.name.size() + 2, ' ') << "expected "
        << e.expected;
    if (!e.pass) out << ", observed " << e.observed;
    out << '\n';
  }
  out << report.passed() << "/" << report.entries.size() << " passed\n";
  return out.str();
}

std::string render_suite_tsv(const SuiteReport& report) {
  std::ostringstream out;
  for (const SuiteEntry& e : report.entries)
    out << e.name << '\t' << e.expected << '\t' << e.observed << '\t' << (e.pass ? "PASS" : "FAIL") << '\n';
  return out.str();
}

}  // namespace iel
