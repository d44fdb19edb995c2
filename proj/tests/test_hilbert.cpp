#include "doctest.h"
#include "iel/hilbert.hpp"
#include "iel/prover.hpp"
#include "iel/search.hpp"
#include "iel/syntax.hpp"
#include "support.hpp"

using namespace iel;

namespace {

HilbertProof proof_of(const char* text) { return parse_proof(text); }

const char* kNotKFalse = R"(logic: IEL
goal: ~K false
1. K false -> ~~false | axiom IR
2. (K false -> ~~false) -> ((~~false -> false) -> (K false -> false)) | ipc
3. (~~false -> false) -> (K false -> false) | mp 1 2
4. ~~false -> false | ipc
5. K false -> false | mp 4 3
)";

// The conclusion a checked proof licenses: premises imply the goal.
Formula licensed(const HilbertProof& p) {
  if (p.premises.empty()) return p.goal;
  Formula conj = p.premises[0];
  for (std::size_t k = 1; k < p.premises.size(); ++k) conj = Formula::conj(conj, p.premises[k]);
  return Formula::imp(conj, p.goal);
}

}  // namespace

TEST_CASE("axiom matching") {
  auto ir = match_axiom(parse("K false -> ~~false"), AxiomId::IR);
  REQUIRE(ir);
  CHECK(ir->at("A") == Formula::bottom());

  auto a1 = match_axiom(parse("p -> (q -> p)"), AxiomId::A1);
  REQUIRE(a1);
  CHECK(a1->at("A") == parse("p"));
  CHECK(a1->at("B") == parse("q"));

  CHECK_FALSE(match_any_axiom(parse("K p -> p")));
  CHECK_FALSE(match_axiom(parse("p -> (q -> q)"), AxiomId::A1));
  CHECK(match_any_axiom(parse("K(p -> q) -> (K p -> K q)")) == AxiomId::DIST);
  CHECK(match_any_axiom(parse("K p -> K K p")) == AxiomId::CO);
}

TEST_CASE("axiom availability and names") {
  CHECK(axiom_available(AxiomId::IR, Logic::IEL));
  CHECK_FALSE(axiom_available(AxiomId::IR, Logic::IELMinus));
  CHECK_FALSE(axiom_available(AxiomId::CO, Logic::IntK));
  CHECK(axiom_available(AxiomId::CO, Logic::IELMinus));
  CHECK(axiom_available(AxiomId::DIST, Logic::IntK));
  CHECK(parse_axiom_id("dist") == AxiomId::DIST);
  CHECK(parse_axiom_id("a7") == AxiomId::A7);
  CHECK_FALSE(parse_axiom_id("A10"));
  CHECK(axiom_schemas().size() == 12);
}

TEST_CASE("every schema instance is valid in each logic that has it") {
  testing::FormulaGen gen(51);
  for (const AxiomSchema& s : axiom_schemas())
    for (int k = 0; k < 20; ++k) {
      const Formula inst = substitute(s.pattern, Substitution{{"A", gen(2)}, {"B", gen(2)}, {"C", gen(2)}});
      CHECK(match_axiom(inst, s.id));
      for (Logic logic : kAllLogics)
        if (axiom_available(s.id, logic)) CHECK(decide(logic, inst).valid());
    }
}

TEST_CASE("the five-line proof of ~K false") {
  HilbertProof p = proof_of(kNotKFalse);
  CHECK(check_proof(p).ok());
  p.logic = Logic::IELMinus;
  const CheckResult r = check_proof(p);
  REQUIRE_FALSE(r.ok());
  CHECK(r.error->line == 1);
  CHECK(r.error->reason.find("IR") != std::string::npos);
}

TEST_CASE("necessitation") {
  const HilbertProof p = library_proof("nec-demo");
  CHECK(check_proof(p).ok());
  const HilbertProof q = eliminate_necessitation(p);
  CHECK(check_proof(q).ok());
  for (const ProofLine& l : q.lines) CHECK(l.why.rule != Rule::Nec);
  CHECK_THROWS(eliminate_necessitation(library_proof("hierarchy-top-to-mid")));
}

TEST_CASE("checker errors") {
  SUBCASE("bad modus ponens") {
    const CheckResult r = check_proof(proof_of(R"(logic: IEL
goal: q
1. p -> (q -> p) | axiom A1
2. q | mp 1 1
)"));
    REQUIRE_FALSE(r.ok());
    CHECK(r.error->line == 2);
  }
  SUBCASE("forward reference") {
    const CheckResult r = check_proof(proof_of(R"(logic: IEL
goal: p -> p
1. p -> p | mp 2 3
2. p -> p | ipc
)"));
    REQUIRE_FALSE(r.ok());
    CHECK(r.error->line == 1);
  }
  SUBCASE("nec on a premise") {
    const CheckResult r = check_proof(proof_of(R"(logic: IEL
goal: K p
premise: p
1. p | premise
2. K p | nec 1
)"));
    REQUIRE_FALSE(r.ok());
    CHECK(r.error->line == 2);
    CHECK(r.error->reason.find("premise") != std::string::npos);
  }
  SUBCASE("not a tautology") {
    const CheckResult r = check_proof(proof_of(R"(logic: IEL
goal: p | ~p
1. p | ~p | ipc
)"));
    REQUIRE_FALSE(r.ok());
    CHECK(r.error->line == 1);
  }
  SUBCASE("K-subformulas are opaque to ipc") {
    CHECK(is_ipc_instance(parse("K p -> K p")));
    CHECK(is_ipc_instance(parse("K(p & q) | ~K(p & q) -> K(p & q) | ~K(p & q)")));
    CHECK_FALSE(is_ipc_instance(parse("K(p & q) -> K(q & p)")));
    CHECK_FALSE(is_ipc_instance(parse("K p -> p")));
  }
  SUBCASE("goal mismatch") {
    const CheckResult r = check_proof(proof_of(R"(logic: IEL
goal: q -> q
1. p -> p | ipc
)"));
    REQUIRE_FALSE(r.ok());
    CHECK(r.error->line == 1);
  }
  SUBCASE("unlisted premise") {
    const CheckResult r = check_proof(proof_of(R"(logic: IEL
goal: p
1. p | premise
)"));
    REQUIRE_FALSE(r.ok());
  }
}

TEST_CASE("proof file format errors") {
  CHECK_THROWS_AS(parse_proof("goal: p\n1. p | ipc\n"), ProofFormatError);
  CHECK_THROWS_AS(parse_proof("logic: IEL\n1. p | ipc\n"), ProofFormatError);
  CHECK_THROWS_AS(parse_proof("logic: IEL\ngoal: p\n2. p | ipc\n"), ProofFormatError);
  CHECK_THROWS_AS(parse_proof("logic: IEL\ngoal: p\n1. p\n"), ProofFormatError);
  CHECK_THROWS_AS(parse_proof("logic: IEL\ngoal: p\n1. p | axiom A42\n"), ProofFormatError);
  CHECK_THROWS_AS(parse_proof("logic: IEL\ngoal: p\n1. p | mp 1\n"), ProofFormatError);
  CHECK_THROWS_AS(parse_proof("logic: IEL\ngoal: p\n1. p | frobnicate\n"), ProofFormatError);
  CHECK_THROWS_AS(parse_proof("logic: IEL\ngoal: p\nfoo: bar\n"), ProofFormatError);
  try {
    parse_proof("logic: IEL\ngoal: p\n1. p | ipc\n2. p | mp x 1\n");
    FAIL("accepted a bad reference");
  } catch (const ProofFormatError& e) {
    CHECK(e.line() == 4);
  }
}

TEST_CASE("the bundled library") {
  CHECK(proof_library().size() >= 12);
  CHECK_THROWS_AS(library_proof("no-such-proof"), std::out_of_range);
  for (const NamedProof& np : proof_library()) {
    INFO(np.name);
    const CheckResult r = check_proof(np.proof);
    CHECK(r.ok());
    const Formula claim = licensed(np.proof);
    CHECK(decide(np.proof.logic, claim).valid());

    const HilbertProof back = parse_proof(render_proof(np.proof));
    CHECK(render_proof(back) == render_proof(np.proof));
    CHECK(back.goal == np.proof.goal);

    // Independent of the prover: true in every small model.
    const std::size_t bound = np.proof.logic == Logic::IntK ? 2 : 3;
    for (std::size_t n = 1; n <= bound; ++n)
      enumerate_models(np.proof.logic, n, atoms_of(claim), [&](const KripkeModel& m) {
        const bool holds = holds_in_model(m, claim);
        CHECK(holds);
        return holds;
      });
  }
}

TEST_CASE("the middle group of the hierarchy is checked under stronger logics too") {
  for (const char* name : {"hierarchy-mid-1", "hierarchy-mid-2", "hierarchy-mid-3", "hierarchy-mid-4"}) {
    HilbertProof p = library_proof(name);
    for (Logic logic : kAllLogics) {
      p.logic = logic;
      CHECK(check_proof(p).ok());
    }
  }
}

TEST_CASE("necessitation elimination over the library") {
  for (const NamedProof& np : proof_library()) {
    if (np.proof.logic == Logic::IntK) continue;
    INFO(np.name);
    const HilbertProof q = eliminate_necessitation(np.proof);
    CHECK(check_proof(q).ok());
    CHECK(q.goal == np.proof.goal);
    for (const ProofLine& l : q.lines) CHECK(l.why.rule != Rule::Nec);
  }
}

TEST_CASE("discharging premises") {
  std::vector<HilbertProof> samples;
  for (const NamedProof& np : proof_library())
    if (!np.proof.premises.empty()) samples.push_back(np.proof);

  testing::FormulaGen gen(61);
  while (samples.size() < 20) {
    const Formula a = gen(2);
    const Formula b = gen(2);
    HilbertProof p;
    p.logic = kAllLogics[samples.size() % 3];
    p.premises = {a};
    p.goal = Formula::imp(b, a);
    p.lines = {{a, Justification::by_premise()},
               {Formula::imp(a, Formula::imp(b, a)), Justification::by_axiom(AxiomId::A1)},
               {Formula::imp(b, a), Justification::by_mp(1, 2)}};
    samples.push_back(p);
  }
  for (const HilbertProof& p : samples) {
    INFO(render_proof(p));
    REQUIRE(check_proof(p).ok());
    const HilbertProof d = discharge_premise(p, 0);
    CHECK(check_proof(d).ok());
    CHECK(d.premises.empty());
    CHECK(d.goal == Formula::imp(p.premises[0], p.goal));
  }
  HilbertProof broken = samples.front();
  broken.lines.pop_back();
  CHECK_THROWS(discharge_premise(broken, 0));
  CHECK_THROWS(discharge_premise(samples.front(), 3));
}
