#include "doctest.h"
#include "iel/formula.hpp"
#include "iel/syntax.hpp"
#include "iel/translate.hpp"
#include "support.hpp"

using iel::Formula;
using iel::Kind;
using iel::parse;
using iel::render;

namespace {

Formula p() { return Formula::atom("p"); }
Formula q() { return Formula::atom("q"); }
Formula r() { return Formula::atom("r"); }

std::size_t count_nodes(const Formula& f) { return f.size(); }

}  // namespace

TEST_CASE("parse builds the expected trees") {
  CHECK(parse("K(p -> q) -> (K p -> K q)") ==
        Formula::imp(Formula::know(Formula::imp(p(), q())), Formula::imp(Formula::know(p()), Formula::know(q()))));
  CHECK(parse("~p") == Formula::imp(p(), Formula::bottom()));
  CHECK(parse("p -> q -> r") == Formula::imp(p(), Formula::imp(q(), r())));
  CHECK(parse("p & q & r") == Formula::conj(Formula::conj(p(), q()), r()));
  CHECK(parse("p | q | r") == Formula::disj(Formula::disj(p(), q()), r()));
  CHECK(parse("p | q & r") == Formula::disj(p(), Formula::conj(q(), r())));
  CHECK(parse("p & q -> r | p") == Formula::imp(Formula::conj(p(), q()), Formula::disj(r(), p())));
  CHECK(parse("p <-> q") == Formula::iff(p(), q()));
  CHECK(parse("~K p") == Formula::neg(Formula::know(p())));
  CHECK(parse("K K p") == Formula::know(Formula::know(p())));
  CHECK(parse("[]V[]p") == Formula::box(Formula::ver(Formula::box(p()))));
  CHECK(parse("false") == Formula::bottom());
  CHECK(parse("  ( p )  ") == p());
  CHECK(parse("x_1 & y2") == Formula::conj(Formula::atom("x_1"), Formula::atom("y2")));
}

TEST_CASE("unicode aliases") {
  CHECK(parse("¬p ∧ q → p ∨ ⊥") == parse("~p & q -> p | false"));
  CHECK(parse("p ↔ q") == parse("p <-> q"));
  CHECK(parse("□V□p") == parse("[]V[]p"));
}

TEST_CASE("syntax errors carry offset and expectations") {
  auto offset_of = [](const char* text) -> std::size_t {
    try {
      parse(text);
    } catch (const iel::ParseError& e) {
      CHECK_FALSE(e.expected().empty());
      return e.offset();
    }
    FAIL("no error for " << text);
    return 0;
  };
  CHECK(offset_of("p ->") == 4);
  CHECK(offset_of("p q") == 2);
  CHECK(offset_of("(p & q") == 6);
  CHECK(offset_of("P") == 0);
  CHECK(offset_of("p <-> q <-> r") == 8);
  CHECK(offset_of("") == 0);
  CHECK(offset_of("p & # q") == 4);
}

TEST_CASE("render uses minimal parentheses") {
  CHECK(render(Formula::imp(Formula::know(p()), Formula::neg(Formula::neg(p())))) == "K p -> ~~p");
  CHECK(render(Formula::bottom()) == "false");
  CHECK(render(Formula::conj(p(), Formula::disj(q(), r()))) == "p & (q | r)");
  CHECK(render(Formula::imp(Formula::imp(p(), q()), r())) == "(p -> q) -> r");
  CHECK(render(Formula::imp(p(), Formula::imp(q(), r()))) == "p -> q -> r");
  CHECK(render(Formula::conj(Formula::conj(p(), q()), r())) == "p & q & r");
  CHECK(render(Formula::conj(p(), Formula::conj(q(), r()))) == "p & (q & r)");
  CHECK(render(parse("p <-> q")) == "p <-> q");
  CHECK(render(parse("K(p & q)")) == "K (p & q)");
  CHECK(render(parse("~(p -> q)")) == "~(p -> q)");
  CHECK(render(parse("[]V[]p")) == "[]V[]p");
}

TEST_CASE("render round-trips fuzzed formulas") {
  iel::testing::FormulaGen gen(1234);
  for (int i = 0; i < 3000; ++i) {
    const Formula f = gen.any(1 + i % 8);
    const std::string text = render(f);
    INFO(text);
    CHECK(parse(text) == f);
  }
}

TEST_CASE("sugar stays out of the tree") {
  const Formula f = parse("~p <-> ~~q");
  for (const Formula& g : iel::subformulas(f)) CHECK(g.kind() <= Kind::Ver);
  CHECK(f.is(Kind::And));
  CHECK(f.is_iff());
}

TEST_CASE("sublanguage classification") {
  CHECK(iel::classify(parse("p -> q")) == iel::Sublanguage::Propositional);
  CHECK(iel::classify(parse("K p")) == iel::Sublanguage::Intuitionistic);
  CHECK(iel::classify(parse("[]V p")) == iel::Sublanguage::Bimodal);
  CHECK(iel::classify(parse("K p & []p")) == iel::Sublanguage::Mixed);
  CHECK_THROWS_AS(iel::godel_translate(parse("[]p")), iel::LanguageError);
  CHECK_THROWS_AS(iel::kolmogorov_translate(parse("V p")), iel::LanguageError);
}

TEST_CASE("godel translation") {
  CHECK(render(iel::godel_translate(parse("K p"))) == "[]V[]p");
  CHECK(render(iel::godel_translate(parse("p"))) == "[]p");
  CHECK(render(iel::godel_translate(parse("p -> q"))) == "[]([]p -> []q)");
  CHECK(iel::godel_translate(parse("false")) == Formula::bottom());
  CHECK(iel::godel_translate(parse("p & q")) == parse("[]([]p & []q)"));

  iel::testing::FormulaGen gen(77);
  for (int i = 0; i < 2000; ++i) {
    const Formula f = gen(1 + i % 8);
    const Formula t = iel::godel_translate(f);
    CHECK_FALSE(iel::contains_kind(t, Kind::Know));
    CHECK(count_nodes(t) <= 3 * count_nodes(f));
  }
}

TEST_CASE("glivenko and kolmogorov translations") {
  CHECK(render(iel::glivenko_translate(parse("p | ~p"))) == "~~(p | ~p)");
  CHECK(render(iel::glivenko_translate(parse("K p -> p"))) == "~~(K p -> p)");
  CHECK(render(iel::glivenko_translate(parse("false"))) == "~~false");
  CHECK(render(iel::kolmogorov_translate(parse("p"))) == "~~p");
  CHECK(render(iel::kolmogorov_translate(parse("p -> q"))) == "~~(~~p -> ~~q)");
  CHECK(render(iel::kolmogorov_translate(parse("K p"))) == "~~K ~~p");

  iel::testing::FormulaGen gen(78);
  for (int i = 0; i < 1000; ++i) {
    const Formula f = gen(1 + i % 6);
    CHECK(iel::is_intuitionistic(iel::glivenko_translate(f)));
    CHECK(iel::is_intuitionistic(iel::kolmogorov_translate(f)));
  }
}

TEST_CASE("atoms, subformulas, substitution") {
  const Formula f = parse("K(q -> p) | p");
  CHECK(iel::atoms_of(f) == std::vector<std::string>{"p", "q"});
  const auto subs = iel::subformulas(f);
  CHECK(subs.back() == f);
  CHECK(subs.size() == 5);
  const Formula g = iel::substitute(f, std::map<std::string, Formula>{{"p", parse("false")}});
  CHECK(g == parse("K(q -> false) | false"));
}
