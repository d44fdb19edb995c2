#include "doctest.h"
#include "iel/classical.hpp"
#include "iel/corpus.hpp"
#include "iel/search.hpp"
#include "iel/syntax.hpp"
#include "iel/translate.hpp"

using namespace iel;

namespace {

ClassicalModel one_world(Variant variant, bool verifies) {
  ClassicalModel m;
  m.variant = variant;
  m.ids = {1};
  m.rbox = {bit(0)};
  m.rv = {verifies ? bit(0) : WorldSet{0}};
  return m;
}

// Frame-level forcing written directly over the relation rows.
struct Frame {
  std::size_t n;
  std::vector<WorldSet> rbox, rv;
  WorldSet p;

  bool forces(std::size_t w, const Formula& f) const {
    switch (f.kind()) {
      case Kind::Atom:
        return (p >> w) & 1U;
      case Kind::Bottom:
        return false;
      case Kind::And:
        return forces(w, f.left()) && forces(w, f.right());
      case Kind::Or:
        return forces(w, f.left()) || forces(w, f.right());
      case Kind::Imp:
        return !forces(w, f.left()) || forces(w, f.right());
      case Kind::Box:
      case Kind::Ver: {
        const WorldSet row = f.kind() == Kind::Box ? rbox[w] : rv[w];
        for (std::size_t v = 0; v < n; ++v)
          if (((row >> v) & 1U) && !forces(v, f.body())) return false;
        return true;
      }
      default:
        throw std::logic_error("frame forcing: K");
    }
  }

  // Valid on the frame: every valuation of p, every world.
  bool validates(const Formula& f) {
    const WorldSet saved = p;
    bool ok = true;
    for (WorldSet val = 0; val < (WorldSet{1} << n) && ok; ++val) {
      p = val;
      for (std::size_t w = 0; w < n && ok; ++w) ok = forces(w, f);
    }
    p = saved;
    return ok;
  }
};

template <typename F>
void each_frame(std::size_t n, F&& visit) {
  for (const std::vector<WorldSet>& rbox : preorders(n))
    for (std::uint32_t mask = 0; mask < (1U << (n * n)); ++mask) {
      std::vector<WorldSet> rv(n, 0);
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
          if ((mask >> (u * n + v)) & 1U) rv[u] |= bit(v);
      visit(Frame{n, rbox, rv, 0});
    }
}

}  // namespace

TEST_CASE("classical forcing examples") {
  const ClassicalModel loop = one_world(Variant::S4V, true);
  CHECK(validate(loop).ok());
  CHECK(forces_classical(loop, 1, parse("~[]V false")));

  const ClassicalModel blind = one_world(Variant::S4V, false);
  CHECK(forces_classical(blind, 1, parse("[]V false")));
  const ValidationReport rep = validate(blind);
  REQUIRE_FALSE(rep.ok());
  CHECK(rep.violations[0].condition == "consistent-verification");
  CHECK(validate(blind, Variant::S4VMinus).ok());

  CHECK(forces_classical(loop, 1, parse("p | ~p")));
  CHECK_THROWS_AS(forces_classical(loop, 1, parse("K p")), LanguageError);
}

TEST_CASE("validation catches each frame condition") {
  ClassicalModel m = one_world(Variant::S4VMinus, true);
  m.ids = {1, 2};
  m.rbox = {bit(0) | bit(1), bit(1)};
  m.rv = {bit(1), 0};
  CHECK(validate(m).ok());
  CHECK_FALSE(validate(m, Variant::S4V).ok());
  m.rv = {0, bit(0)};
  auto conds = validate(m).violations;
  REQUIRE_FALSE(conds.empty());
  CHECK(conds[0].condition == "Rv-subset-Rbox");
  m.rv = {0, 0};
  m.rbox = {bit(1), bit(1)};
  CHECK(validate(m).violations[0].condition == "Rbox-reflexive");
}

TEST_CASE("countermodel search examples") {
  SearchConfig three;
  three.max_worlds = 3;
  CHECK_FALSE(find_classical_countermodel(Variant::S4V, godel_translate(parse("~K false")), three));

  SearchConfig two;
  two.max_worlds = 2;
  const Formula gt = godel_translate(parse("~K false"));
  auto w = find_classical_countermodel(Variant::S4VMinus, gt, two);
  REQUIRE(w);
  CHECK(validate(w->model, Variant::S4VMinus).ok());
  CHECK_FALSE(forces_classical(w->model, w->world, gt));

  CHECK_FALSE(find_classical_countermodel(Variant::S4V, parse("[]p -> p"), two));
  CHECK(find_classical_countermodel(Variant::S4V, parse("V p -> p"), two));
  CHECK_THROWS_AS(find_classical_countermodel(Variant::S4V, parse("K p"), two), LanguageError);
}

TEST_CASE("frame correspondence for []A -> VA") {
  const Formula axiom = parse("[]p -> V p");
  for (std::size_t n = 1; n <= 3; ++n)
    each_frame(n, [&](Frame fr) {
      bool inside = true;
      for (std::size_t u = 0; u < n; ++u) inside = inside && (fr.rv[u] & ~fr.rbox[u]) == 0;
      CHECK(fr.validates(axiom) == inside);
    });
}

TEST_CASE("frame correspondence for ~[]V false") {
  const Formula axiom = parse("~[]V false");
  for (std::size_t n = 1; n <= 3; ++n)
    each_frame(n, [&](Frame fr) {
      for (std::size_t u = 0; u < n; ++u)
        if (fr.rv[u] & ~fr.rbox[u]) return;
      bool reach = true;
      for (std::size_t u = 0; u < n; ++u) {
        bool found = false;
        for (std::size_t v = 0; v < n; ++v)
          if ((fr.rbox[u] & bit(v)) && fr.rv[v]) found = true;
        reach = reach && found;
      }
      CHECK(fr.validates(axiom) == reach);
    });
}

TEST_CASE("enumerated models satisfy the axioms of their variant") {
  for (Variant v : {Variant::S4VMinus, Variant::S4V}) {
    std::size_t count = 0;
    enumerate_classical_models(v, 2, {"p"}, [&](const ClassicalModel& m) {
      ++count;
      CHECK(validate(m).ok());
      for (const char* ax : {"[]p -> p", "[]p -> [][]p", "[]p -> V p", "V(p -> p)"})
        CHECK(classical_truth_set(m, parse(ax)) == all_worlds(m.size()));
      if (v == Variant::S4V) CHECK(classical_truth_set(m, parse("~[]V false")) == all_worlds(m.size()));
      return true;
    });
    CHECK(count > 0);
  }
}

TEST_CASE("translated theorems have no small classical countermodel") {
  SearchConfig three;
  three.max_worlds = 3;
  for (const CorpusEntry& e : theorems(Logic::IEL)) {
    INFO(e.name);
    CHECK_FALSE(find_classical_countermodel(Variant::S4V, godel_translate(e.formula), three));
  }
  for (const CorpusEntry& e : theorems(Logic::IELMinus)) {
    INFO(e.name);
    CHECK_FALSE(find_classical_countermodel(Variant::S4VMinus, godel_translate(e.formula), three));
  }
  CHECK(find_classical_countermodel(Variant::S4V, godel_translate(parse("K p -> p")), three));
}

TEST_CASE("classical model files") {
  const char* text = R"(variant: S4V
worlds: 1 2
Rbox: 1 2
Rv: 1 2; 2 2
val: p: 1
)";
  const ClassicalModel m = parse_classical_model(text);
  CHECK(m.variant == Variant::S4V);
  CHECK(m.rbox == std::vector<WorldSet>{0b11, 0b10});
  CHECK(m.rv == std::vector<WorldSet>{0b10, 0b10});
  CHECK(m.val == std::vector<WorldSet>{0b01});
  CHECK(validate(m).ok());

  const ClassicalModel back = parse_classical_model(render_classical_model(m));
  CHECK(back.rbox == m.rbox);
  CHECK(back.rv == m.rv);
  CHECK(back.val == m.val);
  CHECK(back.variant == m.variant);

  CHECK(parse_variant("s4v-") == Variant::S4VMinus);
  CHECK_THROWS(parse_variant("S5"));
  CHECK_THROWS_AS(parse_classical_model("variant: S4V\nworlds: 1\nRv: 1 3\n"), ModelError);
}
