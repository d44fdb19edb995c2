#include "iel/corpus.hpp"

#include "iel/syntax.hpp"

namespace iel {

namespace {

std::vector<CorpusEntry> entries(std::initializer_list<std::pair<const char*, const char*>> items) {
  std::vector<CorpusEntry> out;
  for (auto [name, text] : items) out.push_back({name, parse(text)});
  return out;
}

}  // namespace

const std::vector<CorpusEntry>& theorems(Logic logic) {
  static const std::vector<CorpusEntry> iel = entries({
      {"distribution", "K(p -> q) -> (K p -> K q)"},
      {"co-reflection", "p -> K p"},
      {"intuitionistic-reflection", "K p -> ~~p"},
      {"ielth-1", "~K false"},
      {"ielth-2", "~(K p & ~p)"},
      {"ielth-3", "~p -> ~K p"},
      {"ielth-4", "~~(K p -> p)"},
      {"distconj", "K(p & q) <-> K p & K q"},
      {"positive-introspection", "K p -> K K p"},
      {"negative-introspection", "~K p -> K ~K p"},
      {"fknref", "K ~p -> ~p"},
      {"kcomm", "~K p <-> K ~p"},
      {"nka=na", "~K p <-> ~p"},
      {"vfbl", "~(~K p & ~K ~p)"},
      {"knowability", "p -> ~~K p"},
      {"knowability-nn", "~~(p -> K p)"},
  });
  static const std::vector<CorpusEntry> iel_minus = entries({
      {"distribution", "K(p -> q) -> (K p -> K q)"},
      {"co-reflection", "p -> K p"},
      {"distconj", "K(p & q) <-> K p & K q"},
      {"positive-introspection", "K p -> K K p"},
      {"negative-introspection", "~K p -> K ~K p"},
      {"unknown-unproved", "~K p -> ~p"},
      {"vfbl", "~(~K p & ~K ~p)"},
      {"knowability", "p -> ~~K p"},
      {"knowability-nn", "~~(p -> K p)"},
      {"k-disjunction", "K p | K q -> K(p | q)"},
  });
  static const std::vector<CorpusEntry> intk = entries({
      {"distribution", "K(p -> q) -> (K p -> K q)"},
      {"k-tautology", "K(p -> p)"},
      {"distconj", "K(p & q) <-> K p & K q"},
      {"k-disjunction", "K p | K q -> K(p | q)"},
      {"k-monotone", "K(p & q) -> K(q | p)"},
      {"top-implies-mid", "(K p -> p) -> (K p -> ~~p)"},
      {"mid-implies-bot", "(~false -> ~K false) -> ~K false"},
      {"mid-cycle", "(K p -> ~~p) <-> ~(K p & ~p)"},
  });
  switch (logic) {
    case Logic::IntK:
      return intk;
    case Logic::IELMinus:
      return iel_minus;
    case Logic::IEL:
      return iel;
  }
  return iel;
}

const std::vector<NonTheorem>& non_theorems() {
  static const std::vector<NonTheorem> list = [] {
    std::vector<NonTheorem> out;
    auto add = [&](const char* name, Logic logic, const char* text) { out.push_back({name, logic, parse(text)}); };
    add("reflection", Logic::IEL, "K p -> p");
    add("reflection", Logic::IELMinus, "K p -> p");
    add("k-disjunction-split", Logic::IEL, "K(p | q) -> K p | K q");
    add("k-disjunction-split", Logic::IELMinus, "K(p | q) -> K p | K q");
    add("dosen-converse", Logic::IEL, "~~p -> K p");
    add("ielth-1", Logic::IELMinus, "~K false");
    add("co-reflection", Logic::IntK, "p -> K p");
    add("intuitionistic-reflection", Logic::IntK, "K p -> ~~p");
    add("ielth-1", Logic::IntK, "~K false");
    return out;
  }();
  return list;
}

const std::vector<CorpusEntry>& s5_theorems() {
  static const std::vector<CorpusEntry> list = entries({
      {"t", "K p -> p"},
      {"4", "K p -> K K p"},
      {"5", "~K p -> K ~K p"},
      {"excluded-middle", "p | ~p"},
      {"double-negation", "~~p -> p"},
      {"k", "K(p -> q) -> (K p -> K q)"},
      {"peirce", "((p -> q) -> p) -> p"},
      {"d", "~K false"},
      {"k-excluded-middle", "K p | ~K p"},
      {"k-negation", "K ~p -> ~K p"},
  });
  return list;
}

const std::vector<SeparatingModel>& hierarchy_separations() {
  static const std::vector<SeparatingModel> list = [] {
    std::vector<SeparatingModel> out;
    KripkeModel m2 = builtin_model("M2");
    m2.logic = Logic::IntK;
    out.push_back({"mid-not-top", m2, parse("K p -> ~~p"), parse("K p -> p")});
    ModelSpec spec;
    spec.logic = Logic::IntK;
    spec.worlds = {1, 2};
    spec.e = {{1, 2}, {2, 2}};
    spec.val = {{"p", {2}}};
    out.push_back({"bot-not-mid", build_model(spec), parse("~K false"), parse("K p -> ~~p")});
    return out;
  }();
  return list;
}

}  // namespace iel
