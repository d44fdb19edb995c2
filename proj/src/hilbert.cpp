#include "iel/hilbert.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "iel/prover.hpp"
#include "iel/syntax.hpp"
#include "text_format.hpp"

namespace iel {

namespace {

Formula mv(const char* name) { return Formula::atom(name); }

std::vector<AxiomSchema> make_schemas() {
  const Formula a = mv("A");
  const Formula b = mv("B");
  const Formula c = mv("C");
  using F = Formula;
  return {
      {AxiomId::A1, F::imp(a, F::imp(b, a))},
      {AxiomId::A2, F::imp(F::imp(a, F::imp(b, c)), F::imp(F::imp(a, b), F::imp(a, c)))},
      {AxiomId::A3, F::imp(F::conj(a, b), a)},
      {AxiomId::A4, F::imp(F::conj(a, b), b)},
      {AxiomId::A5, F::imp(a, F::imp(b, F::conj(a, b)))},
      {AxiomId::A6, F::imp(a, F::disj(a, b))},
      {AxiomId::A7, F::imp(b, F::disj(a, b))},
      {AxiomId::A8, F::imp(F::imp(a, c), F::imp(F::imp(b, c), F::imp(F::disj(a, b), c)))},
      {AxiomId::A9, F::imp(F::bottom(), a)},
      {AxiomId::DIST, F::imp(F::know(F::imp(a, b)), F::imp(F::know(a), F::know(b)))},
      {AxiomId::CO, F::imp(a, F::know(a))},
      {AxiomId::IR, F::imp(F::know(a), F::neg(F::neg(a)))},
  };
}

bool match(const Formula& pattern, const Formula& f, Substitution& sigma) {
  if (pattern.is(Kind::Atom)) {
    auto [it, fresh] = sigma.emplace(pattern.name(), f);
    return fresh || it->second == f;
  }
  if (pattern.kind() != f.kind()) return false;
  if (pattern.is_binary()) return match(pattern.left(), f.left(), sigma) && match(pattern.right(), f.right(), sigma);
  if (pattern.is_unary()) return match(pattern.body(), f.body(), sigma);
  return true;  // Bottom
}

Formula abstract_knowledge(const Formula& f, std::map<Formula, Formula>& names) {
  switch (f.kind()) {
    case Kind::Know: {
      auto it = names.find(f);
      if (it == names.end())
        it = names.emplace(f, Formula::atom("_k" + std::to_string(names.size()))).first;
      return it->second;
    }
    case Kind::And:
      return Formula::conj(abstract_knowledge(f.left(), names), abstract_knowledge(f.right(), names));
    case Kind::Or:
      return Formula::disj(abstract_knowledge(f.left(), names), abstract_knowledge(f.right(), names));
    case Kind::Imp:
      return Formula::imp(abstract_knowledge(f.left(), names), abstract_knowledge(f.right(), names));
    default:
      return f;
  }
}

ProofError line_error(std::size_t line, std::string reason) { return ProofError{line, std::move(reason)}; }

bool valid_ref(std::size_t ref, std::size_t current) { return ref >= 1 && ref < current; }

}  // namespace

const std::vector<AxiomSchema>& axiom_schemas() {
  static const std::vector<AxiomSchema> schemas = make_schemas();
  return schemas;
}

const AxiomSchema& axiom_schema(AxiomId id) { return axiom_schemas().at(static_cast<std::size_t>(id)); }

std::string_view to_string(AxiomId id) {
  static constexpr std::string_view names[] = {"A1", "A2", "A3", "A4", "A5", "A6",
                                               "A7", "A8", "A9", "DIST", "CO", "IR"};
  return names[static_cast<std::size_t>(id)];
}

std::optional<AxiomId> parse_axiom_id(std::string_view name) {
  std::string upper(name);
  for (char& ch : upper) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  for (const AxiomSchema& s : axiom_schemas())
    if (to_string(s.id) == upper) return s.id;
  return std::nullopt;
}

bool axiom_available(AxiomId id, Logic logic) {
  switch (id) {
    case AxiomId::IR:
      return logic == Logic::IEL;
    case AxiomId::CO:
      return logic != Logic::IntK;
    default:
      return true;
  }
}

std::optional<Substitution> match_axiom(const Formula& f, AxiomId id) {
  Substitution sigma;
  if (!match(axiom_schema(id).pattern, f, sigma)) return std::nullopt;
  return sigma;
}

std::optional<AxiomId> match_any_axiom(const Formula& f) {
  for (const AxiomSchema& s : axiom_schemas())
    if (match_axiom(f, s.id)) return s.id;
  return std::nullopt;
}

std::string to_string(const Justification& j) {
  switch (j.rule) {
    case Rule::Axiom:
      return "axiom " + std::string(to_string(j.axiom));
    case Rule::MP:
      return "mp " + std::to_string(j.i) + " " + std::to_string(j.j);
    case Rule::Nec:
      return "nec " + std::to_string(j.i);
    case Rule::Ipc:
      return "ipc";
    case Rule::Premise:
      return "premise";
  }
  return "?";
}

bool is_ipc_instance(const Formula& f) {
  if (!is_intuitionistic(f)) return false;
  std::map<Formula, Formula> names;
  const Formula skeleton = abstract_knowledge(f, names);
  return decide_ipc(skeleton).valid();
}

CheckResult check_proof(const HilbertProof& proof) {
  CheckResult result;
  if (proof.lines.empty()) {
    result.error = line_error(0, "proof has no lines");
    return result;
  }
  std::vector<bool> depends(proof.lines.size() + 1, false);
  for (std::size_t k = 1; k <= proof.lines.size(); ++k) {
    const ProofLine& line = proof.lines[k - 1];
    const Formula& f = line.formula;
    const Justification& why = line.why;
    auto fail = [&](std::string reason) {
      result.error = line_error(k, std::move(reason));
      return result;
    };
    if (!is_intuitionistic(f)) return fail("formula uses [] or V");
    switch (why.rule) {
      case Rule::Axiom:
        if (!axiom_available(why.axiom, proof.logic))
          return fail("axiom " + std::string(to_string(why.axiom)) + " is not available in " +
                      std::string(to_string(proof.logic)));
        if (!match_axiom(f, why.axiom))
          return fail("not an instance of axiom " + std::string(to_string(why.axiom)));
        break;
      case Rule::MP:
        if (!valid_ref(why.i, k) || !valid_ref(why.j, k)) return fail("mp must cite earlier lines");
        if (proof.lines[why.j - 1].formula != Formula::imp(proof.lines[why.i - 1].formula, f))
          return fail("line " + std::to_string(why.j) + " is not line " + std::to_string(why.i) +
                      " -> this line");
        depends[k] = depends[why.i] || depends[why.j];
        break;
      case Rule::Nec:
        if (!valid_ref(why.i, k)) return fail("nec must cite an earlier line");
        if (f != Formula::know(proof.lines[why.i - 1].formula))
          return fail("not K applied to line " + std::to_string(why.i));
        if (depends[why.i]) return fail("nec applied to a line that depends on a premise");
        break;
      case Rule::Ipc:
        if (!is_ipc_instance(f)) return fail("not an intuitionistic propositional tautology instance");
        break;
      case Rule::Premise:
        if (std::find(proof.premises.begin(), proof.premises.end(), f) == proof.premises.end())
          return fail("not one of the premises");
        depends[k] = true;
        break;
    }
  }
  if (proof.lines.back().formula != proof.goal)
    result.error = line_error(proof.lines.size(), "last line is not the goal " + render(proof.goal));
  return result;
}

ProofFormatError::ProofFormatError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

std::size_t parse_index(std::string_view token, std::size_t line) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || value == 0)
    throw ProofFormatError(line, "bad line reference '" + std::string(token) + "'");
  return value;
}

std::vector<std::string_view> words(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

Justification parse_justification(std::string_view text, std::size_t line) {
  const auto w = words(text);
  if (w.empty()) throw ProofFormatError(line, "missing justification");
  const std::string rule = detail::lower(w[0]);
  auto arity = [&](std::size_t n) {
    if (w.size() != n + 1) throw ProofFormatError(line, "'" + rule + "' takes " + std::to_string(n) + " argument(s)");
  };
  if (rule == "axiom") {
    arity(1);
    auto id = parse_axiom_id(w[1]);
    if (!id) throw ProofFormatError(line, "unknown axiom '" + std::string(w[1]) + "'");
    return Justification::by_axiom(*id);
  }
  if (rule == "mp") {
    arity(2);
    return Justification::by_mp(parse_index(w[1], line), parse_index(w[2], line));
  }
  if (rule == "nec") {
    arity(1);
    return Justification::by_nec(parse_index(w[1], line));
  }
  if (rule == "ipc") {
    arity(0);
    return Justification::by_ipc();
  }
  if (rule == "premise") {
    arity(0);
    return Justification::by_premise();
  }
  throw ProofFormatError(line, "unknown justification '" + std::string(w[0]) + "'");
}

Formula parse_at(std::string_view text, std::size_t line) {
  try {
    return parse(detail::trim(text));
  } catch (const ParseError& err) {
    throw ProofFormatError(line, err.what());
  }
}

}  // namespace

HilbertProof parse_proof(std::string_view text) {
  HilbertProof proof;
  bool have_logic = false;
  bool have_goal = false;
  for (const detail::Line& line : detail::content_lines(text)) {
    const std::string_view body = detail::trim(line.text);
    if (std::isdigit(static_cast<unsigned char>(body.front()))) {
      const std::size_t dot = body.find('.');
      if (dot == std::string_view::npos) throw ProofFormatError(line.number, "expected 'N. formula | justification'");
      const std::size_t n = parse_index(body.substr(0, dot), line.number);
      if (n != proof.lines.size() + 1)
        throw ProofFormatError(line.number, "expected line number " + std::to_string(proof.lines.size() + 1));
      const std::string_view rest = body.substr(dot + 1);
      const std::size_t bar = rest.rfind('|');
      if (bar == std::string_view::npos) throw ProofFormatError(line.number, "missing '| justification'");
      proof.lines.push_back({parse_at(rest.substr(0, bar), line.number),
                             parse_justification(rest.substr(bar + 1), line.number)});
      continue;
    }
    std::string key;
    std::string_view rest;
    if (!detail::split_key(body, key, rest)) throw ProofFormatError(line.number, "expected 'key: value'");
    if (key == "logic") {
      try {
        proof.logic = parse_logic(rest);
      } catch (const std::invalid_argument& err) {
        throw ProofFormatError(line.number, err.what());
      }
      have_logic = true;
    } else if (key == "goal") {
      proof.goal = parse_at(rest, line.number);
      have_goal = true;
    } else if (key == "premise") {
      proof.premises.push_back(parse_at(rest, line.number));
    } else {
      throw ProofFormatError(line.number, "unknown section '" + key + "'");
    }
  }
  if (!have_logic) throw ProofFormatError(0, "missing 'logic:' line");
  if (!have_goal) throw ProofFormatError(0, "missing 'goal:' line");
  return proof;
}

std::string render_proof(const HilbertProof& proof) {
  std::ostringstream out;
  out << "logic: " << to_string(proof.logic) << "\n";
  out << "goal: " << render(proof.goal) << "\n";
  for (const Formula& p : proof.premises) out << "premise: " << render(p) << "\n";
  for (std::size_t k = 0; k < proof.lines.size(); ++k)
    out << k + 1 << ". " << render(proof.lines[k].formula) << " | " << to_string(proof.lines[k].why) << "\n";
  return out.str();
}

HilbertProof eliminate_necessitation(const HilbertProof& proof) {
  if (proof.logic == Logic::IntK) throw std::invalid_argument("eliminate_necessitation: Int_K has no co-reflection");
  HilbertProof out = proof;
  out.lines.clear();
  std::vector<std::size_t> moved(proof.lines.size() + 1, 0);
  for (std::size_t k = 1; k <= proof.lines.size(); ++k) {
    ProofLine line = proof.lines[k - 1];
    switch (line.why.rule) {
      case Rule::MP:
        line.why = Justification::by_mp(moved.at(line.why.i), moved.at(line.why.j));
        break;
      case Rule::Nec: {
        const std::size_t source = moved.at(line.why.i);
        const Formula& body = out.lines.at(source - 1).formula;
        out.lines.push_back({Formula::imp(body, line.formula), Justification::by_axiom(AxiomId::CO)});
        line.why = Justification::by_mp(source, out.lines.size());
        break;
      }
      default:
        break;
    }
    out.lines.push_back(line);
    moved[k] = out.lines.size();
  }
  return out;
}

HilbertProof discharge_premise(const HilbertProof& proof, std::size_t premise) {
  if (premise >= proof.premises.size()) throw std::out_of_range("discharge_premise: no such premise");
  if (auto check = check_proof(proof); !check.ok())
    throw std::invalid_argument("discharge_premise: input proof fails at line " +
                                std::to_string(check.error->line) + ": " + check.error->reason);
  const Formula a = proof.premises[premise];
  HilbertProof out;
  out.logic = proof.logic;
  out.goal = Formula::imp(a, proof.goal);
  out.premises = proof.premises;
  out.premises.erase(out.premises.begin() + static_cast<std::ptrdiff_t>(premise));

  const std::size_t n = proof.lines.size();
  std::vector<std::size_t> copy(n + 1, 0);     // line holding phi_k itself
  std::vector<std::size_t> implied(n + 1, 0);  // line holding a -> phi_k
  std::vector<bool> depends(n + 1, false);
  auto emit = [&](Formula f, Justification why) {
    out.lines.push_back({std::move(f), why});
    return out.lines.size();
  };
  using F = Formula;
  for (std::size_t k = 1; k <= n; ++k) {
    const ProofLine& line = proof.lines[k - 1];
    const Formula& phi = line.formula;
    const Justification& why = line.why;
    if (why.rule == Rule::Premise && phi == a) {
      depends[k] = true;
      const F aa = F::imp(a, a);
      const std::size_t l1 = emit(F::imp(a, F::imp(aa, a)), Justification::by_axiom(AxiomId::A1));
      const std::size_t l2 = emit(F::imp(F::imp(a, F::imp(aa, a)), F::imp(F::imp(a, aa), aa)),
                                  Justification::by_axiom(AxiomId::A2));
      const std::size_t l3 = emit(F::imp(F::imp(a, aa), aa), Justification::by_mp(l1, l2));
      const std::size_t l4 = emit(F::imp(a, aa), Justification::by_axiom(AxiomId::A1));
      implied[k] = emit(aa, Justification::by_mp(l4, l3));
    } else if (why.rule == Rule::MP && (depends[why.i] || depends[why.j])) {
      depends[k] = true;
      const Formula& minor = proof.lines[why.i - 1].formula;
      const std::size_t l1 = emit(F::imp(F::imp(a, F::imp(minor, phi)), F::imp(F::imp(a, minor), F::imp(a, phi))),
                                  Justification::by_axiom(AxiomId::A2));
      const std::size_t l2 = emit(F::imp(F::imp(a, minor), F::imp(a, phi)), Justification::by_mp(implied[why.j], l1));
      implied[k] = emit(F::imp(a, phi), Justification::by_mp(implied[why.i], l2));
    } else {
      Justification moved = why;
      if (why.rule == Rule::MP) moved = Justification::by_mp(copy[why.i], copy[why.j]);
      if (why.rule == Rule::Nec) moved = Justification::by_nec(copy[why.i]);
      copy[k] = emit(phi, moved);
      const std::size_t weak = emit(F::imp(phi, F::imp(a, phi)), Justification::by_axiom(AxiomId::A1));
      implied[k] = emit(F::imp(a, phi), Justification::by_mp(copy[k], weak));
    }
  }
  return out;
}

namespace {

struct LibrarySource {
  const char* name;
  const char* text;
};

// clang-format off
constexpr LibrarySource kLibrary[] = {
{"distconj-l2r", R"(logic: IEL-
goal: K(p & q) -> K p & K q
1. p & q -> p | axiom A3
2. K(p & q -> p) | nec 1
3. K(p & q -> p) -> (K(p & q) -> K p) | axiom DIST
4. K(p & q) -> K p | mp 2 3
5. p & q -> q | axiom A4
6. K(p & q -> q) | nec 5
7. K(p & q -> q) -> (K(p & q) -> K q) | axiom DIST
8. K(p & q) -> K q | mp 6 7
9. (K(p & q) -> K p) -> ((K(p & q) -> K q) -> (K(p & q) -> K p & K q)) | ipc
10. (K(p & q) -> K q) -> (K(p & q) -> K p & K q) | mp 4 9
11. K(p & q) -> K p & K q | mp 8 10
)"},
{"distconj-r2l", R"(logic: IEL-
goal: K p & K q -> K(p & q)
1. p -> (q -> p & q) | axiom A5
2. K(p -> (q -> p & q)) | nec 1
3. K(p -> (q -> p & q)) -> (K p -> K(q -> p & q)) | axiom DIST
4. K p -> K(q -> p & q) | mp 2 3
5. K(q -> p & q) -> (K q -> K(p & q)) | axiom DIST
6. (K p -> K(q -> p & q)) -> ((K(q -> p & q) -> (K q -> K(p & q))) -> (K p & K q -> K(p & q))) | ipc
7. (K(q -> p & q) -> (K q -> K(p & q))) -> (K p & K q -> K(p & q)) | mp 4 6
8. K p & K q -> K(p & q) | mp 5 7
)"},
{"ielth-1", R"(logic: IEL
goal: ~K false
1. K false -> ~~false | axiom IR
2. (K false -> ~~false) -> ((~~false -> false) -> (K false -> false)) | ipc
3. (~~false -> false) -> (K false -> false) | mp 1 2
4. ~~false -> false | ipc
5. K false -> false | mp 4 3
)"},
{"ielth-2", R"(logic: IEL
goal: ~(K p & ~p)
1. K p -> ~~p | axiom IR
2. (K p -> ~~p) -> ~(K p & ~p) | ipc
3. ~(K p & ~p) | mp 1 2
)"},
{"ielth-3", R"(logic: IEL
goal: ~p -> ~K p
1. K p -> ~~p | axiom IR
2. (K p -> ~~p) -> (~~~p -> ~K p) | ipc
3. ~~~p -> ~K p | mp 1 2
4. (~~~p -> ~K p) -> (~p -> ~K p) | ipc
5. ~p -> ~K p | mp 3 4
)"},
{"ielth-4", R"(logic: IEL
goal: ~~(K p -> p)
1. K p -> ~~p | axiom IR
2. (K p -> ~~p) -> (~~K p -> ~~p) | ipc
3. ~~K p -> ~~p | mp 1 2
4. (~~K p -> ~~p) -> ~~(K p -> p) | ipc
5. ~~(K p -> p) | mp 3 4
)"},
{"introspection-pos", R"(logic: IEL-
goal: K p -> K K p
1. K p -> K K p | axiom CO
)"},
{"introspection-neg", R"(logic: IEL-
goal: ~K p -> K ~K p
1. ~K p -> K ~K p | axiom CO
)"},
{"nec-demo", R"(logic: IEL-
goal: K(p -> (q -> p))
1. p -> (q -> p) | axiom A1
2. K(p -> (q -> p)) | nec 1
)"},
{"fknref", R"(logic: IEL
goal: K ~p -> ~p
1. K ~p -> ~~~p | axiom IR
2. (K ~p -> ~~~p) -> (K ~p -> ~p) | ipc
3. K ~p -> ~p | mp 1 2
)"},
{"kcomm", R"(logic: IEL
goal: ~K p <-> K ~p
1. p -> K p | axiom CO
2. (p -> K p) -> (~K p -> ~p) | ipc
3. ~K p -> ~p | mp 1 2
4. ~p -> K ~p | axiom CO
5. (~K p -> ~p) -> ((~p -> K ~p) -> (~K p -> K ~p)) | ipc
6. (~p -> K ~p) -> (~K p -> K ~p) | mp 3 5
7. ~K p -> K ~p | mp 4 6
8. K ~p -> ~~~p | axiom IR
9. K p -> ~~p | axiom IR
10. (K ~p -> ~~~p) -> ((K p -> ~~p) -> (K ~p -> ~K p)) | ipc
11. (K p -> ~~p) -> (K ~p -> ~K p) | mp 8 10
12. K ~p -> ~K p | mp 9 11
13. (~K p -> K ~p) -> ((K ~p -> ~K p) -> (~K p <-> K ~p)) | ipc
14. (K ~p -> ~K p) -> (~K p <-> K ~p) | mp 7 13
15. ~K p <-> K ~p | mp 12 14
)"},
{"nka=na", R"(logic: IEL
goal: ~K p <-> ~p
1. p -> K p | axiom CO
2. K p -> ~~p | axiom IR
3. (p -> K p) -> ((K p -> ~~p) -> (~K p <-> ~p)) | ipc
4. (K p -> ~~p) -> (~K p <-> ~p) | mp 1 3
5. ~K p <-> ~p | mp 2 4
)"},
{"vfbl", R"(logic: IEL
goal: ~(~K p & ~K ~p)
1. p -> K p | axiom CO
2. ~p -> K ~p | axiom CO
3. (p -> K p) -> ((~p -> K ~p) -> ~(~K p & ~K ~p)) | ipc
4. (~p -> K ~p) -> ~(~K p & ~K ~p) | mp 1 3
5. ~(~K p & ~K ~p) | mp 2 4
)"},
{"knowability", R"(logic: IEL-
goal: p -> ~~K p
1. p -> K p | axiom CO
2. (p -> K p) -> (p -> ~~K p) | ipc
3. p -> ~~K p | mp 1 2
)"},
{"knowability-nn", R"(logic: IEL-
goal: ~~(p -> K p)
1. p -> K p | axiom CO
2. (p -> K p) -> ~~(p -> K p) | ipc
3. ~~(p -> K p) | mp 1 2
)"},
{"hierarchy-top-to-mid", R"(logic: IntK
goal: K p -> ~~p
premise: K p -> p
1. K p -> p | premise
2. (K p -> p) -> (K p -> ~~p) | ipc
3. K p -> ~~p | mp 1 2
)"},
{"hierarchy-mid-to-bot", R"(logic: IntK
goal: ~K false
premise: ~false -> ~K false
1. ~false -> ~K false | premise
2. ~false | ipc
3. ~K false | mp 2 1
)"},
{"hierarchy-mid-1", R"(logic: IntK
goal: K p -> ~~p
premise: ~(K p & ~p)
1. ~(K p & ~p) | premise
2. ~(K p & ~p) -> (K p -> ~~p) | ipc
3. K p -> ~~p | mp 1 2
)"},
{"hierarchy-mid-2", R"(logic: IntK
goal: ~~(K p -> p)
premise: K p -> ~~p
1. K p -> ~~p | premise
2. (K p -> ~~p) -> ~~(K p -> p) | ipc
3. ~~(K p -> p) | mp 1 2
)"},
{"hierarchy-mid-3", R"(logic: IntK
goal: ~p -> ~K p
premise: ~~(K p -> p)
1. ~~(K p -> p) | premise
2. ~~(K p -> p) -> (~p -> ~K p) | ipc
3. ~p -> ~K p | mp 1 2
)"},
{"hierarchy-mid-4", R"(logic: IntK
goal: ~(K p & ~p)
premise: ~p -> ~K p
1. ~p -> ~K p | premise
2. (~p -> ~K p) -> ~(K p & ~p) | ipc
3. ~(K p & ~p) | mp 1 2
)"},
};
// clang-format on

}  // namespace

const std::vector<NamedProof>& proof_library() {
  static const std::vector<NamedProof> library = [] {
    std::vector<NamedProof> out;
    for (const LibrarySource& src : kLibrary) out.push_back({src.name, parse_proof(src.text)});
    return out;
  }();
  return library;
}

const HilbertProof& library_proof(std::string_view name) {
  for (const NamedProof& entry : proof_library())
    if (entry.name == name) return entry.proof;
  throw std::out_of_range("no library proof named '" + std::string(name) + "'");
}

}  // namespace iel
