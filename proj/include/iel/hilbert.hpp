#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "iel/formula.hpp"
#include "iel/logic.hpp"

namespace iel {

enum class AxiomId { A1, A2, A3, A4, A5, A6, A7, A8, A9, DIST, CO, IR };

struct AxiomSchema {
  AxiomId id;
  // Metavariables are the uppercase atoms A, B, C.
  Formula pattern;
};

const std::vector<AxiomSchema>& axiom_schemas();
const AxiomSchema& axiom_schema(AxiomId id);
std::string_view to_string(AxiomId id);
std::optional<AxiomId> parse_axiom_id(std::string_view name);  // case-insensitive

// IR only in IEL, CO in IEL- and IEL, the rest everywhere.
bool axiom_available(AxiomId id, Logic logic);

using Substitution = std::map<std::string, Formula>;

std::optional<Substitution> match_axiom(const Formula& f, AxiomId id);
// First schema (in declaration order) that f instantiates.
std::optional<AxiomId> match_any_axiom(const Formula& f);

enum class Rule { Axiom, MP, Nec, Ipc, Premise };

struct Justification {
  Rule rule = Rule::Ipc;
  AxiomId axiom = AxiomId::A1;  // Axiom
  std::size_t i = 0;            // MP minor / Nec source, 1-based
  std::size_t j = 0;            // MP major (line_j = line_i -> this line)

  static Justification by_axiom(AxiomId id) { return {Rule::Axiom, id, 0, 0}; }
  static Justification by_mp(std::size_t minor, std::size_t major) {
    return {Rule::MP, AxiomId::A1, minor, major};
  }
  static Justification by_nec(std::size_t source) { return {Rule::Nec, AxiomId::A1, source, 0}; }
  static Justification by_ipc() { return {Rule::Ipc, AxiomId::A1, 0, 0}; }
  static Justification by_premise() { return {Rule::Premise, AxiomId::A1, 0, 0}; }
};

std::string to_string(const Justification& j);

struct ProofLine {
  Formula formula;
  Justification why;
};

// A derivation of `goal` from `premises` (usually none). Nec may only be
// applied to lines that do not depend on a premise, so a proof from
// premises P1..Pn yields |- P1 & ... & Pn -> goal.
struct HilbertProof {
  Logic logic = Logic::IEL;
  Formula goal = Formula::bottom();
  std::vector<Formula> premises;
  std::vector<ProofLine> lines;
};

struct ProofError {
  std::size_t line = 0;  // 1-based; 0 when the proof as a whole is malformed
  std::string reason;
};

struct CheckResult {
  std::optional<ProofError> error;
  bool ok() const { return !error; }
};

CheckResult check_proof(const HilbertProof& proof);

// Whether f is a substitution instance of an intuitionistic propositional
// tautology, treating maximal K-subformulas as atoms.
bool is_ipc_instance(const Formula& f);

class ProofFormatError : public std::runtime_error {
 public:
  ProofFormatError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// logic: IEL
// goal: ~K false
// premise: ...            (optional, repeatable)
// 1. K false -> ~~false | axiom IR
// 2. ... | mp 1 2 / nec 1 / ipc / premise
HilbertProof parse_proof(std::string_view text);
std::string render_proof(const HilbertProof& proof);

struct NamedProof {
  std::string name;
  HilbertProof proof;
};

const std::vector<NamedProof>& proof_library();
const HilbertProof& library_proof(std::string_view name);  // throws std::out_of_range

// Replaces every Nec step by a CO instance and MP. Requires IEL- or IEL.
HilbertProof eliminate_necessitation(const HilbertProof& proof);

// Deduction theorem: from a proof of B using premise A, a proof of A -> B
// without it. `premise` indexes proof.premises.
HilbertProof discharge_premise(const HilbertProof& proof, std::size_t premise);

}  // namespace iel
