#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "iel/formula.hpp"
#include "iel/kripke.hpp"
#include "iel/logic.hpp"
#include "iel/search.hpp"

namespace iel {

// Closure trace of a successful proof: every candidate root label was
// closed, and the trace lists why.
struct Certificate {
  std::size_t labels = 0;            // saturated labels created
  std::size_t root_candidates = 0;   // labels refuting the query locally
  std::size_t elimination_rounds = 0;
  std::vector<std::string> trace;
};

enum class VerdictKind { Valid, Invalid, Unknown };

struct Verdict {
  VerdictKind kind = VerdictKind::Unknown;
  Certificate certificate;                   // Valid
  std::optional<Countermodel> countermodel;  // Invalid; re-checked before return
  std::string reason;                        // Unknown

  bool valid() const { return kind == VerdictKind::Valid; }
  bool invalid() const { return kind == VerdictKind::Invalid; }
  bool unknown() const { return kind == VerdictKind::Unknown; }
};

std::string_view to_string(VerdictKind kind);

// Decides validity of an intuitionistic-language formula in `logic`.
//
// The search is a signed tableau whose labels are saturated sets over the
// subformulas of f: each label fixes the truth of every subformula,
// consistently with the local rules. A label's F(A -> B) and F(K A)
// entries (and, for IEL, its seriality obligation) demand successor
// labels, which are generated by saturating the inherited T-part plus the
// new signed formulas. Labels are cached globally, so a demand met by an
// existing label is blocked rather than re-expanded, and the label space is
// finite. Labels with an unmet demand are closed until a fixpoint is
// reached; f is valid iff every label falsifying it closes. Otherwise the
// open labels reachable from an open root form a countermodel
// (R = inclusion of T-parts, E from the K-parts), which is validated and
// evaluated before it is returned.
//
// Only `max_labels` and `time_budget` of `limits` are consulted; exceeding
// either yields Unknown.
Verdict decide(Logic logic, const Formula& f, const SearchConfig& limits = {});

// Intuitionistic propositional validity; f must not contain K, [] or V.
// Same verdict as decide(Logic::IELMinus, f).
Verdict decide_ipc(const Formula& f, const SearchConfig& limits = {});

}  // namespace iel
