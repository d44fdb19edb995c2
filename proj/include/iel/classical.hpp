#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "iel/formula.hpp"
#include "iel/kripke.hpp"
#include "iel/search.hpp"

namespace iel {

// S4V-: S4 for [], K for V, []A -> VA. S4V adds ~[]V false.
enum class Variant { S4VMinus, S4V };

std::string_view to_string(Variant v);  // "S4V-", "S4V"
Variant parse_variant(std::string_view text);

// Classical bimodal model. Valuations are unconstrained.
struct ClassicalModel {
  Variant variant = Variant::S4V;
  std::vector<int> ids;
  std::vector<WorldSet> rbox;
  std::vector<WorldSet> rv;
  std::vector<std::string> atoms;  // sorted
  std::vector<WorldSet> val;

  std::size_t size() const { return ids.size(); }
  std::size_t index_of(int id) const;  // throws ModelError
};

// Rbox reflexive and transitive, Rv within Rbox, and for S4V every world
// Rbox-reaches a world with a non-empty Rv row.
ValidationReport validate(const ClassicalModel& m, Variant as);
inline ValidationReport validate(const ClassicalModel& m) { return validate(m, m.variant); }

WorldSet classical_truth_set(const ClassicalModel& m, const Formula& f);
bool forces_classical(const ClassicalModel& m, int world_id, const Formula& f);

using ClassicalVisitor = std::function<bool(const ClassicalModel&)>;

// Every validated model over worlds 1..n; with `rooted_only`, only those
// whose world 1 Rbox-reaches every world.
bool enumerate_classical_models(Variant variant, std::size_t n, const std::vector<std::string>& atoms,
                                const ClassicalVisitor& visit, EnumerationOptions options = {});

struct ClassicalCountermodel {
  ClassicalModel model;
  int world = 0;
};

// Brute-force refutation search up to cfg.max_worlds; none is inconclusive.
std::optional<ClassicalCountermodel> find_classical_countermodel(Variant variant, const Formula& f,
                                                                 const SearchConfig& cfg = {});

// variant: S4V | S4V-
// worlds: 1 2
// Rbox: 1 2          (closed reflexively and transitively)
// Rv: 1 2; 2 2
// val: p: 2
ClassicalModel parse_classical_model(std::string_view text);
std::string render_classical_model(const ClassicalModel& m);

}  // namespace iel
