#pragma once

#include <chrono>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "iel/formula.hpp"
#include "iel/kripke.hpp"
#include "iel/logic.hpp"

namespace iel {

struct SearchConfig {
  std::size_t max_worlds = 4;
  // Atoms the enumerated valuations range over; defaults to the query's.
  std::optional<std::vector<std::string>> atoms;
  std::optional<std::chrono::milliseconds> time_budget;
  // Prover resource bound: saturated labels created before giving up.
  std::size_t max_labels = std::size_t{1} << 20;
};

struct EnumerationOptions {
  // Only models in which world 1 reaches every world via R and E. Every
  // refutation has a rooted witness (take the generated submodel), so this
  // prunes the search without losing countermodels.
  bool rooted_only = false;
};

// Called once per model; return false to stop the enumeration. The model
// reference is only valid during the call.
using ModelVisitor = std::function<bool(const KripkeModel&)>;

// Every model over worlds 1..n passing validate(logic), each closed
// structure (R, E, valuation) exactly once. Returns false if the visitor
// stopped early.
bool enumerate_models(Logic logic, std::size_t n, const std::vector<std::string>& atoms,
                      const ModelVisitor& visit, EnumerationOptions options = {});

std::size_t count_models(Logic logic, std::size_t n, const std::vector<std::string>& atoms,
                         EnumerationOptions options = {});

// All reflexive-transitive relations on n labelled points.
const std::vector<std::vector<WorldSet>>& preorders(std::size_t n);

// Brute-force refutation search over models with 1..max_worlds worlds.
// An empty result means "nothing found within bounds", not validity.
std::optional<Countermodel> find_countermodel(Logic logic, const Formula& f,
                                              const SearchConfig& cfg = {});

}  // namespace iel
