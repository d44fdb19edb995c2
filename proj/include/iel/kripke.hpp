#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "iel/formula.hpp"
#include "iel/logic.hpp"

namespace iel {

// A set of worlds, bit i standing for world index i.
using WorldSet = std::uint64_t;
inline constexpr std::size_t kMaxWorlds = 64;

inline constexpr WorldSet bit(std::size_t i) { return WorldSet{1} << i; }
inline constexpr WorldSet all_worlds(std::size_t n) {
  return n >= kMaxWorlds ? ~WorldSet{0} : bit(n) - 1;
}

class ModelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Finite intuitionistic epistemic Kripke model. Worlds are indices
// 0..size()-1; `ids` keeps the positive integer names used in files.
// `r` is stored reflexively-transitively closed and every entry of `val`
// is an R-up-set; build_model establishes both.
struct KripkeModel {
  Logic logic = Logic::IEL;
  std::vector<int> ids;
  std::vector<WorldSet> r;
  std::vector<WorldSet> e;
  std::vector<std::string> atoms;  // sorted
  std::vector<WorldSet> val;       // parallel to atoms

  std::size_t size() const { return ids.size(); }
  WorldSet all() const { return all_worlds(size()); }
  std::size_t index_of(int id) const;  // throws ModelError
  WorldSet valuation(std::string_view atom) const;
};

// Raw description of a model as written in a file.
struct ModelSpec {
  Logic logic = Logic::IEL;
  std::vector<int> worlds;
  std::vector<std::pair<int, int>> r;  // generator pairs
  std::vector<std::pair<int, int>> e;  // taken literally
  std::vector<std::pair<std::string, std::vector<int>>> val;
};

// Closes R reflexively-transitively and the valuation upward along R.
// Each (atom, world) pair added by the monotone closure is reported as a
// warning line when `warnings` is non-null.
KripkeModel build_model(const ModelSpec& spec, std::vector<std::string>* warnings = nullptr);

struct Violation {
  std::string condition;
  std::vector<int> witnesses;  // world ids
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

// Frame conditions: R reflexive and transitive, valuation monotone,
// E-monotone (uRv => E(v) within E(u)) for every logic; E within R for
// IELMinus and IEL; E(u) non-empty for IEL.
ValidationReport validate(const KripkeModel& m, Logic as);
inline ValidationReport validate(const KripkeModel& m) { return validate(m, m.logic); }

// Formula compiled against a fixed atom table for repeated evaluation.
class CompiledFormula {
 public:
  enum class Language { Intuitionistic, Classical };

  CompiledFormula(const Formula& f, const std::vector<std::string>& atoms,
                  Language language = Language::Intuitionistic);

  // Set of worlds forcing the formula. `r`, `e`, `val` are indexed as in
  // KripkeModel; for the classical language `r` is the box relation and
  // `e` the verification relation.
  WorldSet eval(std::size_t n, const WorldSet* r, const WorldSet* e, const WorldSet* val) const;
  WorldSet eval(const KripkeModel& m) const {
    return eval(m.size(), m.r.data(), m.e.data(), m.val.data());
  }

 private:
  struct Op {
    Kind kind;
    std::int32_t a = -1;  // operand slot, or atom index for Atom (-1: unknown atom)
    std::int32_t b = -1;
  };
  std::vector<Op> ops_;
  Language language_;
};

// Set of worlds of m forcing f.
WorldSet truth_set(const KripkeModel& m, const Formula& f);
bool forces(const KripkeModel& m, int world_id, const Formula& f);
bool holds_in_model(const KripkeModel& m, const Formula& f);

// A model together with a world refuting the query.
struct Countermodel {
  KripkeModel model;
  int world = 0;  // world id
};

// Fresh root x0 below every world, x0 R x and x0 E x for all x (x0
// included), forcing no atom.
KripkeModel add_root(const KripkeModel& m);

// Disjoint union (second model's worlds renumbered after the first's) plus
// a fresh root related by R and E to every world.
KripkeModel join_with_root(const KripkeModel& m1, const KripkeModel& m2);

// The four small reference models "M1".."M4".
KripkeModel builtin_model(std::string_view name);

// Line-oriented text format:
//   logic: IEL | IEL- | INTK
//   worlds: 1 2 3
//   R: 1 2; 1 3
//   E: 1 2; 2 2
//   val: p: 3
// `#` starts a comment.
struct LoadedModel {
  KripkeModel model;
  std::vector<std::string> warnings;
};
LoadedModel parse_model(std::string_view text);
std::string render_model(const KripkeModel& m);
std::string model_to_dot(const KripkeModel& m);

}  // namespace iel
