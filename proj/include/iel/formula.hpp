#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace iel {

// The eight constructors of the formula language. Negation and
// equivalence are sugar: ~A is Imp(A, Bottom), A <-> B is
// And(Imp(A, B), Imp(B, A)).
enum class Kind : std::uint8_t { Atom, Bottom, And, Or, Imp, Know, Box, Ver };

// Immutable, structurally shared formula handle. Copies are cheap.
class Formula {
 public:
  static Formula atom(std::string name);
  static Formula bottom();
  static Formula conj(Formula left, Formula right);
  static Formula disj(Formula left, Formula right);
  static Formula imp(Formula left, Formula right);
  static Formula know(Formula body);
  static Formula box(Formula body);
  static Formula ver(Formula body);

  static Formula neg(Formula body) { return imp(std::move(body), bottom()); }
  static Formula iff(const Formula& left, const Formula& right) {
    return conj(imp(left, right), imp(right, left));
  }

  Kind kind() const;
  bool is(Kind k) const { return kind() == k; }
  bool is_binary() const;
  bool is_unary() const;
  bool is_negation() const { return is(Kind::Imp) && right().is(Kind::Bottom); }
  // And(Imp(A,B), Imp(B,A)) shape.
  bool is_iff() const;

  const std::string& name() const;
  const Formula& left() const;
  const Formula& right() const;
  const Formula& body() const;

  std::size_t size() const;
  std::size_t hash() const;
  std::size_t depth() const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }
  // Total structural order, used for deterministic containers.
  friend bool operator<(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula make(Kind kind, std::string name, const Formula* l, const Formula* r);

  std::shared_ptr<const Node> node_;
};

struct Formula::Node {
  Kind kind;
  std::string name;
  std::vector<Formula> kids;
  std::size_t size = 1;
  std::size_t depth = 0;
  std::size_t hash = 0;
};

inline Kind Formula::kind() const { return node_->kind; }
inline std::size_t Formula::size() const { return node_->size; }
inline std::size_t Formula::hash() const { return node_->hash; }
inline std::size_t Formula::depth() const { return node_->depth; }

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

// Which modal vocabulary a formula uses.
enum class Sublanguage { Propositional, Intuitionistic, Bimodal, Mixed };

Sublanguage classify(const Formula& f);
bool contains_kind(const Formula& f, Kind k);
bool is_intuitionistic(const Formula& f);  // no [] or V
bool is_bimodal(const Formula& f);         // no K

// Raised when an operation receives a formula from the wrong sublanguage.
class LanguageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

void require_intuitionistic(const Formula& f, std::string_view operation);
void require_bimodal(const Formula& f, std::string_view operation);

// Sorted, duplicate-free atom names.
std::vector<std::string> atoms_of(const Formula& f);

// Distinct subformulas, children before parents. The last entry is f.
std::vector<Formula> subformulas(const Formula& f);

// Uniform substitution of atoms by formulas.
template <typename Map>
Formula substitute(const Formula& f, const Map& sigma) {
  switch (f.kind()) {
    case Kind::Atom: {
      auto it = sigma.find(f.name());
      return it == sigma.end() ? f : it->second;
    }
    case Kind::Bottom:
      return f;
    case Kind::And:
      return Formula::conj(substitute(f.left(), sigma), substitute(f.right(), sigma));
    case Kind::Or:
      return Formula::disj(substitute(f.left(), sigma), substitute(f.right(), sigma));
    case Kind::Imp:
      return Formula::imp(substitute(f.left(), sigma), substitute(f.right(), sigma));
    case Kind::Know:
      return Formula::know(substitute(f.body(), sigma));
    case Kind::Box:
      return Formula::box(substitute(f.body(), sigma));
    case Kind::Ver:
      return Formula::ver(substitute(f.body(), sigma));
  }
  return f;
}

}  // namespace iel

template <>
struct std::hash<iel::Formula> {
  std::size_t operator()(const iel::Formula& f) const noexcept { return f.hash(); }
};
