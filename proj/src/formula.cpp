#include "iel/formula.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace iel {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Formula Formula::make(Kind kind, std::string name, const Formula* l, const Formula* r) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->name = std::move(name);
  std::size_t h = mix(0, static_cast<std::size_t>(kind) + 1);
  if (kind == Kind::Atom) h = mix(h, std::hash<std::string>{}(node->name));
  if (l) {
    node->kids.push_back(*l);
    node->size += l->size();
    node->depth = std::max(node->depth, l->depth() + 1);
    h = mix(h, l->hash());
  }
  if (r) {
    node->kids.push_back(*r);
    node->size += r->size();
    node->depth = std::max(node->depth, r->depth() + 1);
    h = mix(h, r->hash());
  }
  node->hash = h;
  return Formula(std::move(node));
}

Formula Formula::atom(std::string name) { return make(Kind::Atom, std::move(name), nullptr, nullptr); }

Formula Formula::bottom() {
  static const Formula bot = make(Kind::Bottom, {}, nullptr, nullptr);
  return bot;
}

Formula Formula::conj(Formula left, Formula right) { return make(Kind::And, {}, &left, &right); }
Formula Formula::disj(Formula left, Formula right) { return make(Kind::Or, {}, &left, &right); }
Formula Formula::imp(Formula left, Formula right) { return make(Kind::Imp, {}, &left, &right); }
Formula Formula::know(Formula body) { return make(Kind::Know, {}, &body, nullptr); }
Formula Formula::box(Formula body) { return make(Kind::Box, {}, &body, nullptr); }
Formula Formula::ver(Formula body) { return make(Kind::Ver, {}, &body, nullptr); }

bool Formula::is_binary() const {
  return is(Kind::And) || is(Kind::Or) || is(Kind::Imp);
}

bool Formula::is_unary() const {
  return is(Kind::Know) || is(Kind::Box) || is(Kind::Ver);
}

bool Formula::is_iff() const {
  if (!is(Kind::And)) return false;
  const Formula& l = left();
  const Formula& r = right();
  return l.is(Kind::Imp) && r.is(Kind::Imp) && !l.is_negation() && !r.is_negation() &&
         l.left() == r.right() && l.right() == r.left();
}

const std::string& Formula::name() const {
  if (!is(Kind::Atom)) throw std::logic_error("name() on a non-atom");
  return node_->name;
}

const Formula& Formula::left() const {
  if (!is_binary()) throw std::logic_error("left() on a non-binary formula");
  return node_->kids[0];
}

const Formula& Formula::right() const {
  if (!is_binary()) throw std::logic_error("right() on a non-binary formula");
  return node_->kids[1];
}

const Formula& Formula::body() const {
  if (!is_unary()) throw std::logic_error("body() on a non-modal formula");
  return node_->kids[0];
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.size() != b.size() || a.kind() != b.kind()) return false;
  if (a.kind() == Kind::Atom) return a.node_->name == b.node_->name;
  const auto& ka = a.node_->kids;
  const auto& kb = b.node_->kids;
  for (std::size_t i = 0; i < ka.size(); ++i)
    if (!(ka[i] == kb[i])) return false;
  return true;
}

bool operator<(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return false;
  if (a.kind() != b.kind()) return a.kind() < b.kind();
  if (a.kind() == Kind::Atom) return a.node_->name < b.node_->name;
  const auto& ka = a.node_->kids;
  const auto& kb = b.node_->kids;
  for (std::size_t i = 0; i < ka.size(); ++i) {
    if (ka[i] < kb[i]) return true;
    if (kb[i] < ka[i]) return false;
  }
  return false;
}

bool contains_kind(const Formula& f, Kind k) {
  if (f.is(k)) return true;
  if (f.is_binary()) return contains_kind(f.left(), k) || contains_kind(f.right(), k);
  if (f.is_unary()) return contains_kind(f.body(), k);
  return false;
}

bool is_intuitionistic(const Formula& f) {
  return !contains_kind(f, Kind::Box) && !contains_kind(f, Kind::Ver);
}

bool is_bimodal(const Formula& f) { return !contains_kind(f, Kind::Know); }

Sublanguage classify(const Formula& f) {
  const bool k = contains_kind(f, Kind::Know);
  const bool bv = !is_intuitionistic(f);
  if (k && bv) return Sublanguage::Mixed;
  if (k) return Sublanguage::Intuitionistic;
  if (bv) return Sublanguage::Bimodal;
  return Sublanguage::Propositional;
}

void require_intuitionistic(const Formula& f, std::string_view operation) {
  if (!is_intuitionistic(f))
    throw LanguageError(std::string(operation) + ": expected a formula without [] or V");
}

void require_bimodal(const Formula& f, std::string_view operation) {
  if (!is_bimodal(f)) throw LanguageError(std::string(operation) + ": expected a formula without K");
}

std::vector<std::string> atoms_of(const Formula& f) {
  std::set<std::string> names;
  std::vector<const Formula*> stack{&f};
  while (!stack.empty()) {
    const Formula* g = stack.back();
    stack.pop_back();
    if (g->is(Kind::Atom)) {
      names.insert(g->name());
    } else if (g->is_binary()) {
      stack.push_back(&g->left());
      stack.push_back(&g->right());
    } else if (g->is_unary()) {
      stack.push_back(&g->body());
    }
  }
  return {names.begin(), names.end()};
}

namespace {

void collect(const Formula& f, std::unordered_set<Formula>& seen, std::vector<Formula>& out) {
  if (seen.count(f)) return;
  if (f.is_binary()) {
    collect(f.left(), seen, out);
    collect(f.right(), seen, out);
  } else if (f.is_unary()) {
    collect(f.body(), seen, out);
  }
  seen.insert(f);
  out.push_back(f);
}

}  // namespace

std::vector<Formula> subformulas(const Formula& f) {
  std::unordered_set<Formula> seen;
  std::vector<Formula> out;
  collect(f, seen, out);
  return out;
}

}  // namespace iel
