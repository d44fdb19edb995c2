#pragma once

// Test-only helpers: formula generators, random models, and a naive
// forcing evaluator kept independent of the bitset implementation.

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "iel/formula.hpp"
#include "iel/kripke.hpp"
#include "iel/logic.hpp"

namespace iel::testing {

// Every formula of size 1..max_size over atoms, false, K, &, |, ->.
inline std::vector<std::vector<Formula>> formulas_by_size(std::size_t max_size,
                                                         const std::vector<std::string>& atoms = {"p", "q"},
                                                         bool with_k = true) {
  std::vector<std::vector<Formula>> by_size(max_size + 1);
  for (const auto& a : atoms) by_size[1].push_back(Formula::atom(a));
  by_size[1].push_back(Formula::bottom());
  for (std::size_t n = 2; n <= max_size; ++n) {
    if (with_k)
      for (const Formula& f : by_size[n - 1]) by_size[n].push_back(Formula::know(f));
    for (std::size_t i = 1; i + 1 < n; ++i) {
      const std::size_t j = n - 1 - i;
      for (const Formula& l : by_size[i])
        for (const Formula& r : by_size[j]) {
          by_size[n].push_back(Formula::conj(l, r));
          by_size[n].push_back(Formula::disj(l, r));
          by_size[n].push_back(Formula::imp(l, r));
        }
    }
  }
  return by_size;
}

class FormulaGen {
 public:
  explicit FormulaGen(std::uint32_t seed, std::vector<std::string> atoms = {"p", "q"})
      : rng_(seed), atoms_(std::move(atoms)) {}

  // Intuitionistic formula of depth at most `depth`.
  Formula operator()(int depth) {
    const int choice = depth <= 0 ? pick(4) : pick(9);
    switch (choice) {
      case 0:
      case 1:
      case 2:
        return Formula::atom(atoms_[pick(static_cast<int>(atoms_.size()))]);
      case 3:
        return Formula::bottom();
      case 4:
        return Formula::conj((*this)(depth - 1), (*this)(depth - 1));
      case 5:
        return Formula::disj((*this)(depth - 1), (*this)(depth - 1));
      case 6:
      case 7:
        return Formula::imp((*this)(depth - 1), (*this)(depth - 1));
      default:
        return Formula::know((*this)(depth - 1));
    }
  }

  // Any of the eight constructors, for syntax round trips.
  Formula any(int depth) {
    if (depth <= 0) return pick(5) ? Formula::atom(atoms_[pick(static_cast<int>(atoms_.size()))]) : Formula::bottom();
    switch (pick(8)) {
      case 0:
        return Formula::conj(any(depth - 1), any(depth - 1));
      case 1:
        return Formula::disj(any(depth - 1), any(depth - 1));
      case 2:
        return Formula::imp(any(depth - 1), any(depth - 1));
      case 3:
        return Formula::know(any(depth - 1));
      case 4:
        return Formula::box(any(depth - 1));
      case 5:
        return Formula::ver(any(depth - 1));
      case 6:
        return Formula::neg(any(depth - 1));
      default:
        return any(0);
    }
  }

  std::mt19937& rng() { return rng_; }

 private:
  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }
  std::mt19937 rng_;
  std::vector<std::string> atoms_;
};

// Random model of `logic` with 1..max_worlds worlds, built to satisfy the
// frame conditions by construction.
inline KripkeModel random_model(std::mt19937& rng, Logic logic, std::size_t max_worlds,
                                const std::vector<std::string>& atoms) {
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_worlds)(rng);
  auto coin = [&](int percent) { return std::uniform_int_distribution<int>(0, 99)(rng) < percent; };
  KripkeModel m;
  m.logic = logic;
  for (std::size_t i = 0; i < n; ++i) m.ids.push_back(static_cast<int>(i) + 1);
  m.r.assign(n, 0);
  for (std::size_t u = 0; u < n; ++u) {
    m.r[u] |= bit(u);
    for (std::size_t v = 0; v < n; ++v)
      if (u != v && coin(30)) m.r[u] |= bit(v);
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t u = 0; u < n; ++u)
      if (m.r[u] & bit(k)) m.r[u] |= m.r[k];
  std::vector<WorldSet> base(n, 0);
  for (std::size_t u = 0; u < n; ++u) {
    const WorldSet pool = logic == Logic::IntK ? all_worlds(n) : m.r[u];
    for (std::size_t v = 0; v < n; ++v)
      if ((pool & bit(v)) && coin(35)) base[u] |= bit(v);
    if (logic == Logic::IEL && !base[u]) base[u] = bit(u);
  }
  m.e.assign(n, 0);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (m.r[u] & bit(v)) m.e[u] |= base[v];
  m.atoms = atoms;
  for (std::size_t a = 0; a < atoms.size(); ++a) {
    WorldSet s = 0;
    for (std::size_t u = 0; u < n; ++u)
      if (coin(40)) s |= m.r[u];
    m.val.push_back(s);
  }
  return m;
}

// Reference forcing by direct recursion over explicit relations.
class NaiveModel {
 public:
  explicit NaiveModel(const KripkeModel& m) {
    for (std::size_t u = 0; u < m.size(); ++u) {
      worlds_.push_back(m.ids[u]);
      for (std::size_t v = 0; v < m.size(); ++v) {
        if (m.r[u] & bit(v)) r_.insert({m.ids[u], m.ids[v]});
        if (m.e[u] & bit(v)) e_.insert({m.ids[u], m.ids[v]});
      }
      for (std::size_t a = 0; a < m.atoms.size(); ++a)
        if (m.val[a] & bit(u)) val_.insert({m.atoms[a], m.ids[u]});
    }
  }

  bool forces(int w, const Formula& f) const {
    switch (f.kind()) {
      case Kind::Atom:
        return val_.count({f.name(), w}) > 0;
      case Kind::Bottom:
        return false;
      case Kind::And:
        return forces(w, f.left()) && forces(w, f.right());
      case Kind::Or:
        return forces(w, f.left()) || forces(w, f.right());
      case Kind::Imp:
        for (int v : worlds_)
          if (r_.count({w, v}) && forces(v, f.left()) && !forces(v, f.right())) return false;
        return true;
      case Kind::Know:
        for (int v : worlds_)
          if (e_.count({w, v}) && !forces(v, f.body())) return false;
        return true;
      default:
        throw std::logic_error("naive forcing: bimodal formula");
    }
  }

 private:
  std::vector<int> worlds_;
  std::set<std::pair<int, int>> r_;
  std::set<std::pair<int, int>> e_;
  std::set<std::pair<std::string, int>> val_;
};

}  // namespace iel::testing
