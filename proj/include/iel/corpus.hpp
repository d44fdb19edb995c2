#pragma once

#include <string>
#include <vector>

#include "iel/formula.hpp"
#include "iel/kripke.hpp"
#include "iel/logic.hpp"

namespace iel {

struct CorpusEntry {
  std::string name;
  Formula formula;
};

// Theorems of each logic, instantiated at atoms p, q.
const std::vector<CorpusEntry>& theorems(Logic logic);

struct NonTheorem {
  std::string name;
  Logic logic;
  Formula formula;
};

const std::vector<NonTheorem>& non_theorems();

// Classical epistemic (S5) validities; their double negations are IEL
// theorems.
const std::vector<CorpusEntry>& s5_theorems();

// Int_K models separating adjacent levels of the truth-condition
// hierarchy: `holds` is true at every world, `fails` is refuted at world 1.
struct SeparatingModel {
  std::string name;
  KripkeModel model;
  Formula holds;
  Formula fails;
};

const std::vector<SeparatingModel>& hierarchy_separations();

}  // namespace iel
