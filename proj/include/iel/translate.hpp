#pragma once

#include "iel/formula.hpp"

namespace iel {

// "Box every subformula": atoms p become []p, connectives are boxed, and
// K A becomes []V(tr A). Bottom stays bare. Input must not contain [] or V.
Formula godel_translate(const Formula& f);

// ~~f.
Formula glivenko_translate(const Formula& f);

// Double negation in front of every subformula, K included:
// k(K A) = ~~K(k A). Input must not contain [] or V.
Formula kolmogorov_translate(const Formula& f);

}  // namespace iel
