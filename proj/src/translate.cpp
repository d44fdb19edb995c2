#include "iel/translate.hpp"

namespace iel {

namespace {

Formula godel(const Formula& f) {
  switch (f.kind()) {
    case Kind::Atom:
      return Formula::box(f);
    case Kind::Bottom:
      return f;
    case Kind::And:
      return Formula::box(Formula::conj(godel(f.left()), godel(f.right())));
    case Kind::Or:
      return Formula::box(Formula::disj(godel(f.left()), godel(f.right())));
    case Kind::Imp:
      return Formula::box(Formula::imp(godel(f.left()), godel(f.right())));
    case Kind::Know:
      return Formula::box(Formula::ver(godel(f.body())));
    default:
      throw LanguageError("godel_translate: unexpected modal operator");
  }
}

Formula nn(Formula f) { return Formula::neg(Formula::neg(std::move(f))); }

Formula kolmogorov(const Formula& f) {
  switch (f.kind()) {
    case Kind::Atom:
    case Kind::Bottom:
      return nn(f);
    case Kind::And:
      return nn(Formula::conj(kolmogorov(f.left()), kolmogorov(f.right())));
    case Kind::Or:
      return nn(Formula::disj(kolmogorov(f.left()), kolmogorov(f.right())));
    case Kind::Imp:
      return nn(Formula::imp(kolmogorov(f.left()), kolmogorov(f.right())));
    case Kind::Know:
      return nn(Formula::know(kolmogorov(f.body())));
    default:
      throw LanguageError("kolmogorov_translate: unexpected modal operator");
  }
}

}  // namespace

Formula godel_translate(const Formula& f) {
  require_intuitionistic(f, "godel_translate");
  return godel(f);
}

Formula glivenko_translate(const Formula& f) { return nn(f); }

Formula kolmogorov_translate(const Formula& f) {
  require_intuitionistic(f, "kolmogorov_translate");
  return kolmogorov(f);
}

}  // namespace iel
