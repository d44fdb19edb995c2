#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "iel/formula.hpp"

namespace iel {

// Syntax error carrying the byte offset of the offending token and the
// set of tokens that would have been accepted there.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected, std::string found);

  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
  std::string found_;
};

// Grammar (loosest binding first):
//   formula := imp
//   imp     := or ("->" imp)? | or "<->" or
//   or      := and ("|" and)*
//   and     := unary ("&" unary)*
//   unary   := ("~" | "K" | "[]" | "V") unary | atom | "false" | "(" formula ")"
//   atom    := [a-z][a-z0-9_]*
// Unicode aliases: ¬ ∧ ∨ → ↔ ⊥ □.
Formula parse(std::string_view text);

// Minimal-parenthesis ASCII rendering; parse(render(f)) == f.
std::string render(const Formula& f);

}  // namespace iel
