#include "iel/syntax.hpp"

#include <cctype>
#include <sstream>

namespace iel {

namespace {

std::string describe(std::size_t offset, const std::vector<std::string>& expected,
                     const std::string& found) {
  std::ostringstream out;
  out << "syntax error at byte " << offset << ": expected ";
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i) out << (i + 1 == expected.size() ? " or " : ", ");
    out << expected[i];
  }
  out << ", found " << found;
  return out.str();
}

enum class Tok { End, LParen, RParen, Not, And, Or, Imp, Iff, Box, Know, Ver, False, Atom };

struct Token {
  Tok kind = Tok::End;
  std::size_t offset = 0;
  std::string text;
};

struct Alias {
  std::string_view spelling;
  Tok kind;
};

// Longest spellings first: "<->" before "->".
constexpr Alias kSymbols[] = {
    {"<->", Tok::Iff},          {"->", Tok::Imp},           {"[]", Tok::Box},
    {"\xE2\x86\x94", Tok::Iff},  // ↔
    {"\xE2\x86\x92", Tok::Imp},  // →
    {"\xE2\x88\xA7", Tok::And},  // ∧
    {"\xE2\x88\xA8", Tok::Or},   // ∨
    {"\xE2\x8A\xA5", Tok::False},  // ⊥
    {"\xE2\x96\xA1", Tok::Box},  // □
    {"\xC2\xAC", Tok::Not},      // ¬
    {"(", Tok::LParen},         {")", Tok::RParen},         {"~", Tok::Not},
    {"&", Tok::And},            {"|", Tok::Or},             {"K", Tok::Know},
    {"V", Tok::Ver},
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) { advance(); }

  Formula parse_all() {
    Formula f = parse_imp();
    if (tok_.kind != Tok::End) fail({"'->'", "'<->'", "'|'", "'&'", "end of input"});
    return f;
  }

 private:
  Formula parse_imp() {
    Formula lhs = parse_or();
    if (tok_.kind == Tok::Imp) {
      advance();
      return Formula::imp(lhs, parse_imp());
    }
    if (tok_.kind == Tok::Iff) {
      advance();
      return Formula::iff(lhs, parse_or());
    }
    return lhs;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (tok_.kind == Tok::Or) {
      advance();
      f = Formula::disj(f, parse_and());
    }
    return f;
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (tok_.kind == Tok::And) {
      advance();
      f = Formula::conj(f, parse_unary());
    }
    return f;
  }

  Formula parse_unary() {
    switch (tok_.kind) {
      case Tok::Not:
        advance();
        return Formula::neg(parse_unary());
      case Tok::Know:
        advance();
        return Formula::know(parse_unary());
      case Tok::Box:
        advance();
        return Formula::box(parse_unary());
      case Tok::Ver:
        advance();
        return Formula::ver(parse_unary());
      case Tok::False:
        advance();
        return Formula::bottom();
      case Tok::Atom: {
        Formula a = Formula::atom(tok_.text);
        advance();
        return a;
      }
      case Tok::LParen: {
        advance();
        Formula f = parse_imp();
        if (tok_.kind != Tok::RParen) fail({"')'", "'->'", "'<->'", "'|'", "'&'"});
        advance();
        return f;
      }
      default:
        fail({"atom", "'false'", "'('", "'~'", "'K'", "'[]'", "'V'"});
    }
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    std::string found = tok_.kind == Tok::End ? "end of input" : "'" + tok_.text + "'";
    throw ParseError(tok_.offset, std::move(expected), std::move(found));
  }

  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    tok_ = Token{};
    tok_.offset = pos_;
    if (pos_ >= text_.size()) return;
    const char c = text_[pos_];
    if (c >= 'a' && c <= 'z') {
      std::size_t end = pos_ + 1;
      while (end < text_.size() && (std::islower(static_cast<unsigned char>(text_[end])) ||
                                    std::isdigit(static_cast<unsigned char>(text_[end])) ||
                                    text_[end] == '_'))
        ++end;
      tok_.text = std::string(text_.substr(pos_, end - pos_));
      tok_.kind = tok_.text == "false" ? Tok::False : Tok::Atom;
      pos_ = end;
      return;
    }
    for (const Alias& a : kSymbols) {
      if (text_.substr(pos_, a.spelling.size()) == a.spelling) {
        tok_.kind = a.kind;
        tok_.text = std::string(a.spelling);
        pos_ += a.spelling.size();
        return;
      }
    }
    // Report the whole UTF-8 sequence of an unknown character.
    std::size_t len = 1;
    const auto uc = static_cast<unsigned char>(c);
    if (uc >= 0xF0) len = 4;
    else if (uc >= 0xE0) len = 3;
    else if (uc >= 0xC0) len = 2;
    tok_.text = std::string(text_.substr(pos_, len));
    throw ParseError(pos_, {"a formula token"}, "'" + tok_.text + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Token tok_;
};

// Binding strength of the outermost construct as printed.
int level(const Formula& f) {
  if (f.is_iff()) return 1;
  switch (f.kind()) {
    case Kind::Imp:
      return f.is_negation() ? 4 : 1;
    case Kind::Or:
      return 2;
    case Kind::And:
      return 3;
    default:
      return 4;
  }
}

void emit(const Formula& f, int min_level, std::string& out) {
  const bool parens = level(f) < min_level;
  if (parens) out += '(';
  if (f.is_iff()) {
    emit(f.left().left(), 2, out);
    out += " <-> ";
    emit(f.left().right(), 2, out);
  } else {
    switch (f.kind()) {
      case Kind::Atom:
        out += f.name();
        break;
      case Kind::Bottom:
        out += "false";
        break;
      case Kind::And:
        emit(f.left(), 3, out);
        out += " & ";
        emit(f.right(), 4, out);
        break;
      case Kind::Or:
        emit(f.left(), 2, out);
        out += " | ";
        emit(f.right(), 3, out);
        break;
      case Kind::Imp:
        if (f.is_negation()) {
          out += '~';
          emit(f.left(), 4, out);
        } else {
          emit(f.left(), 2, out);
          out += " -> ";
          emit(f.right(), 1, out);
        }
        break;
      case Kind::Know:
        out += "K ";
        emit(f.body(), 4, out);
        break;
      case Kind::Box:
        out += "[]";
        emit(f.body(), 4, out);
        break;
      case Kind::Ver:
        out += 'V';
        emit(f.body(), 4, out);
        break;
    }
  }
  if (parens) out += ')';
}

}  // namespace

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected, std::string found)
    : std::runtime_error(describe(offset, expected, found)),
      offset_(offset),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

Formula parse(std::string_view text) { return Parser(text).parse_all(); }

std::string render(const Formula& f) {
  std::string out;
  emit(f, 1, out);
  return out;
}

}  // namespace iel
