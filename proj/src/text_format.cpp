#include "text_format.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "iel/kripke.hpp"

namespace iel::detail {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    if (std::size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty()) out.push_back({number, line});
  }
  return out;
}

bool split_key(std::string_view line, std::string& key, std::string_view& rest) {
  std::size_t colon = line.find(':');
  if (colon == std::string_view::npos) return false;
  key = lower(trim(line.substr(0, colon)));
  rest = trim(line.substr(colon + 1));
  return true;
}

void format_error(std::size_t line, const std::string& message) {
  std::ostringstream out;
  out << "line " << line << ": " << message;
  throw ModelError(out.str());
}

int parse_world_id(std::string_view token, std::size_t line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() || value <= 0)
    format_error(line, "world ids are positive integers, got '" + std::string(token) + "'");
  return value;
}

std::vector<int> parse_world_list(std::string_view text, std::size_t line) {
  std::vector<int> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) out.push_back(parse_world_id(text.substr(i, j - i), line));
    i = j;
  }
  return out;
}

std::vector<std::pair<int, int>> parse_pairs(std::string_view text, std::size_t line) {
  std::vector<std::pair<int, int>> out;
  while (true) {
    std::size_t semi = text.find(';');
    std::string_view chunk = trim(text.substr(0, semi));
    if (!chunk.empty()) {
      std::vector<int> ids = parse_world_list(chunk, line);
      if (ids.size() != 2) format_error(line, "expected a pair 'u v', got '" + std::string(chunk) + "'");
      out.emplace_back(ids[0], ids[1]);
    }
    if (semi == std::string_view::npos) break;
    text.remove_prefix(semi + 1);
  }
  return out;
}

std::pair<std::string, std::vector<int>> parse_val(std::string_view text, std::size_t line) {
  std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) format_error(line, "expected 'atom: worlds'");
  std::string atom(trim(text.substr(0, colon)));
  bool ok = !atom.empty() && atom[0] >= 'a' && atom[0] <= 'z';
  for (char c : atom)
    ok = ok && (std::islower(static_cast<unsigned char>(c)) || std::isdigit(static_cast<unsigned char>(c)) || c == '_');
  if (!ok || atom == "false") format_error(line, "bad atom name '" + atom + "'");
  return {atom, parse_world_list(text.substr(colon + 1), line)};
}

}  // namespace iel::detail
