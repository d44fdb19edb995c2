#pragma once

// Helpers shared by the line-oriented model and proof file readers.

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace iel::detail {

std::string_view trim(std::string_view s);
std::string lower(std::string_view s);

struct Line {
  std::size_t number;  // 1-based
  std::string_view text;
};

// Non-empty lines with `#` comments removed.
std::vector<Line> content_lines(std::string_view text);

// Splits "key: rest" at the first colon.
bool split_key(std::string_view line, std::string& key, std::string_view& rest);

int parse_world_id(std::string_view token, std::size_t line);
std::vector<int> parse_world_list(std::string_view text, std::size_t line);
// "1 2; 1 3"
std::vector<std::pair<int, int>> parse_pairs(std::string_view text, std::size_t line);
// "p: 1 3"
std::pair<std::string, std::vector<int>> parse_val(std::string_view text, std::size_t line);

[[noreturn]] void format_error(std::size_t line, const std::string& message);

}  // namespace iel::detail
