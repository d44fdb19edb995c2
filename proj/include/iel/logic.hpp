#pragma once

#include <cstdint>
#include <string_view>

namespace iel {

// Ordered by axiom-set inclusion: IntK < IELMinus < IEL.
enum class Logic : std::uint8_t { IntK = 0, IELMinus = 1, IEL = 2 };

constexpr bool operator<(Logic a, Logic b) {
  return static_cast<std::uint8_t>(a) < static_cast<std::uint8_t>(b);
}
constexpr bool operator<=(Logic a, Logic b) { return !(b < a); }

// "INTK", "IEL-", "IEL"
std::string_view to_string(Logic logic);

// Accepts the file spellings and CLI spellings, case-insensitively:
// intk, iel-, ielminus, iel. Throws std::invalid_argument otherwise.
Logic parse_logic(std::string_view text);

constexpr Logic kAllLogics[] = {Logic::IntK, Logic::IELMinus, Logic::IEL};

}  // namespace iel
