#include "rootnum/integer.hpp"

#include <cctype>
#include <limits>

namespace rootnum {

std::optional<Integer> parse_integer(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) return std::nullopt;
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) return std::nullopt;
  }
  Integer out;
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  if (out.set_str(digits, 10) != 0) return std::nullopt;
  return out;
}

std::optional<std::int64_t> to_int64(const Integer& n) {
  static const Integer lo(std::to_string(std::numeric_limits<std::int64_t>::min()));
  static const Integer hi(std::to_string(std::numeric_limits<std::int64_t>::max()));
  if (n < lo || n > hi) return std::nullopt;
  return std::stoll(n.get_str());
}

}  // namespace rootnum
