#include "parryac/bigint.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "parryac/errors.hpp"

namespace parryac {

BigInt parse_decimal(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
  const bool all_digits = std::all_of(digits.begin(), digits.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
  if (digits.empty() || !all_digits) {
    throw ParameterError("not a nonnegative decimal integer: '" + std::string(text) + "'");
  }
  return BigInt(std::string(digits));
}

std::string to_decimal(const BigInt& value) { return value.str(); }

}  // namespace parryac
