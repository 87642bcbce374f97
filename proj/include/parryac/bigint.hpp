#ifndef PARRYAC_BIGINT_HPP
#define PARRYAC_BIGINT_HPP

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace parryac {

// Signed so that residuals such as n - |w^(N)| can be checked for sign
// instead of wrapping.
using BigInt = boost::multiprecision::cpp_int;

// Accepts an optional leading '+', then one or more decimal digits.
BigInt parse_decimal(std::string_view text);

std::string to_decimal(const BigInt& value);

}  // namespace parryac

#endif  // PARRYAC_BIGINT_HPP
