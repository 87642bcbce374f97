#ifndef PARRYAC_NUMERATION_HPP
#define PARRYAC_NUMERATION_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "parryac/bigint.hpp"
#include "parryac/morphism.hpp"

namespace parryac {

// U_k = |phi^k(A)| = (1,0) M^k (1,1)^T.
BigInt u_value(const Morphism& m, std::size_t k);

// |phi^k(A)|_B = (1,0) M^k (0,1)^T.
BigInt u_b_count(const Morphism& m, std::size_t k);

// Smallest N with n < U_{N+1}. For n >= 1 this is the N with U_N <= n < U_{N+1}.
std::size_t greedy_top_index(const Morphism& m, const BigInt& n);

// Digits of a U-representation, most significant first: (d_N, ..., d_1, d_0).
struct UDigits {
  std::vector<std::uint32_t> digits;

  std::size_t places() const noexcept { return digits.size(); }
  // Coefficient of U_j; zero beyond the stored places.
  std::uint32_t at_power(std::size_t j) const noexcept {
    return j < digits.size() ? digits[digits.size() - 1 - j] : 0;
  }

  friend bool operator==(const UDigits&, const UDigits&) = default;
};

// Greedy normal U-representation. Uses N = greedy_top_index(n) places unless
// min_places asks for more, in which case the result is left-padded with zeros.
// n = 0 yields a single zero digit.
UDigits normal_u_rep(const Morphism& m, const BigInt& n,
                     std::optional<std::size_t> min_places = std::nullopt);

// sum_j d_j U_j; accepts non-normal digit strings.
BigInt u_rep_value(const Morphism& m, const UDigits& d);

struct PowerBlock {
  std::size_t power;       // j in phi^j(A)
  std::uint32_t exponent;  // d_j

  friend bool operator==(const PowerBlock&, const PowerBlock&) = default;
};

// ((N, d_N), ..., (0, d_0)) such that phi^N(A)^{d_N} ... A^{d_0} is the
// length-n prefix of u. Zero exponents are kept; n = 0 gives an empty list.
std::vector<PowerBlock> prefix_decomposition(const Morphism& m, const BigInt& n);

// sum_j d_j (1,0) M^j (0,1)^T over the digits of d.
BigInt digits_b_count(const Morphism& m, const UDigits& d);

// |u[0, n)|_B via the decomposition above.
BigInt prefix_b_count(const Morphism& m, const BigInt& n);

// Non-simple only: |u[0, n)|_B = sum_{j >= 1} d_j U_{j-1}, since every image
// contains exactly one B. Throws FamilyMismatch for simple morphisms.
BigInt prefix_b_count_nonsimple(const Morphism& m, const BigInt& n);

}  // namespace parryac

#endif  // PARRYAC_NUMERATION_HPP
