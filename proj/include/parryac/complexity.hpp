#ifndef PARRYAC_COMPLEXITY_HPP
#define PARRYAC_COMPLEXITY_HPP

#include <cstddef>
#include <string_view>

#include "parryac/bigint.hpp"
#include "parryac/matrix.hpp"
#include "parryac/morphism.hpp"

namespace parryac {

enum class Method { ClosedForm, PrefixDifference, Sturmian };

// "closed_form", "prefix_difference", "sturmian".
std::string_view to_string(Method m) noexcept;

struct ACResult {
  BigInt n;
  unsigned value = 0;
  Method method = Method::ClosedForm;
};

// AC(n) = 1 + U_k - sum_{j=1..k} (d_j + e_j) U_{j-1}, with k from
// choose_k_nonsimple, (d) = <n>_U and (e) = <U_{k+1} - n>_U padded to k+1 places.
unsigned ac_nonsimple(const Morphism& m, const BigInt& n);
// Same, with a caller-chosen k. Throws IndexError unless n <= |w^(k)|.
unsigned ac_nonsimple(const Morphism& m, const BigInt& n, std::size_t k);

// sum_{i=0..N-1} (M^{2i+1} - M^{2i}), which equals (M + I)^{-1} (M^{2N} - I).
Mat2 alternating_power_sum(const Morphism& m, std::size_t stages);

// Simple family with q > 1. Throws UnsupportedConstruction for q = 1.
unsigned ac_simple(const Morphism& m, const BigInt& n);

// Dispatches on family; the simple q = 1 case is the constant 2.
// Throws DomainError for n = 0.
ACResult ac(const Morphism& m, const BigInt& n);

// 1 + |w[0,n)|_B - |v[0,n)|_B, evaluated from the stage-based B counts.
unsigned ac_via_prefix_counts(const Morphism& m, const BigInt& n);

// Maximum of AC over all n.
unsigned max_ac(const Morphism& m);

// Optimal balance bound, max_ac - 1.
unsigned balance_bound(const Morphism& m);

}  // namespace parryac

#endif  // PARRYAC_COMPLEXITY_HPP
