#include "parryac/numeration.hpp"

#include <string>

#include "parryac/errors.hpp"

namespace parryac {

namespace {

const BigInt& row_a_count_b(const Morphism& m, std::size_t k) { return m.power(k)(0, 1); }

void require_nonnegative(const BigInt& n) {
  if (n < 0) throw ArgumentError("negative argument: " + n.str());
}

}  // namespace

BigInt u_value(const Morphism& m, std::size_t k) {
  const Mat2& pk = m.power(k);
  return pk(0, 0) + pk(0, 1);
}

BigInt u_b_count(const Morphism& m, std::size_t k) { return row_a_count_b(m, k); }

std::size_t greedy_top_index(const Morphism& m, const BigInt& n) {
  require_nonnegative(n);
  std::size_t top = 0;
  while (n >= u_value(m, top + 1)) ++top;
  return top;
}

UDigits normal_u_rep(const Morphism& m, const BigInt& n, std::optional<std::size_t> min_places) {
  std::size_t top = greedy_top_index(m, n);
  if (min_places && *min_places > top + 1) top = *min_places - 1;

  UDigits out;
  out.digits.reserve(top + 1);
  BigInt residual = n;
  for (std::size_t j = top + 1; j-- > 0;) {
    const BigInt uj = u_value(m, j);
    const BigInt digit = residual / uj;
    residual -= digit * uj;
    out.digits.push_back(static_cast<std::uint32_t>(digit));
  }
  return out;
}

BigInt u_rep_value(const Morphism& m, const UDigits& d) {
  BigInt total = 0;
  for (std::size_t j = 0; j < d.places(); ++j) {
    if (const auto dj = d.at_power(j); dj != 0) total += u_value(m, j) * dj;
  }
  return total;
}

std::vector<PowerBlock> prefix_decomposition(const Morphism& m, const BigInt& n) {
  if (n == 0) return {};
  const UDigits d = normal_u_rep(m, n);
  std::vector<PowerBlock> blocks;
  blocks.reserve(d.places());
  for (std::size_t j = d.places(); j-- > 0;) blocks.push_back({j, d.at_power(j)});
  return blocks;
}

BigInt digits_b_count(const Morphism& m, const UDigits& d) {
  BigInt total = 0;
  for (std::size_t j = 0; j < d.places(); ++j) {
    if (const auto dj = d.at_power(j); dj != 0) total += row_a_count_b(m, j) * dj;
  }
  return total;
}

BigInt prefix_b_count(const Morphism& m, const BigInt& n) {
  return digits_b_count(m, normal_u_rep(m, n));
}

BigInt prefix_b_count_nonsimple(const Morphism& m, const BigInt& n) {
  if (m.is_simple()) throw FamilyMismatch("prefix_b_count_nonsimple needs a non-simple morphism");
  const UDigits d = normal_u_rep(m, n);
  BigInt total = 0;
  for (std::size_t j = 1; j < d.places(); ++j) total += u_value(m, j - 1) * d.at_power(j);
  return total;
}

}  // namespace parryac
