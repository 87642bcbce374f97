#include "parryac/complexity.hpp"

#include <limits>
#include <stdexcept>
#include <string>

#include "parryac/errors.hpp"
#include "parryac/extremal.hpp"
#include "parryac/numeration.hpp"

namespace parryac {

namespace {

void require_positive(const BigInt& n) {
  if (n < 1) {
    throw DomainError("AC(n) is defined for positive integers n only, got " + n.str());
  }
}

unsigned checked_value(const BigInt& v) {
  if (v < 1 || v > std::numeric_limits<unsigned>::max()) {
    throw std::logic_error("Abelian complexity evaluated to " + v.str());
  }
  return static_cast<unsigned>(v);
}

BigInt checked_residual(const BigInt& n, const BigInt& stage_length) {
  BigInt r = n - stage_length;
  if (r < 0) throw std::logic_error("negative residual n - |stage| = " + r.str());
  return r;
}

}  // namespace

std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::ClosedForm:
      return "closed_form";
    case Method::PrefixDifference:
      return "prefix_difference";
    case Method::Sturmian:
      return "sturmian";
  }
  return "unknown";
}

unsigned ac_nonsimple(const Morphism& m, const BigInt& n) {
  if (m.is_simple()) throw FamilyMismatch("ac_nonsimple needs a non-simple morphism");
  require_positive(n);
  return ac_nonsimple(m, n, choose_k_nonsimple(m, n));
}

unsigned ac_nonsimple(const Morphism& m, const BigInt& n, std::size_t k) {
  if (m.is_simple()) throw FamilyMismatch("ac_nonsimple needs a non-simple morphism");
  require_positive(n);
  if (n > w_stage_length_nonsimple(m, k)) {
    throw IndexError("n = " + n.str() + " exceeds |w^(" + std::to_string(k) + ")|");
  }
  const UDigits d = normal_u_rep(m, n, k + 1);
  const UDigits e = normal_u_rep(m, u_value(m, k + 1) - n, k + 1);
  BigInt value = 1 + u_value(m, k);
  for (std::size_t j = 1; j <= k; ++j) {
    value -= u_value(m, j - 1) * (d.at_power(j) + e.at_power(j));
  }
  return checked_value(value);
}

Mat2 alternating_power_sum(const Morphism& m, std::size_t stages) {
  Mat2 sum = Mat2::zero();
  for (std::size_t i = 0; i < stages; ++i) {
    sum += m.power(2 * i + 1);
    sum -= m.power(2 * i);
  }
  return sum;
}

unsigned ac_simple(const Morphism& m, const BigInt& n) {
  if (!m.is_simple()) throw FamilyMismatch("ac_simple needs a simple morphism");
  if (m.q() == 1) throw UnsupportedConstruction("ac_simple needs q > 1; use ac() for q = 1");
  require_positive(n);

  const SimpleStages s = choose_mn_simple(m, n);
  const std::size_t places = s.top + 1;
  const auto w_stage = static_cast<std::size_t>(s.w_stage.value);

  const UDigits c = normal_u_rep(
      m, checked_residual(n, wv_stage_length_simple(m, Extremal::W, s.w_stage)), places);
  const UDigits d = normal_u_rep(
      m, checked_residual(n, wv_stage_length_simple(m, Extremal::V, s.v_stage)), places);

  // M - N + 1 is 0 or 1.
  const BigInt extra = s.v_stage.value - s.w_stage.value + 1;
  Mat2 total = (alternating_power_sum(m, w_stage) - m.power(2 * w_stage) * extra) * (m.q() - 1);
  for (std::size_t i = 0; i < places; ++i) {
    const BigInt diff = BigInt(c.at_power(i)) - d.at_power(i);
    if (diff != 0) total += m.power(i) * diff;
  }
  return checked_value(2 + total(0, 1));
}

ACResult ac(const Morphism& m, const BigInt& n) {
  require_positive(n);
  if (m.is_simple() && m.q() == 1) return {n, 2, Method::Sturmian};
  const unsigned value = m.is_simple() ? ac_simple(m, n) : ac_nonsimple(m, n);
  return {n, value, Method::ClosedForm};
}

unsigned ac_via_prefix_counts(const Morphism& m, const BigInt& n) {
  require_positive(n);
  if (!m.is_simple()) {
    const BigInt w_count = w_b_count_nonsimple(m, n, choose_k_nonsimple(m, n));
    return checked_value(1 + w_count - prefix_b_count(m, n));
  }
  const SimpleStages s = choose_mn_simple(m, n);
  return checked_value(1 + w_b_count_simple(m, n, s.w_stage) - v_b_count_simple(m, n, s.v_stage));
}

unsigned max_ac(const Morphism& m) {
  const unsigned p = m.p();
  const unsigned q = m.q();
  if (m.is_simple()) return 2 + (p - 1) / (p + 1 - q);
  return 1 + (p - 1 + q - 1) / q;
}

unsigned balance_bound(const Morphism& m) { return max_ac(m) - 1; }

}  // namespace parryac
