#include "parryac/extremal.hpp"

#include <string>

#include "parryac/errors.hpp"
#include "parryac/numeration.hpp"
#include "parryac/stream.hpp"

namespace parryac {

namespace {

void require_nonsimple(const Morphism& m, const char* op) {
  if (m.is_simple()) throw FamilyMismatch(std::string(op) + " needs a non-simple morphism");
}

void require_simple_q_above_one(const Morphism& m, const char* op) {
  if (!m.is_simple()) throw FamilyMismatch(std::string(op) + " needs a simple morphism");
  if (m.q() == 1) {
    throw UnsupportedConstruction(std::string(op) + ": no v/w construction for q = 1");
  }
}

void require_positive(const BigInt& n, const char* op) {
  if (n < 1) throw DomainError(std::string(op) + " needs n >= 1, got " + n.str());
}

void require_within_cap(std::size_t len, std::size_t cap) {
  if (len > cap) {
    throw ResourceError("prefix length " + std::to_string(len) + " exceeds cap " +
                        std::to_string(cap));
  }
}

// |phi^j(B)| = (0,1) M^j (1,1)^T.
BigInt b_image_length(const Morphism& m, std::size_t j) {
  const Mat2& pj = m.power(j);
  return pj(1, 0) + pj(1, 1);
}

// (q-1) * sum_{i=0..last} (1,0) M^{2i + offset} (0,1)^T; empty when last < 0.
BigInt stage_b_sum(const Morphism& m, std::int64_t last, std::size_t offset) {
  BigInt sum = 0;
  for (std::int64_t i = 0; i <= last; ++i) {
    sum += u_b_count(m, 2 * static_cast<std::size_t>(i) + offset);
  }
  return sum * (m.q() - 1);
}

}  // namespace

FiniteWord w_prefix_nonsimple(const Morphism& m, std::size_t len, std::size_t cap) {
  require_nonsimple(m, "w_prefix_nonsimple");
  require_within_cap(len, cap);
  return WordStream(m, StreamTarget::W).take(len);
}

BigInt w_stage_length_nonsimple(const Morphism& m, std::size_t stage) {
  require_nonsimple(m, "w_stage_length_nonsimple");
  BigInt len = 1;
  for (std::size_t j = 1; j <= stage; ++j) len += b_image_length(m, j);
  return len;
}

std::size_t choose_k_nonsimple(const Morphism& m, const BigInt& n) {
  require_nonsimple(m, "choose_k_nonsimple");
  require_positive(n, "choose_k_nonsimple");
  return greedy_top_index(m, n) + 2;
}

BigInt w_b_count_nonsimple(const Morphism& m, const BigInt& n, std::size_t k) {
  require_nonsimple(m, "w_b_count_nonsimple");
  require_positive(n, "w_b_count_nonsimple");
  if (n > w_stage_length_nonsimple(m, k)) {
    throw IndexError("n = " + n.str() + " exceeds |w^(" + std::to_string(k) + ")|");
  }
  const UDigits e = normal_u_rep(m, u_value(m, k + 1) - n, k + 1);
  BigInt count = u_value(m, k);
  for (std::size_t j = 1; j <= k; ++j) count -= u_value(m, j - 1) * e.at_power(j);
  return count;
}

FiniteWord wv_prefix_simple(const Morphism& m, Extremal which, std::size_t len, std::size_t cap) {
  require_simple_q_above_one(m, "wv_prefix_simple");
  require_within_cap(len, cap);
  return WordStream(m, which == Extremal::W ? StreamTarget::W : StreamTarget::V).take(len);
}

BigInt wv_stage_length_simple(const Morphism& m, Extremal which, StageIndex idx) {
  require_simple_q_above_one(m, "wv_stage_length_simple");
  const std::int64_t lowest = which == Extremal::V ? -1 : 0;
  if (idx.value < lowest) {
    throw ArgumentError("stage index " + std::to_string(idx.value) + " below " +
                        std::to_string(lowest));
  }
  BigInt sum = 0;
  if (which == Extremal::V) {
    for (std::int64_t j = 0; j <= idx.value; ++j) sum += u_value(m, 2 * static_cast<std::size_t>(j));
  } else {
    for (std::int64_t j = 0; j < idx.value; ++j) {
      sum += u_value(m, 2 * static_cast<std::size_t>(j) + 1);
    }
  }
  return 1 + sum * (m.q() - 1);
}

SimpleStages choose_mn_simple(const Morphism& m, const BigInt& n) {
  require_simple_q_above_one(m, "choose_mn_simple");
  require_positive(n, "choose_mn_simple");
  const std::size_t top = greedy_top_index(m, n);
  const auto half = static_cast<std::int64_t>(top / 2);
  SimpleStages s{{}, {}, top};
  if (top % 2 == 0) {
    s.w_stage = {half};
    s.v_stage = wv_stage_length_simple(m, Extremal::V, {half}) <= n ? StageIndex{half}
                                                                     : StageIndex{half - 1};
  } else {
    s.v_stage = {half};
    s.w_stage = wv_stage_length_simple(m, Extremal::W, {half + 1}) <= n ? StageIndex{half + 1}
                                                                         : StageIndex{half};
  }
  return s;
}

BigInt v_b_count_simple(const Morphism& m, const BigInt& n, StageIndex v_stage) {
  require_simple_q_above_one(m, "v_b_count_simple");
  require_positive(n, "v_b_count_simple");
  const BigInt start = wv_stage_length_simple(m, Extremal::V, v_stage);
  if (n < start || n >= wv_stage_length_simple(m, Extremal::V, {v_stage.value + 1})) {
    throw StageMismatch("v stage " + std::to_string(v_stage.value) + " does not bracket n = " +
                        n.str());
  }
  return stage_b_sum(m, v_stage.value, 0) + digits_b_count(m, normal_u_rep(m, n - start));
}

BigInt w_b_count_simple(const Morphism& m, const BigInt& n, StageIndex w_stage) {
  require_simple_q_above_one(m, "w_b_count_simple");
  require_positive(n, "w_b_count_simple");
  if (w_stage.value < 0) throw StageMismatch("w stage index must be nonnegative");
  const BigInt start = wv_stage_length_simple(m, Extremal::W, w_stage);
  if (n < start || n >= wv_stage_length_simple(m, Extremal::W, {w_stage.value + 1})) {
    throw StageMismatch("w stage " + std::to_string(w_stage.value) + " does not bracket n = " +
                        n.str());
  }
  return 1 + stage_b_sum(m, w_stage.value - 1, 1) + digits_b_count(m, normal_u_rep(m, n - start));
}

}  // namespace parryac
