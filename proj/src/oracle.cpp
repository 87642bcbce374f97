#include "parryac/oracle.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <string>

namespace parryac {

namespace {

std::size_t clip(const BigInt& v, std::size_t cap) {
  return v >= cap ? cap : static_cast<std::size_t>(v);
}

}  // namespace

Oracle::Oracle(Morphism m, OracleLimits limits)
    : m_(m), limits_(limits), stream_(std::move(m), StreamTarget::UBeta) {
  cum_b_.push_back(0);
}

void Oracle::ensure_prefix(std::size_t len) {
  if (len > limits_.prefix_cap) {
    throw ResourceError("prefix length " + std::to_string(len) + " exceeds cap " +
                        std::to_string(limits_.prefix_cap));
  }
  const std::size_t have = cum_b_.size() - 1;
  if (len <= have) return;
  scratch_.truncate(0);
  stream_.emit(len - have, scratch_);
  cum_b_.reserve(len + 1);
  std::uint32_t running = cum_b_.back();
  for (Letter l : scratch_) {
    running += l == Letter::B ? 1U : 0U;
    cum_b_.push_back(running);
  }
}

ParikhInterval Oracle::extrema(std::size_t n, std::size_t prefix_len) {
  if (n == 0) throw ArgumentError("window length must be positive");
  if (n > prefix_len) {
    throw ArgumentError("window length " + std::to_string(n) + " exceeds prefix length " +
                        std::to_string(prefix_len));
  }
  ensure_prefix(prefix_len);
  std::uint32_t lo = std::numeric_limits<std::uint32_t>::max();
  std::uint32_t hi = 0;
  for (std::size_t start = 0; start + n <= prefix_len; ++start) {
    const std::uint32_t b = cum_b_[start + n] - cum_b_[start];
    lo = std::min(lo, b);
    hi = std::max(hi, b);
  }
  return {n, lo, hi, prefix_len, false};
}

std::vector<ParikhVector> Oracle::parikh_set(std::size_t n, std::size_t prefix_len) {
  const ParikhInterval range = extrema(n, prefix_len);
  std::set<std::uint32_t> seen;
  for (std::size_t start = 0; start + n <= prefix_len; ++start) {
    seen.insert(cum_b_[start + n] - cum_b_[start]);
    if (seen.size() == range.ac()) break;
  }
  std::vector<ParikhVector> out;
  out.reserve(seen.size());
  for (auto b : seen) out.push_back({BigInt(n - b), BigInt(b)});
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t Oracle::initial_prefix_length(std::size_t n) const {
  // Lengths of phi^j(A) and phi^j(B) from Parikh vectors alone.
  ParikhVector a_image{1, 0};
  ParikhVector b_image{0, 1};
  BigInt w_length = 1;
  std::size_t top = 0;
  std::vector<BigInt> u_lengths{1};
  std::vector<BigInt> w_lengths{1};
  auto extend = [&] {
    a_image = parikh_image(m_, a_image);
    b_image = parikh_image(m_, b_image);
    w_length += b_image.length();
    u_lengths.push_back(a_image.length());
    w_lengths.push_back(w_length);
  };
  extend();
  while (n >= u_lengths[top + 1]) {
    ++top;
    extend();
  }
  while (u_lengths.size() <= top + 2) extend();

  BigInt initial = std::max(BigInt(4) * n, u_lengths[top + 2]);
  if (!m_.is_simple()) initial = std::max(initial, w_lengths[top + 2]);
  return clip(initial, limits_.prefix_cap);
}

ParikhInterval Oracle::stabilized(std::size_t n) {
  if (n == 0) throw ArgumentError("window length must be positive");
  if (n > limits_.max_n) {
    throw ArgumentError("n = " + std::to_string(n) + " exceeds oracle cap " +
                        std::to_string(limits_.max_n));
  }
  if (n > limits_.prefix_cap) {
    throw InstabilityError("prefix cap below window length", {n, 0, 0, 0, false});
  }

  std::size_t len = initial_prefix_length(n);
  std::size_t next_start = 0;
  std::uint32_t lo = std::numeric_limits<std::uint32_t>::max();
  std::uint32_t hi = 0;
  std::vector<ParikhInterval> history;
  for (;;) {
    ensure_prefix(len);
    for (; next_start + n <= len; ++next_start) {
      const std::uint32_t b = cum_b_[next_start + n] - cum_b_[next_start];
      lo = std::min(lo, b);
      hi = std::max(hi, b);
    }
    history.push_back({n, lo, hi, len, false});
    const std::size_t h = history.size();
    if (h >= 3 && history[h - 1].same_range(history[h - 2]) &&
        history[h - 2].same_range(history[h - 3])) {
      history.back().stabilized = true;
      return history.back();
    }
    if (len >= limits_.prefix_cap) {
      throw InstabilityError("no stable interval for n = " + std::to_string(n) +
                                 " within prefix cap " + std::to_string(limits_.prefix_cap),
                             history.back());
    }
    len = len > limits_.prefix_cap / 2 ? limits_.prefix_cap : 2 * len;
  }
}

ParikhInterval parikh_extrema(const Morphism& m, std::size_t n, std::size_t prefix_len) {
  return Oracle(m).extrema(n, prefix_len);
}

std::vector<ParikhVector> parikh_set(const Morphism& m, std::size_t n, std::size_t prefix_len) {
  return Oracle(m).parikh_set(n, prefix_len);
}

ParikhInterval oracle_ac(const Morphism& m, std::size_t n, OracleLimits limits) {
  return Oracle(m, limits).stabilized(n);
}

}  // namespace parryac
