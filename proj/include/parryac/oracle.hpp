#ifndef PARRYAC_ORACLE_HPP
#define PARRYAC_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "parryac/errors.hpp"
#include "parryac/morphism.hpp"
#include "parryac/stream.hpp"

// Brute-force Abelian complexity by scanning every length-n window of a
// generated prefix of u. Depends on nothing but the morphism and the word
// generator, so it can be used to check the closed forms.

namespace parryac {

// Range of B counts over the length-n windows of a prefix. Every value in
// [min_b, max_b] is realized because neighbouring windows differ by at most one.
struct ParikhInterval {
  std::size_t n = 0;
  std::size_t min_b = 0;
  std::size_t max_b = 0;
  std::size_t prefix_len_used = 0;
  bool stabilized = false;

  std::size_t ac() const noexcept { return 1 + max_b - min_b; }
  bool same_range(const ParikhInterval& o) const noexcept {
    return n == o.n && min_b == o.min_b && max_b == o.max_b;
  }
};

class InstabilityError : public Error {
 public:
  InstabilityError(const std::string& what, ParikhInterval last)
      : Error(what), last_(last) {}
  const ParikhInterval& last_interval() const noexcept { return last_; }

 private:
  ParikhInterval last_;
};

struct OracleLimits {
  std::size_t max_n = 100'000;
  std::size_t prefix_cap = kDefaultPrefixCap;
};

// Holds a growing prefix of u as cumulative B counts and answers window
// queries against it. Single-owner; use one instance per thread.
class Oracle {
 public:
  explicit Oracle(Morphism m, OracleLimits limits = {});

  const Morphism& morphism() const noexcept { return m_; }

  // Min/max B count over windows of length n in u[0, prefix_len).
  // Throws ArgumentError if n = 0 or n > prefix_len, ResourceError past the cap.
  ParikhInterval extrema(std::size_t n, std::size_t prefix_len);

  // Distinct Parikh vectors (|x|_A, |x|_B) of those windows, ascending.
  std::vector<ParikhVector> parikh_set(std::size_t n, std::size_t prefix_len);

  // Scans u[0, L), u[0, 2L), u[0, 4L), ... from L = initial_prefix_length(n)
  // until three consecutive scans agree. Throws InstabilityError if the
  // prefix cap is hit first, ArgumentError if n is 0 or above max_n.
  ParikhInterval stabilized(std::size_t n);

  // max(4n, U_{J+2}, and for non-simple |w^(J+2)|) clipped to the cap,
  // where U_J <= n < U_{J+1}.
  std::size_t initial_prefix_length(std::size_t n) const;

 private:
  void ensure_prefix(std::size_t len);

  Morphism m_;
  OracleLimits limits_;
  WordStream stream_;
  FiniteWord scratch_;
  std::vector<std::uint32_t> cum_b_;  // cum_b_[i] = |u[0, i)|_B
};

ParikhInterval parikh_extrema(const Morphism& m, std::size_t n, std::size_t prefix_len);
std::vector<ParikhVector> parikh_set(const Morphism& m, std::size_t n, std::size_t prefix_len);
ParikhInterval oracle_ac(const Morphism& m, std::size_t n, OracleLimits limits = {});

}  // namespace parryac

#endif  // PARRYAC_ORACLE_HPP
