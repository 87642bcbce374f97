#ifndef PARRYAC_MORPHISM_HPP
#define PARRYAC_MORPHISM_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string_view>

#include "parryac/matrix.hpp"
#include "parryac/word.hpp"

namespace parryac {

// Simple:     A -> A^p B, B -> A^q     (p >= q >= 1)
// Non-simple: A -> A^p B, B -> A^q B   (p > q >= 1)
enum class Family { Simple, NonSimple };

std::string_view to_string(Family f) noexcept;
// Accepts "simple" and "nonsimple"; throws ParameterError otherwise.
Family parse_family(std::string_view text);

namespace detail {
struct PowerCache;
}

class Morphism {
 public:
  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t q() const noexcept { return q_; }
  Family family() const noexcept { return family_; }

  bool is_simple() const noexcept { return family_ == Family::Simple; }
  // Simple with q = 1 or non-simple with p = q + 1: the fixed point is Sturmian.
  bool is_sturmian() const noexcept;

  const FiniteWord& image(Letter l) const noexcept { return l == Letter::A ? image_a_ : image_b_; }

  // M^k, computed once per k and shared by every copy of this morphism.
  // Thread-safe; the returned reference stays valid for the morphism's lifetime.
  const Mat2& power(std::size_t k) const;

  friend bool operator==(const Morphism& l, const Morphism& r) noexcept {
    return l.p_ == r.p_ && l.q_ == r.q_ && l.family_ == r.family_;
  }

 private:
  friend Morphism make_morphism(std::uint32_t p, std::uint32_t q, Family family);
  Morphism(std::uint32_t p, std::uint32_t q, Family family);

  std::uint32_t p_;
  std::uint32_t q_;
  Family family_;
  FiniteWord image_a_;
  FiniteWord image_b_;
  std::shared_ptr<detail::PowerCache> powers_;
};

// Throws ParameterError naming the violated inequality.
Morphism make_morphism(std::uint32_t p, std::uint32_t q, Family family);

FiniteWord apply(const Morphism& m, const FiniteWord& w);

IncidenceMatrix incidence_matrix(const Morphism& m);

// Psi(phi(u)) = Psi(u) * M.
ParikhVector parikh_image(const Morphism& m, const ParikhVector& pv);

inline constexpr std::size_t kDefaultPrefixCap = std::size_t{1} << 28;

// Length-len prefix of the fixed point u = lim phi^n(A). Throws ResourceError
// when len > cap.
FiniteWord fixed_point_prefix(const Morphism& m, std::size_t len,
                              std::size_t cap = kDefaultPrefixCap);

}  // namespace parryac

#endif  // PARRYAC_MORPHISM_HPP
