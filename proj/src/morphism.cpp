#include "parryac/morphism.hpp"

#include <deque>
#include <mutex>
#include <string>

#include "parryac/errors.hpp"
#include "parryac/stream.hpp"

namespace parryac {

namespace detail {

// Append-only; std::deque keeps references to earlier powers valid.
struct PowerCache {
  explicit PowerCache(Mat2 base) : base(std::move(base)) { powers.push_back(Mat2::identity()); }

  Mat2 base;
  std::mutex mutex;
  std::deque<Mat2> powers;
};

}  // namespace detail

std::string_view to_string(Family f) noexcept {
  return f == Family::Simple ? "simple" : "nonsimple";
}

Family parse_family(std::string_view text) {
  if (text == "simple") return Family::Simple;
  if (text == "nonsimple" || text == "non-simple") return Family::NonSimple;
  throw ParameterError("unknown family '" + std::string(text) + "' (expected simple|nonsimple)");
}

Morphism::Morphism(std::uint32_t p, std::uint32_t q, Family family)
    : p_(p), q_(q), family_(family) {
  image_a_.append_repeated(Letter::A, p);
  image_a_.push_back(Letter::B);
  image_b_.append_repeated(Letter::A, q);
  if (family == Family::NonSimple) image_b_.push_back(Letter::B);
  powers_ = std::make_shared<detail::PowerCache>(incidence_matrix(*this));
}

bool Morphism::is_sturmian() const noexcept {
  return family_ == Family::Simple ? q_ == 1 : p_ == q_ + 1;
}

const Mat2& Morphism::power(std::size_t k) const {
  std::lock_guard lock(powers_->mutex);
  auto& powers = powers_->powers;
  while (powers.size() <= k) powers.push_back(powers.back() * powers_->base);
  return powers[k];
}

Morphism make_morphism(std::uint32_t p, std::uint32_t q, Family family) {
  const std::string tag = "(p=" + std::to_string(p) + ", q=" + std::to_string(q) + ", " +
                          std::string(to_string(family)) + ")";
  if (p < 1) throw ParameterError("p >= 1 violated " + tag);
  if (q < 1) throw ParameterError("q >= 1 violated " + tag);
  if (family == Family::Simple && p < q) throw ParameterError("p >= q violated " + tag);
  if (family == Family::NonSimple && p <= q) throw ParameterError("p > q violated " + tag);
  return Morphism(p, q, family);
}

FiniteWord apply(const Morphism& m, const FiniteWord& w) {
  const auto pv = parikh(w);
  FiniteWord out;
  out.reserve(static_cast<std::size_t>(pv.count_a) * m.image(Letter::A).size() +
              static_cast<std::size_t>(pv.count_b) * m.image(Letter::B).size());
  for (Letter l : w) out.append(m.image(l));
  return out;
}

IncidenceMatrix incidence_matrix(const Morphism& m) {
  return {m.p(), 1, m.q(), m.family() == Family::NonSimple ? 1 : 0};
}

ParikhVector parikh_image(const Morphism& m, const ParikhVector& pv) {
  return pv * m.power(1);
}

FiniteWord fixed_point_prefix(const Morphism& m, std::size_t len, std::size_t cap) {
  if (len > cap) {
    throw ResourceError("prefix length " + std::to_string(len) + " exceeds cap " +
                        std::to_string(cap));
  }
  return WordStream(m, StreamTarget::UBeta).take(len);
}

}  // namespace parryac
