#include <doctest.h>

#include <chrono>
#include <vector>

#include "naive.hpp"
#include "parryac/complexity.hpp"
#include "parryac/errors.hpp"
#include "parryac/extremal.hpp"

using namespace parryac;

namespace {

std::vector<Morphism> grid() {
  std::vector<Morphism> out;
  for (std::uint32_t p = 2; p <= 5; ++p) {
    for (std::uint32_t q = 1; q <= p; ++q) {
      if (q > 1) out.push_back(make_morphism(p, q, Family::Simple));
      if (q < p) out.push_back(make_morphism(p, q, Family::NonSimple));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("ac_nonsimple examples") {
  CHECK(ac_nonsimple(make_morphism(3, 1, Family::NonSimple), 7) == 3);
  CHECK(ac_nonsimple(make_morphism(2, 1, Family::NonSimple), 10) == 2);
  CHECK(ac_nonsimple(make_morphism(3, 1, Family::NonSimple), 1) == 2);
  CHECK_THROWS_AS(ac_nonsimple(make_morphism(3, 2, Family::Simple), 7), FamilyMismatch);
  CHECK_THROWS_AS(ac_nonsimple(make_morphism(3, 1, Family::NonSimple), 0), DomainError);
  CHECK_THROWS_AS(ac_nonsimple(make_morphism(3, 1, Family::NonSimple), 10, 2), IndexError);
}

TEST_CASE("ac_simple examples") {
  const auto m = make_morphism(3, 2, Family::Simple);
  CHECK(ac_simple(m, 7) == 2);
  CHECK(ac_simple(m, 5) == 3);
  CHECK(ac_simple(m, 1) == 2);
  CHECK_THROWS_AS(ac_simple(make_morphism(3, 1, Family::Simple), 7), UnsupportedConstruction);
  CHECK_THROWS_AS(ac_simple(make_morphism(3, 1, Family::NonSimple), 7), FamilyMismatch);
}

TEST_CASE("ac dispatch") {
  const ACResult sturmian = ac(make_morphism(4, 1, Family::Simple), 1'000'000);
  CHECK(sturmian.value == 2);
  CHECK(sturmian.method == Method::Sturmian);
  CHECK(sturmian.n == 1'000'000);

  const ACResult non = ac(make_morphism(3, 1, Family::NonSimple), 7);
  CHECK(non.value == 3);
  CHECK(non.method == Method::ClosedForm);
  CHECK(ac(make_morphism(3, 2, Family::Simple), 7).value == 2);
  CHECK_THROWS_WITH_AS(ac(make_morphism(3, 2, Family::Simple), 0),
                       doctest::Contains("positive integers"), DomainError);
  CHECK(to_string(Method::ClosedForm) == "closed_form");
  CHECK(to_string(Method::Sturmian) == "sturmian");
}

TEST_CASE("ac_via_prefix_counts examples") {
  CHECK(ac_via_prefix_counts(make_morphism(3, 1, Family::NonSimple), 7) == 3);
  CHECK(ac_via_prefix_counts(make_morphism(3, 2, Family::Simple), 7) == 2);
  CHECK(ac_via_prefix_counts(make_morphism(3, 2, Family::Simple), 2) == 2);
  CHECK_THROWS_AS(ac_via_prefix_counts(make_morphism(3, 1, Family::Simple), 2),
                  UnsupportedConstruction);
}

TEST_CASE("max_ac and balance_bound") {
  CHECK(max_ac(make_morphism(3, 1, Family::NonSimple)) == 3);
  CHECK(max_ac(make_morphism(3, 2, Family::Simple)) == 3);
  CHECK(max_ac(make_morphism(4, 1, Family::Simple)) == 2);
  CHECK(balance_bound(make_morphism(3, 1, Family::NonSimple)) == 2);
  CHECK(balance_bound(make_morphism(2, 1, Family::NonSimple)) == 1);
  CHECK(balance_bound(make_morphism(3, 2, Family::Simple)) == 2);
}

TEST_CASE("closed form equals the prefix-difference form and stays in the envelope") {
  for (const auto& m : grid()) {
    const unsigned bound = max_ac(m);
    for (int n = 1; n <= 2'000; ++n) {
      const unsigned value = ac(m, n).value;
      REQUIRE(value == ac_via_prefix_counts(m, n));
      CHECK(value >= 2);
      CHECK(value <= bound);
    }
  }
}

TEST_CASE("closed form equals naive window enumeration for small n") {
  for (const auto& m : grid()) {
    const naive::Rule rule{m.p(), m.q(), m.is_simple()};
    const std::string u = rule.fixed_point(10'000);
    for (std::size_t n = 1; n <= 40; ++n) {
      const auto [lo, hi] = naive::window_b_range(u, n);
      REQUIRE(ac(m, n).value == 1 + hi - lo);
    }
  }
}

TEST_CASE("non-simple closed form does not depend on the admissible k") {
  for (const auto& m : grid()) {
    if (m.is_simple()) continue;
    for (int n = 1; n <= 2'000; ++n) {
      const unsigned value = ac_nonsimple(m, n);
      const auto k = choose_k_nonsimple(m, n);
      CHECK(ac_nonsimple(m, n, k + 1) == value);
      std::size_t k_min = 0;
      while (w_stage_length_nonsimple(m, k_min) < n) ++k_min;
      CHECK(ac_nonsimple(m, n, k_min) == value);
    }
  }
}

TEST_CASE("Sturmian cases are constant 2") {
  for (std::uint32_t p = 1; p <= 5; ++p) {
    const auto m = make_morphism(p, 1, Family::Simple);
    CHECK(m.is_sturmian());
    CHECK(max_ac(m) == 2);
    for (int n = 1; n <= 200; ++n) CHECK(ac(m, n).value == 2);
  }
  for (std::uint32_t q = 1; q <= 4; ++q) {
    const auto m = make_morphism(q + 1, q, Family::NonSimple);
    CHECK(m.is_sturmian());
    for (int n = 1; n <= 2'000; ++n) CHECK(ac(m, n).value == 2);
    CHECK(ac(m, parse_decimal("1000000000000000000")).value == 2);
  }
}

TEST_CASE("alternating power sum satisfies (M + I) S = M^(2N) - I") {
  for (const auto& m : grid()) {
    const Mat2 shift = incidence_matrix(m) + Mat2::identity();
    for (std::size_t stages = 0; stages <= 10; ++stages) {
      const Mat2 s = alternating_power_sum(m, stages);
      const Mat2 rhs = m.power(2 * stages) - Mat2::identity();
      CHECK(shift * s == rhs);
      CHECK(s * shift == rhs);
    }
  }
}

TEST_CASE("50-digit n is fast and both forms agree") {
  const BigInt n = parse_decimal("31415926535897932384626433832795028841971693993751");
  for (const auto& m : grid()) {
    const auto start = std::chrono::steady_clock::now();
    const unsigned value = ac(m, n).value;
    const auto elapsed = std::chrono::steady_clock::now() - start;
    CHECK(elapsed < std::chrono::seconds(1));
    CHECK(value == ac_via_prefix_counts(m, n));
    CHECK(value >= 2);
    CHECK(value <= max_ac(m));
  }
}
